#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "designlab/exact_matrix.hpp"
#include "designlab/incidence.hpp"

namespace designlab {

enum class Technique { rank_argument, linear_bound };

/// lhs <= rhs, both plain counts.
struct Inequality {
  std::size_t lhs = 0;
  std::size_t rhs = 0;

  bool holds() const { return lhs <= rhs; }
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Evidence for a rank-argument or linear-bound conclusion that can be
/// checked again without trusting the code that produced it.
struct BoundCertificate {
  Technique technique = Technique::rank_argument;
  std::pair<std::size_t, std::size_t> matrix_dims;
  /// det(N N^T); only set by the rank argument.
  std::optional<Scalar> square_det;
  std::size_t rank_value = 0;
  Domain domain = Domain::rationals();
  Inequality inequality;
};

/// The rank argument does not apply: det(N N^T) vanishes.
class RankArgumentInapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LinearBoundFailure : public std::runtime_error {
 public:
  enum class Reason { distinctness_violated, linearly_dependent };

  LinearBoundFailure(Reason reason, std::size_t rank, const std::string& what)
      : std::runtime_error(what), reason_(reason), rank_(rank) {}

  Reason reason() const { return reason_; }
  /// Rank of the assembled column matrix; the witness for dependence.
  std::size_t rank() const { return rank_; }

 private:
  Reason reason_;
  std::size_t rank_;
};

/// The input does not satisfy a theorem's hypotheses.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rows <= cols of N over a field, certified by det(N N^T) != 0 and
/// rank(N N^T) <= min(rank N, rank N^T) <= cols.
///
/// Throws RankArgumentInapplicable when det(N N^T) = 0 and DomainError when
/// N is not over a field.
BoundCertificate rank_argument(const ExactMatrix& n);

/// k <= m for k pairwise distinct, linearly independent vectors of
/// dimension m over a field. Independence is certified by the rank of the
/// m x k matrix with the vectors as columns.
///
/// Throws LinearBoundFailure on duplicates or dependence, DomainError or
/// std::invalid_argument when a vector's domain or dimension disagrees.
BoundCertificate linear_bound(std::span<const ExactVector> vectors, std::size_t dimension,
                              Domain domain = Domain::rationals());

/// Checks N N^T = lambda J + (r - lambda) I for a regular pairwise balanced
/// system and returns (r, lambda). Throws HypothesisError when the system is
/// not regular or not pairwise balanced, std::logic_error if the identity
/// fails anyway.
std::pair<std::size_t, std::size_t> pbd_characterization_reverse(const IncidenceSystem& s);

/// Checks N N^T = lambda J + (r - lambda) I for a 0-1 matrix with v >= 2
/// rows and returns the system it describes. Throws HypothesisError if the
/// identity fails.
IncidenceSystem pbd_characterization_forward(const IncidenceMatrix01& m, std::size_t r, std::size_t lambda);

enum class FisherVariant { uniform, odd_town, general, dual };
enum class Verdict { bound_holds, hypotheses_violated, trivial_case };

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct FisherReport {
  FisherVariant variant = FisherVariant::uniform;
  std::vector<HypothesisCheck> hypotheses;
  std::optional<BoundCertificate> certificate;
  Verdict verdict = Verdict::hypotheses_violated;
  /// The inequality the variant claims, oriented as stated (v <= b for
  /// uniform and dual, b <= v for odd town and general). Set whenever the
  /// verdict is bound-holds or trivial-case.
  std::optional<Inequality> bound;

  /// First failed hypothesis, if any.
  const HypothesisCheck* first_failure() const;
};

FisherReport uniform_fisher(const IncidenceSystem& s);
FisherReport odd_town(const IncidenceSystem& s);
FisherReport general_fisher(const IncidenceSystem& s);
FisherReport fisher_dual(const IncidenceSystem& s);
FisherReport run_fisher(FisherVariant variant, const IncidenceSystem& s);

/// Recomputes the evidence behind a report from the system alone: the
/// determinant or rank, the matrix shape, and the inequality's v and b.
/// Reports without a bound-holds verdict re-validate trivially.
bool revalidate(const FisherReport& report, const IncidenceSystem& s);

const char* to_string(Technique t);
const char* to_string(FisherVariant v);
const char* to_string(Verdict v);
std::optional<FisherVariant> parse_variant(std::string_view name);

}  // namespace designlab
