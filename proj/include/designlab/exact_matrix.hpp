#pragma once

#include <cstddef>
#include <concepts>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "designlab/scalar.hpp"

namespace designlab {

/// Dense row-major matrix of exact scalars over a single domain.
///
/// Values are immutable once built; every operation below returns a new
/// matrix. Empty shapes (0 rows or 0 columns) are legal.
class ExactMatrix {
 public:
  /// rows x cols zero matrix.
  ExactMatrix(std::size_t rows, std::size_t cols, Domain domain);

  /// Takes ownership of a row-major entry grid. Every entry must already
  /// live in `domain`.
  static ExactMatrix from_entries(std::size_t rows, std::size_t cols, Domain domain, std::vector<Scalar> entries);

  /// Small integer literals, e.g. from_rows({{1, 2}, {3, 4}}, Domain::integers()).
  /// All rows must have equal length.
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows, Domain domain);

  static ExactMatrix identity(std::size_t n, Domain domain);
  static ExactMatrix ones(std::size_t rows, std::size_t cols, Domain domain);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Domain& domain() const { return domain_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  /// Bounds-checked access; throws std::out_of_range.
  const Scalar& at(std::size_t i, std::size_t j) const;
  std::span<const Scalar> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
  std::span<const Scalar> entries() const { return entries_; }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  ExactMatrix(std::size_t rows, std::size_t cols, Domain domain, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), domain_(domain), entries_(std::move(entries)) {}

  std::size_t rows_;
  std::size_t cols_;
  Domain domain_;
  std::vector<Scalar> entries_;
};

/// A column vector of exact scalars.
class ExactVector {
 public:
  ExactVector(Domain domain, std::vector<Scalar> entries);
  static ExactVector from_ints(std::initializer_list<long long> values, Domain domain);
  static ExactVector column_of(const ExactMatrix& m, std::size_t j);

  std::size_t dim() const { return entries_.size(); }
  const Domain& domain() const { return domain_; }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }

  friend bool operator==(const ExactVector&, const ExactVector&) = default;

 private:
  Domain domain_;
  std::vector<Scalar> entries_;
};

namespace detail {
inline Scalar to_scalar(const Scalar& s, Domain d) { return Scalar::convert(s, d); }
inline Scalar to_scalar(const mpz_class& z, Domain d) { return Scalar::from_integer(z, d); }
inline Scalar to_scalar(const mpq_class& q, Domain d) { return Scalar::from_rational(q, d); }
template <std::integral T>
Scalar to_scalar(T x, Domain d) {
  return Scalar::from_int(static_cast<long long>(x), d);
}
}  // namespace detail

/// Entry (i, j) is gen(i, j) normalized into `domain`. The generator may
/// return a Scalar (mapped through the canonical ring map), a builtin
/// integer, an mpz_class or an mpq_class.
template <typename Gen>
ExactMatrix mat_build(std::size_t rows, std::size_t cols, Domain domain, Gen&& gen) {
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) entries.push_back(detail::to_scalar(gen(i, j), domain));
  }
  return ExactMatrix::from_entries(rows, cols, domain, std::move(entries));
}

ExactMatrix transpose(const ExactMatrix& a);

/// Exact product. Throws std::invalid_argument on a shape mismatch and
/// DomainError on a domain mismatch.
ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix scale(const Scalar& c, const ExactMatrix& a);

/// Applies the canonical ring map entrywise (ZZ -> QQ, ZZ -> GF(p), QQ -> GF(p)).
ExactMatrix change_domain(const ExactMatrix& a, Domain target);

// Generalized elementary operations. All preserve the determinant of a
// square matrix; the index preconditions exist so that they do.

/// Row k becomes row_k + c * sum of rows in `sources`. Rejects k in `sources`.
ExactMatrix add_multiple_rows(const ExactMatrix& a, const Scalar& c, std::size_t k,
                              std::span<const std::size_t> sources);
/// Every row in `targets` gains c * row_l. Targets must be distinct and exclude l.
ExactMatrix add_row_to_multiple(const ExactMatrix& a, const Scalar& c, std::span<const std::size_t> targets,
                                std::size_t l);
ExactMatrix add_multiple_cols(const ExactMatrix& a, const Scalar& c, std::size_t k,
                              std::span<const std::size_t> sources);
ExactMatrix add_col_to_multiple(const ExactMatrix& a, const Scalar& c, std::span<const std::size_t> targets,
                                std::size_t l);

/// Fraction-free Bareiss determinant over ZZ or QQ. Rational input is
/// scaled row-wise to integers first, so every intermediate is an integer.
/// The 0x0 determinant is 1.
Scalar det_bareiss(const ExactMatrix& a);

/// Determinant by pivoted Gaussian elimination over QQ or GF(p).
Scalar det_field(const ExactMatrix& a);

/// Number of pivots in a row echelon form over QQ or GF(p).
std::size_t rank_field(const ExactMatrix& a);

/// det(a * I_v + b * J_v) = a^(v-1) * (a + v*b), for v >= 1 over ZZ or QQ.
Scalar det_aI_bJ(const Scalar& a, const Scalar& b, std::size_t v);

/// Space-separated rows, one per line; rationals print as p/q.
std::string to_string(const ExactMatrix& a);

}  // namespace designlab
