#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "designlab/incidence.hpp"

namespace designlab {

// Enumeration bounds. Raising them is safe but the search space grows
// doubly exponentially.
inline constexpr std::size_t kMaxOddTownPoints = 6;
inline constexpr std::size_t kMaxConstIntersectPoints = 5;
inline constexpr std::size_t kMaxBibdPoints = 9;

/// Called once per family; return false to stop the enumeration early.
using FamilyVisitor = std::function<bool(const IncidenceSystem&)>;

/// Every family of distinct odd-sized subsets of {0..v-1} with pairwise even
/// intersections, the empty family included. Blocks appear in increasing
/// bitmask order (point x contributes bit x). Throws std::invalid_argument
/// for v > kMaxOddTownPoints.
void enum_odd_town(std::size_t v, const FamilyVisitor& visit);

/// Every family of at least two distinct nonempty subsets of {0..v-1} whose
/// pairwise intersections share one size k >= 1. Same block order as
/// enum_odd_town. Throws std::invalid_argument for v > kMaxConstIntersectPoints.
void enum_const_intersect(std::size_t v, const FamilyVisitor& visit);

/// Up to `limit` distinct (v, k, lambda)-BIBDs, each yielded once as a
/// lexicographically sorted block multiset. Parameter sets failing the
/// divisibility conditions (integral r and b) yield nothing.
///
/// Requires 2 <= k < v <= kMaxBibdPoints and lambda >= 1.
void enum_bibd(std::size_t v, std::size_t k, std::size_t lambda, std::size_t limit, const FamilyVisitor& visit);

std::vector<IncidenceSystem> collect_odd_town(std::size_t v);
std::vector<IncidenceSystem> collect_const_intersect(std::size_t v);
std::vector<IncidenceSystem> collect_bibd(std::size_t v, std::size_t k, std::size_t lambda, std::size_t limit);

enum class FamilyKind { odd_town, const_intersect, bibd };
enum class ExhaustiveTheorem { odd_town, general_fisher, dual_fisher };

struct EnumerationReport {
  FamilyKind family_kind = FamilyKind::odd_town;
  std::size_t v = 0;
  std::size_t k = 0;       ///< bibd only
  std::size_t lambda = 0;  ///< bibd only
  std::size_t instances_checked = 0;
  std::size_t max_family_size_found = 0;
  /// One line per failing instance; empty when the theorem held everywhere.
  std::vector<std::string> violations;
  std::chrono::duration<double> wall_time{0};
};

/// Runs the matching checker on every enumerated instance.
///
/// odd_town and general_fisher check the enumerated families directly. For
/// dual_fisher the instances are the duals of all constant-intersect
/// families on v points, which are pairwise balanced designs. A violation is
/// any bound-holds report that fails revalidation, any family meeting the
/// hypotheses without a bound-holds verdict, and for odd town any GF(2)
/// column rank differing from the family size.
EnumerationReport verify_exhaustive(ExhaustiveTheorem theorem, std::size_t v);

const char* to_string(FamilyKind kind);
const char* to_string(ExhaustiveTheorem theorem);

/// "0 1 2 | 0 3 4": blocks separated by " | ". The empty family renders as "".
std::string family_line(const IncidenceSystem& s);

}  // namespace designlab
