#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "designlab/exact_matrix.hpp"

namespace designlab {

using Point = std::size_t;
/// Sorted, duplicate-free list of point indices.
using Block = std::vector<Point>;

class MalformedSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An ordered incidence set system on the points 0..v-1.
///
/// The block list is ordered and may repeat blocks; each block is a set.
/// Construction normalizes every block to sorted order and rejects points
/// outside 0..v-1 or repeated within one block, so every instance is
/// wellformed.
class IncidenceSystem {
 public:
  IncidenceSystem() = default;
  IncidenceSystem(std::size_t v, std::vector<Block> blocks);

  std::size_t point_count() const { return v_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t j) const;
  bool contains(std::size_t j, Point x) const;

  friend bool operator==(const IncidenceSystem&, const IncidenceSystem&) = default;

 private:
  std::size_t v_ = 0;
  std::vector<Block> blocks_;
};

/// Parameters and subtype flags of a system, all found by exhaustive counting.
struct DesignClass {
  bool is_wellformed = true;
  bool is_design = false;  ///< no empty blocks
  bool is_simple = false;  ///< no repeated blocks
  std::optional<std::size_t> uniform_k;
  std::optional<std::size_t> regular_r;
  /// Constant index over all point pairs; only reported when v >= 2 and the index is >= 1.
  std::optional<std::size_t> pbd_lambda;
  /// False when there are fewer than two blocks, in which case const_intersect_k is empty.
  bool intersect_determined = false;
  std::optional<std::size_t> const_intersect_k;
  bool is_incomplete = false;
  bool is_bibd = false;
};

/// A matrix over any domain whose entries are all 0 or 1.
class IncidenceMatrix01 {
 public:
  /// Throws std::invalid_argument if some entry is neither 0 nor 1.
  explicit IncidenceMatrix01(ExactMatrix m);

  const ExactMatrix& matrix() const { return m_; }
  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  const Domain& domain() const { return m_.domain(); }
  bool is_one(std::size_t i, std::size_t j) const { return m_(i, j).is_one(); }

  friend bool operator==(const IncidenceMatrix01&, const IncidenceMatrix01&) = default;

 private:
  ExactMatrix m_;
};

/// v x b matrix with entry (i, j) = 1 iff point i lies in block j.
IncidenceMatrix01 inc_mat_of(const IncidenceSystem& s, Domain domain = Domain::integers());
/// Inverse of inc_mat_of: rows become points, columns become blocks.
IncidenceSystem system_of_mat(const IncidenceMatrix01& m);
/// Copies the 0-1 pattern into `target`.
IncidenceMatrix01 lift_01_mat(const IncidenceMatrix01& m, Domain target);

std::size_t block_size(const IncidenceSystem& s, std::size_t j);
std::size_t replication_number(const IncidenceSystem& s, Point x);
/// Number of blocks containing every point of `t`. points_index(s, {}) == b.
std::size_t points_index(const IncidenceSystem& s, std::span<const Point> t);
/// |B_i intersect B_j|; i == j gives |B_i|.
std::size_t inter_num(const IncidenceSystem& s, std::size_t i, std::size_t j);

std::size_t mat_rep_num(const IncidenceMatrix01& m, std::size_t i);
std::size_t mat_block_size(const IncidenceMatrix01& m, std::size_t j);
/// Column dot product, counted over the naturals.
std::size_t mat_inter_num(const IncidenceMatrix01& m, std::size_t i, std::size_t j);
std::size_t mat_point_index(const IncidenceMatrix01& m, std::span<const Point> t);

DesignClass classify(const IncidenceSystem& s);

/// Every block B becomes {0..v-1} - B.
IncidenceSystem complement(const IncidenceSystem& s);

/// Points and blocks swap roles: the dual has b points, and its block n
/// holds the indices of the blocks containing point n. Repeated blocks turn
/// into distinct dual points.
IncidenceSystem dual(const IncidenceSystem& s);

/// True iff a point relabeling plus a block reordering maps s1 onto s2.
///
/// This is a backtracking search over point bijections (restricted to points
/// of equal replication number) and costs up to v! steps; keep v small
/// (about 8 or less) unless the systems are highly irregular.
bool are_isomorphic(const IncidenceSystem& s1, const IncidenceSystem& s2);

}  // namespace designlab
