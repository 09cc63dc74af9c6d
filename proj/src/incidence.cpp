#include "designlab/incidence.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace designlab {

namespace {

void check_index(std::size_t i, std::size_t limit, const char* what) {
  if (i >= limit) {
    throw std::out_of_range(std::string(what) + " " + std::to_string(i) + " out of range (limit " +
                            std::to_string(limit) + ")");
  }
}

// Sorted, deduplicated copy of a point subset, range-checked against v.
std::vector<Point> normalize_subset(std::span<const Point> t, std::size_t v) {
  std::vector<Point> out(t.begin(), t.end());
  for (Point x : out) check_index(x, v, "point");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <typename T>
std::optional<T> constant_value(const std::vector<T>& values) {
  if (values.empty()) return std::nullopt;
  if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) != values.end()) return std::nullopt;
  return values.front();
}

}  // namespace

IncidenceSystem::IncidenceSystem(std::size_t v, std::vector<Block> blocks) : v_(v), blocks_(std::move(blocks)) {
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    Block& b = blocks_[j];
    std::sort(b.begin(), b.end());
    if (!b.empty() && b.back() >= v_) {
      throw MalformedSystem("block " + std::to_string(j) + " contains point " + std::to_string(b.back()) +
                            " but v = " + std::to_string(v_));
    }
    if (auto dup = std::adjacent_find(b.begin(), b.end()); dup != b.end()) {
      throw MalformedSystem("block " + std::to_string(j) + " repeats point " + std::to_string(*dup));
    }
  }
}

const Block& IncidenceSystem::block(std::size_t j) const {
  check_index(j, blocks_.size(), "block");
  return blocks_[j];
}

bool IncidenceSystem::contains(std::size_t j, Point x) const {
  const Block& b = block(j);
  return std::binary_search(b.begin(), b.end(), x);
}

IncidenceMatrix01::IncidenceMatrix01(ExactMatrix m) : m_(std::move(m)) {
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      const Scalar& x = m_(i, j);
      if (!x.is_zero() && !x.is_one()) {
        throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + x.to_string() +
                                    " is not 0 or 1");
      }
    }
  }
}

IncidenceMatrix01 inc_mat_of(const IncidenceSystem& s, Domain domain) {
  return IncidenceMatrix01(mat_build(s.point_count(), s.block_count(), domain,
                                     [&](std::size_t i, std::size_t j) { return s.contains(j, i) ? 1 : 0; }));
}

IncidenceSystem system_of_mat(const IncidenceMatrix01& m) {
  std::vector<Block> blocks(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m.is_one(i, j)) blocks[j].push_back(i);
    }
  }
  return IncidenceSystem(m.rows(), std::move(blocks));
}

IncidenceMatrix01 lift_01_mat(const IncidenceMatrix01& m, Domain target) {
  const Scalar zero = Scalar::zero(target);
  const Scalar one = Scalar::one(target);
  return IncidenceMatrix01(
      mat_build(m.rows(), m.cols(), target, [&](std::size_t i, std::size_t j) { return m.is_one(i, j) ? one : zero; }));
}

std::size_t block_size(const IncidenceSystem& s, std::size_t j) { return s.block(j).size(); }

std::size_t replication_number(const IncidenceSystem& s, Point x) {
  check_index(x, s.point_count(), "point");
  return static_cast<std::size_t>(std::count_if(s.blocks().begin(), s.blocks().end(), [x](const Block& b) {
    return std::binary_search(b.begin(), b.end(), x);
  }));
}

std::size_t points_index(const IncidenceSystem& s, std::span<const Point> t) {
  const std::vector<Point> subset = normalize_subset(t, s.point_count());
  return static_cast<std::size_t>(std::count_if(s.blocks().begin(), s.blocks().end(), [&](const Block& b) {
    return std::includes(b.begin(), b.end(), subset.begin(), subset.end());
  }));
}

std::size_t inter_num(const IncidenceSystem& s, std::size_t i, std::size_t j) {
  const Block& a = s.block(i);
  const Block& b = s.block(j);
  std::size_t count = 0;
  for (auto p = a.begin(), q = b.begin(); p != a.end() && q != b.end();) {
    if (*p < *q) {
      ++p;
    } else if (*q < *p) {
      ++q;
    } else {
      ++count, ++p, ++q;
    }
  }
  return count;
}

std::size_t mat_rep_num(const IncidenceMatrix01& m, std::size_t i) {
  check_index(i, m.rows(), "row");
  std::size_t count = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) count += m.is_one(i, j);
  return count;
}

std::size_t mat_block_size(const IncidenceMatrix01& m, std::size_t j) {
  check_index(j, m.cols(), "column");
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) count += m.is_one(i, j);
  return count;
}

std::size_t mat_inter_num(const IncidenceMatrix01& m, std::size_t i, std::size_t j) {
  check_index(i, m.cols(), "column");
  check_index(j, m.cols(), "column");
  std::size_t count = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) count += m.is_one(r, i) && m.is_one(r, j);
  return count;
}

std::size_t mat_point_index(const IncidenceMatrix01& m, std::span<const Point> t) {
  const std::vector<Point> subset = normalize_subset(t, m.rows());
  std::size_t count = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    count += std::all_of(subset.begin(), subset.end(), [&](Point x) { return m.is_one(x, j); });
  }
  return count;
}

DesignClass classify(const IncidenceSystem& s) {
  const std::size_t v = s.point_count();
  const std::size_t b = s.block_count();
  DesignClass c;

  std::vector<std::size_t> sizes;
  for (const Block& blk : s.blocks()) sizes.push_back(blk.size());
  c.is_design = std::none_of(sizes.begin(), sizes.end(), [](std::size_t k) { return k == 0; });
  c.is_incomplete = std::all_of(sizes.begin(), sizes.end(), [v](std::size_t k) { return k < v; });
  c.uniform_k = constant_value(sizes);

  std::vector<Block> sorted_blocks = s.blocks();
  std::sort(sorted_blocks.begin(), sorted_blocks.end());
  c.is_simple = std::adjacent_find(sorted_blocks.begin(), sorted_blocks.end()) == sorted_blocks.end();

  std::vector<std::size_t> reps;
  for (Point x = 0; x < v; ++x) reps.push_back(replication_number(s, x));
  c.regular_r = constant_value(reps);

  if (v >= 2) {
    std::vector<std::size_t> pair_indices;
    for (Point x = 0; x < v; ++x) {
      for (Point y = x + 1; y < v; ++y) {
        const Point pair[] = {x, y};
        pair_indices.push_back(points_index(s, pair));
      }
    }
    if (auto lambda = constant_value(pair_indices); lambda && *lambda >= 1) c.pbd_lambda = lambda;
  }

  c.intersect_determined = b >= 2;
  if (c.intersect_determined) {
    std::vector<std::size_t> intersections;
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = i + 1; j < b; ++j) intersections.push_back(inter_num(s, i, j));
    }
    c.const_intersect_k = constant_value(intersections);
  }

  c.is_bibd = c.uniform_k && *c.uniform_k >= 2 && *c.uniform_k < v && c.pbd_lambda.has_value();
  return c;
}

IncidenceSystem complement(const IncidenceSystem& s) {
  std::vector<Block> blocks;
  blocks.reserve(s.block_count());
  for (const Block& b : s.blocks()) {
    Block c;
    for (Point x = 0; x < s.point_count(); ++x) {
      if (!std::binary_search(b.begin(), b.end(), x)) c.push_back(x);
    }
    blocks.push_back(std::move(c));
  }
  return IncidenceSystem(s.point_count(), std::move(blocks));
}

IncidenceSystem dual(const IncidenceSystem& s) {
  std::vector<Block> blocks(s.point_count());
  for (std::size_t j = 0; j < s.block_count(); ++j) {
    for (Point x : s.block(j)) blocks[x].push_back(j);
  }
  return IncidenceSystem(s.block_count(), std::move(blocks));
}

bool are_isomorphic(const IncidenceSystem& s1, const IncidenceSystem& s2) {
  const std::size_t v = s1.point_count();
  if (v != s2.point_count() || s1.block_count() != s2.block_count()) return false;

  auto size_profile = [](const IncidenceSystem& s) {
    std::vector<std::size_t> out;
    for (const Block& b : s.blocks()) out.push_back(b.size());
    std::sort(out.begin(), out.end());
    return out;
  };
  if (size_profile(s1) != size_profile(s2)) return false;

  std::vector<std::size_t> rep1, rep2;
  for (Point x = 0; x < v; ++x) {
    rep1.push_back(replication_number(s1, x));
    rep2.push_back(replication_number(s2, x));
  }
  {
    auto a = rep1, b = rep2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }

  std::vector<Block> target = s2.blocks();
  std::sort(target.begin(), target.end());

  std::vector<Point> image(v);
  std::vector<bool> used(v, false);
  std::vector<Block> mapped(s1.block_count());

  auto matches = [&] {
    for (std::size_t j = 0; j < s1.block_count(); ++j) {
      mapped[j].clear();
      for (Point x : s1.block(j)) mapped[j].push_back(image[x]);
      std::sort(mapped[j].begin(), mapped[j].end());
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == target;
  };

  std::function<bool(Point)> extend = [&](Point x) -> bool {
    if (x == v) return matches();
    for (Point y = 0; y < v; ++y) {
      if (used[y] || rep1[x] != rep2[y]) continue;
      used[y] = true;
      image[x] = y;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace designlab
