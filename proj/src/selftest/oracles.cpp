#include "designlab/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace designlab::oracle {

namespace {

using Subset = std::vector<std::size_t>;

std::vector<Subset> nonempty_subsets(std::size_t v) {
  std::vector<Subset> out;
  for (unsigned mask = 1; mask < (1u << v); ++mask) {
    Subset s;
    for (std::size_t x = 0; x < v; ++x) {
      if (mask & (1u << x)) s.push_back(x);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t intersection_size(const Subset& a, const Subset& b) {
  std::size_t n = 0;
  for (std::size_t x : a) n += std::count(b.begin(), b.end(), x);
  return n;
}

template <typename Accept>
std::set<CanonicalFamily> filter_families(std::size_t v, Accept accept) {
  if (v > 4) throw std::invalid_argument("naive family filter is limited to v <= 4");
  const std::vector<Subset> subsets = nonempty_subsets(v);
  std::set<CanonicalFamily> out;
  for (unsigned long pick = 0; pick < (1ul << subsets.size()); ++pick) {
    CanonicalFamily family;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (pick & (1ul << i)) family.push_back(subsets[i]);
    }
    if (accept(family)) {
      std::sort(family.begin(), family.end());
      out.insert(std::move(family));
    }
  }
  return out;
}

}  // namespace

mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const mpz_class term = m[0][col] * cofactor_det(minor);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

std::vector<std::vector<long>> gram_by_dot_products(const IncidenceSystem& s) {
  const std::size_t v = s.point_count();
  std::vector<std::vector<int>> rows(v, std::vector<int>(s.block_count(), 0));
  for (std::size_t j = 0; j < s.block_count(); ++j) {
    for (std::size_t x : s.blocks()[j]) rows[x][j] = 1;
  }
  std::vector<std::vector<long>> gram(v, std::vector<long>(v, 0));
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t k = 0; k < v; ++k) {
      for (std::size_t j = 0; j < s.block_count(); ++j) gram[i][k] += rows[i][j] * rows[k][j];
    }
  }
  return gram;
}

std::size_t pair_count(const IncidenceSystem& s, std::size_t x, std::size_t y) {
  std::size_t n = 0;
  for (const Block& b : s.blocks()) {
    bool has_x = false, has_y = false;
    for (std::size_t p : b) {
      has_x |= p == x;
      has_y |= p == y;
    }
    n += has_x && has_y;
  }
  return n;
}

CanonicalFamily canonical(const IncidenceSystem& s) {
  CanonicalFamily f(s.blocks().begin(), s.blocks().end());
  std::sort(f.begin(), f.end());
  return f;
}

std::set<CanonicalFamily> naive_odd_town(std::size_t v) {
  return filter_families(v, [](const CanonicalFamily& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].size() % 2 == 0) return false;
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (intersection_size(f[i], f[j]) % 2 != 0) return false;
      }
    }
    return true;
  });
}

std::set<CanonicalFamily> naive_const_intersect(std::size_t v) {
  return filter_families(v, [](const CanonicalFamily& f) {
    if (f.size() < 2) return false;
    const std::size_t k = intersection_size(f[0], f[1]);
    if (k == 0) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        if (intersection_size(f[i], f[j]) != k) return false;
      }
    }
    return true;
  });
}

IncidenceSystem affine_plane_3() {
  // Point (x, y) of the 3x3 grid is 3x + y; a line is {p, p + d, p + 2d}.
  auto pt = [](int x, int y) { return static_cast<std::size_t>(3 * ((x % 3 + 3) % 3) + (y % 3 + 3) % 3); };
  const int directions[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  std::vector<Block> lines;
  for (const auto& d : directions) {
    std::set<Block> seen;
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        Block line = {pt(x, y), pt(x + d[0], y + d[1]), pt(x + 2 * d[0], y + 2 * d[1])};
        std::sort(line.begin(), line.end());
        if (seen.insert(line).second) lines.push_back(line);
      }
    }
  }
  return IncidenceSystem(9, std::move(lines));
}

IncidenceSystem fano_plane() {
  return IncidenceSystem(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

IncidenceSystem random_system(std::mt19937_64& rng, std::size_t max_v, std::size_t max_b) {
  const std::size_t v = std::uniform_int_distribution<std::size_t>(0, max_v)(rng);
  const std::size_t b = std::uniform_int_distribution<std::size_t>(0, max_b)(rng);
  std::bernoulli_distribution member(0.5);
  std::vector<Block> blocks(b);
  for (Block& blk : blocks) {
    for (std::size_t x = 0; x < v; ++x) {
      if (member(rng)) blk.push_back(x);
    }
  }
  return IncidenceSystem(v, std::move(blocks));
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, Domain domain, long lo, long hi,
                          double zero_bias) {
  std::uniform_int_distribution<long> value(lo, hi);
  std::uniform_int_distribution<long> den(1, 4);
  std::bernoulli_distribution zero(zero_bias);
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    const long num = zero(rng) ? 0 : value(rng);
    entries.push_back(domain.kind() == ScalarKind::rational ? Scalar::from_fraction(num, den(rng), domain)
                                                            : Scalar::from_int(num, domain));
  }
  return ExactMatrix::from_entries(rows, cols, domain, std::move(entries));
}

}  // namespace designlab::oracle
