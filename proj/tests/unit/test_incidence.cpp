#include <doctest.h>

#include <random>
#include <stdexcept>

#include "designlab/incidence.hpp"
#include "designlab/oracles.hpp"

using namespace designlab;

TEST_CASE("construction normalizes and validates") {
  const IncidenceSystem s(4, {{2, 0}, {3}, {}});
  CHECK(s.block(0) == Block{0, 2});
  CHECK(s.contains(0, 2));
  CHECK_FALSE(s.contains(1, 2));
  CHECK_THROWS_AS(IncidenceSystem(3, {{0, 3}}), MalformedSystem);
  CHECK_THROWS_AS(IncidenceSystem(3, {{1, 1}}), MalformedSystem);
  CHECK_THROWS_AS(s.block(3), std::out_of_range);
}

TEST_CASE("Fano plane counts") {
  const IncidenceSystem fano = oracle::fano_plane();
  for (std::size_t x = 0; x < 7; ++x) CHECK(replication_number(fano, x) == 3);
  for (std::size_t j = 0; j < 7; ++j) CHECK(block_size(fano, j) == 3);
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) CHECK(inter_num(fano, i, j) == (i == j ? 3u : 1u));
  }
  const Point pair[] = {0, 1};
  CHECK(points_index(fano, pair) == 1);
  CHECK(points_index(fano, {}) == 7);

  const DesignClass c = classify(fano);
  CHECK(c.is_design);
  CHECK(c.is_simple);
  CHECK(c.uniform_k == 3u);
  CHECK(c.regular_r == 3u);
  CHECK(c.pbd_lambda == 1u);
  CHECK(c.const_intersect_k == 1u);
  CHECK(c.is_incomplete);
  CHECK(c.is_bibd);
}

TEST_CASE("classification edge cases") {
  const DesignClass empty_family = classify(IncidenceSystem(3, {}));
  CHECK_FALSE(empty_family.intersect_determined);
  CHECK_FALSE(empty_family.const_intersect_k);
  CHECK(empty_family.is_simple);

  const DesignClass repeated = classify(IncidenceSystem(3, {{0, 1}, {0, 1}}));
  CHECK_FALSE(repeated.is_simple);
  CHECK(repeated.const_intersect_k == 2u);

  const DesignClass with_empty = classify(IncidenceSystem(3, {{0, 1}, {}}));
  CHECK_FALSE(with_empty.is_design);

  // The complete block is not incomplete, so this is no BIBD.
  const DesignClass complete = classify(IncidenceSystem(3, {{0, 1, 2}}));
  CHECK_FALSE(complete.is_incomplete);
  CHECK_FALSE(complete.is_bibd);

  const DesignClass one_point = classify(IncidenceSystem(1, {{0}}));
  CHECK_FALSE(one_point.pbd_lambda);
}

TEST_CASE("matrix round trip") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const IncidenceSystem s = oracle::random_system(rng, 6, 6);
    const IncidenceMatrix01 n = inc_mat_of(s);
    CHECK(n.rows() == s.point_count());
    CHECK(n.cols() == s.block_count());
    CHECK(system_of_mat(n) == s);
    CHECK(system_of_mat(lift_01_mat(n, Domain::prime_field(2))) == s);
  }
  CHECK_THROWS_AS(IncidenceMatrix01(ExactMatrix::from_rows({{0, 2}}, Domain::integers())), std::invalid_argument);
}

TEST_CASE("Gram matrix equals the dot-product oracle") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const IncidenceSystem s = oracle::random_system(rng, 6, 6);
    const ExactMatrix n = inc_mat_of(s).matrix();
    const ExactMatrix g = n * transpose(n);
    const auto expected = oracle::gram_by_dot_products(s);
    for (std::size_t i = 0; i < s.point_count(); ++i) {
      for (std::size_t j = 0; j < s.point_count(); ++j) CHECK(g(i, j).to_integer() == expected[i][j]);
    }
  }
}

TEST_CASE("complement and dual") {
  const IncidenceSystem s(4, {{0, 1}, {1, 2, 3}, {}});
  CHECK(complement(s) == IncidenceSystem(4, {{2, 3}, {0}, {0, 1, 2, 3}}));
  CHECK(dual(s) == IncidenceSystem(3, {{0}, {0, 1}, {1}, {1}}));
  CHECK(complement(complement(s)) == s);
  CHECK(dual(dual(s)) == s);

  // Repeated blocks become distinct points of the dual.
  const IncidenceSystem twice(2, {{0, 1}, {0, 1}});
  CHECK(dual(twice) == IncidenceSystem(2, {{0, 1}, {0, 1}}));

  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const IncidenceSystem r = oracle::random_system(rng, 6, 6);
    CHECK(dual(dual(r)) == r);
    CHECK(complement(complement(r)) == r);
  }
}

TEST_CASE("complement of the Fano plane is a (7,4,2) design") {
  const DesignClass c = classify(complement(oracle::fano_plane()));
  CHECK(c.uniform_k == 4u);
  CHECK(c.regular_r == 4u);
  CHECK(c.pbd_lambda == 2u);
  CHECK(c.is_bibd);
}

TEST_CASE("isomorphism") {
  const IncidenceSystem fano = oracle::fano_plane();
  // Relabel x -> 6 - x and reverse the block order.
  std::vector<Block> relabeled;
  for (auto it = fano.blocks().rbegin(); it != fano.blocks().rend(); ++it) {
    Block b;
    for (Point x : *it) b.push_back(6 - x);
    relabeled.push_back(b);
  }
  CHECK(are_isomorphic(fano, IncidenceSystem(7, relabeled)));
  CHECK(are_isomorphic(fano, dual(fano)));

  // Swapping one point in one line breaks the pair balance.
  std::vector<Block> altered = fano.blocks();
  altered[0] = {0, 1, 3};
  CHECK_FALSE(are_isomorphic(fano, IncidenceSystem(7, altered)));
  CHECK_FALSE(are_isomorphic(fano, IncidenceSystem(7, {})));

  CHECK(are_isomorphic(IncidenceSystem(3, {{0}, {1, 2}}), IncidenceSystem(3, {{0, 2}, {1}})));
  CHECK_FALSE(are_isomorphic(IncidenceSystem(3, {{0}, {0}}), IncidenceSystem(3, {{0}, {1}})));
  CHECK(are_isomorphic(IncidenceSystem(0, {}), IncidenceSystem(0, {})));
  CHECK(are_isomorphic(IncidenceSystem(2, {{}, {0}}), IncidenceSystem(2, {{1}, {}})));
}

TEST_CASE("isomorphism is invariant under random relabeling") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 100; ++t) {
    const IncidenceSystem s = oracle::random_system(rng, 6, 6);
    std::vector<Point> perm(s.point_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Block> blocks;
    for (const Block& b : s.blocks()) {
      Block mapped;
      for (Point x : b) mapped.push_back(perm[x]);
      blocks.push_back(mapped);
    }
    std::shuffle(blocks.begin(), blocks.end(), rng);
    CHECK(are_isomorphic(s, IncidenceSystem(s.point_count(), blocks)));
  }
}
