#include <doctest.h>

#include <set>
#include <stdexcept>

#include "designlab/enumerate.hpp"
#include "designlab/oracles.hpp"
#include "designlab/theorems.hpp"

using namespace designlab;

namespace {

std::set<oracle::CanonicalFamily> as_set(const std::vector<IncidenceSystem>& families) {
  std::set<oracle::CanonicalFamily> out;
  for (const auto& f : families) out.insert(oracle::canonical(f));
  return out;
}

}  // namespace

TEST_CASE("odd-town families for tiny v") {
  const auto v1 = collect_odd_town(1);
  REQUIRE(v1.size() == 2);
  CHECK(v1[0] == IncidenceSystem(1, {}));
  CHECK(v1[1] == IncidenceSystem(1, {{0}}));

  CHECK(as_set(collect_odd_town(2)) ==
        std::set<oracle::CanonicalFamily>{{}, {{0}}, {{1}}, {{0}, {1}}});
}

TEST_CASE("family counts") {
  const std::size_t odd_town_counts[] = {1, 2, 4, 9, 35, 193, 1793};
  for (std::size_t v = 0; v <= 6; ++v) CHECK(collect_odd_town(v).size() == odd_town_counts[v]);
  const std::size_t const_intersect_counts[] = {0, 0, 2, 19, 143, 1106};
  for (std::size_t v = 0; v <= 5; ++v) CHECK(collect_const_intersect(v).size() == const_intersect_counts[v]);
}

TEST_CASE("streams match the naive filter") {
  for (std::size_t v = 0; v <= 4; ++v) {
    const auto odd = collect_odd_town(v);
    CHECK(as_set(odd).size() == odd.size());
    CHECK(as_set(odd) == oracle::naive_odd_town(v));
    const auto ci = collect_const_intersect(v);
    CHECK(as_set(ci).size() == ci.size());
    CHECK(as_set(ci) == oracle::naive_const_intersect(v));
  }
}

TEST_CASE("bounds are enforced") {
  CHECK_THROWS_AS(collect_odd_town(7), std::invalid_argument);
  CHECK_THROWS_AS(collect_const_intersect(6), std::invalid_argument);
  CHECK_THROWS_AS(collect_bibd(10, 3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(collect_bibd(5, 5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(collect_bibd(5, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(collect_bibd(5, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("visitor can stop early") {
  std::size_t seen = 0;
  enum_odd_town(5, [&](const IncidenceSystem&) { return ++seen < 10; });
  CHECK(seen == 10);
}

TEST_CASE("BIBD search") {
  // (6,3,1): r = 5/2 is not integral.
  CHECK(collect_bibd(6, 3, 1, 10).empty());

  const auto pairs = collect_bibd(4, 2, 1, 10);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == IncidenceSystem(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));

  // Every Fano plane on 7 labeled points is isomorphic to every other.
  const auto fanos = collect_bibd(7, 3, 1, 40);
  CHECK(fanos.size() == 30);
  CHECK(as_set(fanos).size() == fanos.size());
  for (const auto& f : fanos) {
    CHECK(classify(f).is_bibd);
    CHECK(are_isomorphic(f, oracle::fano_plane()));
  }

  const auto sts9 = collect_bibd(9, 3, 1, 2);
  REQUIRE(sts9.size() == 2);
  for (const auto& s : sts9) {
    for (std::size_t x = 0; x < 9; ++x) {
      for (std::size_t y = x + 1; y < 9; ++y) CHECK(oracle::pair_count(s, x, y) == 1);
    }
  }

  // The four triples of a 4-set cover each pair twice, and no multiset with
  // a repeated triple can.
  for (const auto& d : collect_bibd(4, 3, 2, 10)) CHECK(classify(d).pbd_lambda == 2u);
  CHECK(collect_bibd(4, 3, 2, 10).size() == 1);
}

TEST_CASE("exhaustive verification finds no violations") {
  for (std::size_t v = 1; v <= 5; ++v) {
    const auto r = verify_exhaustive(ExhaustiveTheorem::odd_town, v);
    CHECK(r.violations.empty());
    CHECK(r.max_family_size_found == v);
  }
  for (std::size_t v = 2; v <= 4; ++v) {
    const auto r = verify_exhaustive(ExhaustiveTheorem::general_fisher, v);
    CHECK(r.violations.empty());
    CHECK(r.max_family_size_found <= v);
    CHECK(verify_exhaustive(ExhaustiveTheorem::dual_fisher, v).violations.empty());
  }
}

TEST_CASE("family lines") {
  CHECK(family_line(IncidenceSystem(5, {{0, 1, 2}, {0, 3, 4}})) == "0 1 2 | 0 3 4");
  CHECK(family_line(IncidenceSystem(3, {})) == "");
}
