#include <doctest.h>

#include <random>
#include <stdexcept>

#include "designlab/oracles.hpp"
#include "designlab/theorems.hpp"

using namespace designlab;

namespace {

std::vector<ExactVector> vectors(std::initializer_list<std::initializer_list<long long>> rows, Domain d) {
  std::vector<ExactVector> out;
  for (const auto& r : rows) out.push_back(ExactVector::from_ints(r, d));
  return out;
}

}  // namespace

TEST_CASE("rank argument on the Fano plane") {
  const ExactMatrix n = lift_01_mat(inc_mat_of(oracle::fano_plane()), Domain::rationals()).matrix();
  const BoundCertificate cert = rank_argument(n);
  CHECK(cert.square_det->to_string() == "576");
  CHECK(cert.rank_value == 7);
  CHECK(cert.inequality == Inequality{7, 7});
  CHECK(cert.matrix_dims == std::pair<std::size_t, std::size_t>{7, 7});

  // Over GF(2) the Gram matrix J + 2I reduces to J, which is singular.
  CHECK_THROWS_AS(rank_argument(change_domain(n, Domain::prime_field(2))), RankArgumentInapplicable);
  CHECK_THROWS_AS(rank_argument(inc_mat_of(oracle::fano_plane()).matrix()), DomainError);
  CHECK_NOTHROW(rank_argument(change_domain(n, Domain::prime_field(5))));
}

TEST_CASE("rank argument needs a nonzero determinant") {
  const ExactMatrix wide = ExactMatrix::from_rows({{1, 0, 1}, {1, 0, 1}}, Domain::rationals());
  CHECK_THROWS_AS(rank_argument(wide), RankArgumentInapplicable);
}

TEST_CASE("linear bound") {
  const Domain qq = Domain::rationals();
  const auto independent = vectors({{1, 0, 0}, {1, 1, 0}}, qq);
  const BoundCertificate cert = linear_bound(independent, 3, qq);
  CHECK(cert.rank_value == 2);
  CHECK(cert.inequality == Inequality{2, 3});

  try {
    linear_bound(vectors({{1, 0}, {0, 1}, {1, 1}}, qq), 2, qq);
    FAIL("expected dependence");
  } catch (const LinearBoundFailure& e) {
    CHECK(e.reason() == LinearBoundFailure::Reason::linearly_dependent);
    CHECK(e.rank() == 2);
  }
  try {
    linear_bound(vectors({{1, 0}, {1, 0}}, qq), 2, qq);
    FAIL("expected duplicate");
  } catch (const LinearBoundFailure& e) {
    CHECK(e.reason() == LinearBoundFailure::Reason::distinctness_violated);
  }
  CHECK(linear_bound({}, 4, qq).inequality == Inequality{0, 4});
  CHECK_THROWS_AS(linear_bound(vectors({{1, 0}}, qq), 3, qq), std::invalid_argument);
  CHECK_THROWS_AS(linear_bound(vectors({{1, 0}}, qq), 2, Domain::prime_field(2)), DomainError);
  CHECK_THROWS_AS(linear_bound(vectors({{1}}, Domain::integers()), 1, Domain::integers()), DomainError);
}

TEST_CASE("characterization, reverse direction") {
  CHECK(pbd_characterization_reverse(oracle::fano_plane()) == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(pbd_characterization_reverse(oracle::affine_plane_3()) == std::pair<std::size_t, std::size_t>{4, 1});
  CHECK(pbd_characterization_reverse(complement(oracle::fano_plane())) == std::pair<std::size_t, std::size_t>{4, 2});
  CHECK_THROWS_AS(pbd_characterization_reverse(IncidenceSystem(3, {{0, 1}, {0, 2}})), HypothesisError);
  CHECK_THROWS_AS(pbd_characterization_reverse(IncidenceSystem(4, {{0, 1}, {2, 3}})), HypothesisError);
}

TEST_CASE("characterization, forward direction") {
  const IncidenceSystem fano = oracle::fano_plane();
  CHECK(pbd_characterization_forward(inc_mat_of(fano), 3, 1) == fano);
  CHECK_THROWS_AS(pbd_characterization_forward(inc_mat_of(fano), 3, 2), HypothesisError);

  // Every block complete gives N N^T = b J, the r = lambda case.
  const IncidenceSystem full(3, {{0, 1, 2}, {0, 1, 2}});
  CHECK(pbd_characterization_forward(inc_mat_of(full), 2, 2) == full);

  CHECK_THROWS_AS(pbd_characterization_forward(inc_mat_of(IncidenceSystem(1, {{0}})), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(pbd_characterization_forward(inc_mat_of(fano), 0, 0), std::invalid_argument);
}

TEST_CASE("uniform Fisher") {
  const FisherReport fano = uniform_fisher(oracle::fano_plane());
  CHECK(fano.verdict == Verdict::bound_holds);
  CHECK(fano.bound == Inequality{7, 7});
  CHECK(fano.certificate->square_det->to_string() == "576");
  CHECK(revalidate(fano, oracle::fano_plane()));

  const FisherReport ag = uniform_fisher(oracle::affine_plane_3());
  CHECK(ag.bound == Inequality{9, 12});
  CHECK(ag.certificate->square_det->to_string() == det_aI_bJ(Scalar::from_int(3, Domain::integers()),
                                                             Scalar::one(Domain::integers()), 9)
                                                       .to_string());

  const FisherReport mixed = uniform_fisher(IncidenceSystem(4, {{0, 1}, {0, 1, 2}}));
  CHECK(mixed.verdict == Verdict::hypotheses_violated);
  CHECK(mixed.first_failure()->name == "uniform block size");

  const FisherReport complete = uniform_fisher(IncidenceSystem(3, {{0, 1, 2}}));
  CHECK(complete.first_failure()->name == "incomplete");

  const FisherReport unbalanced = uniform_fisher(IncidenceSystem(4, {{0, 1}, {2, 3}}));
  CHECK(unbalanced.first_failure()->name == "pairwise balanced");
  CHECK_FALSE(unbalanced.certificate);
  CHECK_FALSE(unbalanced.bound);
}

TEST_CASE("odd town") {
  const IncidenceSystem three(4, {{0}, {1}, {2}});
  const FisherReport ok = odd_town(three);
  CHECK(ok.verdict == Verdict::bound_holds);
  CHECK(ok.bound == Inequality{3, 4});
  CHECK(ok.certificate->domain == Domain::prime_field(2));

  const FisherReport odd_meet = odd_town(IncidenceSystem(4, {{0, 1, 2}, {0, 1, 3}, {0}}));
  CHECK(odd_meet.verdict == Verdict::hypotheses_violated);
  REQUIRE(odd_meet.first_failure() != nullptr);
  CHECK(odd_meet.first_failure()->name == "even pairwise intersections");
  CHECK(odd_meet.first_failure()->detail == "blocks 0 and 2: pairwise intersection 1 is odd");

  const FisherReport even = odd_town(IncidenceSystem(3, {{0, 1}}));
  CHECK(even.first_failure()->name == "odd block sizes");

  const FisherReport none = odd_town(IncidenceSystem(2, {}));
  CHECK(none.verdict == Verdict::bound_holds);
  CHECK(none.bound == Inequality{0, 2});
}

TEST_CASE("general Fisher") {
  const IncidenceSystem sunflower(4, {{0, 1}, {0, 2}, {0, 3}});
  const FisherReport s = general_fisher(sunflower);
  CHECK(s.verdict == Verdict::bound_holds);
  CHECK(s.bound == Inequality{3, 4});
  CHECK(revalidate(s, sunflower));

  const FisherReport repeated = general_fisher(IncidenceSystem(3, {{0, 1}, {0, 1}}));
  CHECK(repeated.first_failure()->name == "distinct blocks");

  const FisherReport varying = general_fisher(IncidenceSystem(4, {{0, 1}, {0, 2}, {2, 3}}));
  CHECK(varying.first_failure()->name == "constant intersection");

  const FisherReport single = general_fisher(IncidenceSystem(3, {{0}}));
  CHECK(single.verdict == Verdict::trivial_case);
  CHECK(single.bound == Inequality{1, 3});

  const FisherReport lonely = general_fisher(IncidenceSystem(0, {{}}));
  CHECK(lonely.verdict == Verdict::hypotheses_violated);

  const FisherReport disjoint = general_fisher(IncidenceSystem(5, {{0, 1}, {2}, {4}}));
  CHECK(disjoint.verdict == Verdict::trivial_case);
  CHECK(disjoint.bound == Inequality{3, 5});

  const FisherReport with_empty = general_fisher(IncidenceSystem(3, {{0}, {}}));
  CHECK(with_empty.first_failure()->name == "nonempty blocks");
}

TEST_CASE("dual Fisher") {
  const FisherReport fano = fisher_dual(oracle::fano_plane());
  CHECK(fano.verdict == Verdict::bound_holds);
  CHECK(fano.bound == Inequality{7, 7});

  const FisherReport ag = fisher_dual(oracle::affine_plane_3());
  CHECK(ag.verdict == Verdict::bound_holds);
  CHECK(ag.bound == Inequality{9, 12});

  const FisherReport repeated = fisher_dual(IncidenceSystem(3, {{0, 1}, {0, 2}, {1, 2}, {0, 1}}));
  CHECK(repeated.verdict == Verdict::hypotheses_violated);

  const FisherReport complete = fisher_dual(IncidenceSystem(3, {{0, 1, 2}, {0, 1}}));
  CHECK(complete.first_failure()->name == "pairwise balanced");

  // Two identical points make two identical dual blocks.
  const FisherReport twins = fisher_dual(IncidenceSystem(3, {{0, 1}, {0, 1, 2}, {2}}));
  CHECK(twins.verdict == Verdict::hypotheses_violated);
}

TEST_CASE("variant names") {
  CHECK(parse_variant("oddtown") == FisherVariant::odd_town);
  CHECK(parse_variant("odd-town") == FisherVariant::odd_town);
  CHECK(parse_variant("dual") == FisherVariant::dual);
  CHECK_FALSE(parse_variant("strong"));
  CHECK(std::string(to_string(Verdict::trivial_case)) == "trivial-case");
}

TEST_CASE("revalidation rejects a tampered certificate") {
  FisherReport fano = uniform_fisher(oracle::fano_plane());
  fano.certificate->square_det = Scalar::from_int(575, Domain::rationals());
  CHECK_FALSE(revalidate(fano, oracle::fano_plane()));

  FisherReport sun = general_fisher(IncidenceSystem(4, {{0, 1}, {0, 2}, {0, 3}}));
  sun.bound = Inequality{3, 3};
  CHECK_FALSE(revalidate(sun, IncidenceSystem(4, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST_CASE("Fisher verdicts on random systems are consistent") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const IncidenceSystem s = oracle::random_system(rng, 6, 6);
    const DesignClass c = classify(s);
    for (FisherVariant v : {FisherVariant::uniform, FisherVariant::odd_town, FisherVariant::general, FisherVariant::dual}) {
      const FisherReport r = run_fisher(v, s);
      CHECK(revalidate(r, s));
      if (r.verdict != Verdict::hypotheses_violated) {
        REQUIRE(r.bound);
        CHECK(r.bound->holds());
      }
    }
    if (c.is_bibd) CHECK(uniform_fisher(s).verdict == Verdict::bound_holds);
  }
}
