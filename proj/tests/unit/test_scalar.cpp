#include <doctest.h>

#include <random>
#include <stdexcept>

#include "designlab/scalar.hpp"

using namespace designlab;

TEST_CASE("domains") {
  CHECK(Domain::integers().name() == "ZZ");
  CHECK(Domain::rationals().name() == "QQ");
  CHECK(Domain::prime_field(5).name() == "GF(5)");
  CHECK_FALSE(Domain::integers().is_field());
  CHECK(Domain::prime_field(2).is_field());
  CHECK_THROWS_AS(Domain::prime_field(4), DomainError);
  CHECK_THROWS_AS(Domain::prime_field(1), DomainError);
  CHECK_THROWS_AS(Domain::prime_field(0), DomainError);
  CHECK(Domain::prime_field(2147483647).modulus() == 2147483647u);
  CHECK(Domain::prime_field(7) == Domain::prime_field(7));
  CHECK_FALSE(Domain::prime_field(7) == Domain::prime_field(5));
}

TEST_CASE("primality by trial division") {
  const int primes[] = {2, 3, 5, 7, 11, 13, 97, 7919};
  for (int p : primes) CHECK(is_prime(p));
  const int composites[] = {0, 1, 4, 9, 15, 91, 7917};
  for (int n : composites) CHECK_FALSE(is_prime(n));
}

TEST_CASE("integer arithmetic is exact past 64 bits") {
  const Domain zz = Domain::integers();
  const Scalar big = Scalar::from_int(3, zz).pow(50);
  CHECK(big.to_string() == "717897987691852588770249");
  CHECK((big - big).is_zero());
  CHECK((Scalar::from_int(-7, zz) * Scalar::from_int(6, zz)).to_string() == "-42");
  CHECK_THROWS_AS(Scalar::from_int(6, zz) / Scalar::from_int(3, zz), DomainError);
}

TEST_CASE("rationals normalize") {
  const Domain qq = Domain::rationals();
  const Scalar half = Scalar::from_fraction(2, 4, qq);
  CHECK(half.to_string() == "1/2");
  CHECK(half == Scalar::from_fraction(-3, -6, qq));
  CHECK((half + Scalar::from_fraction(1, 3, qq)).to_string() == "5/6");
  CHECK((half / Scalar::from_fraction(1, 4, qq)).to_string() == "2");
  CHECK((Scalar::from_int(3, qq) / Scalar::from_int(3, qq)).is_one());
  CHECK_THROWS_AS(Scalar::from_fraction(1, 0, qq), DomainError);
  CHECK_THROWS_AS(half / Scalar::zero(qq), std::domain_error);
}

TEST_CASE("prime field reduction and inverses") {
  const Domain f5 = Domain::prime_field(5);
  CHECK(Scalar::from_int(-1, f5).residue() == 4u);
  CHECK(Scalar::from_int(12, f5).residue() == 2u);
  CHECK((Scalar::from_int(2, f5) * Scalar::from_int(3, f5)).is_one());
  CHECK((Scalar::one(f5) / Scalar::from_int(2, f5)).residue() == 3u);
  CHECK(Scalar::from_fraction(1, 2, f5).residue() == 3u);
  CHECK_THROWS_AS(Scalar::from_fraction(1, 5, f5), DomainError);
  CHECK_THROWS_AS(Scalar::one(f5) / Scalar::zero(f5), std::domain_error);
}

TEST_CASE("mixed domains are rejected") {
  CHECK_THROWS_AS(Scalar::one(Domain::integers()) + Scalar::one(Domain::rationals()), DomainError);
  CHECK_THROWS_AS(Scalar::one(Domain::prime_field(3)) * Scalar::one(Domain::prime_field(5)), DomainError);
  CHECK_FALSE(Scalar::one(Domain::integers()) == Scalar::one(Domain::rationals()));
}

TEST_CASE("conversion follows ZZ to QQ to GF(p)") {
  const Scalar seven = Scalar::from_int(7, Domain::integers());
  CHECK(Scalar::convert(seven, Domain::rationals()).to_string() == "7");
  CHECK(Scalar::convert(seven, Domain::prime_field(5)).residue() == 2u);
  CHECK(Scalar::convert(Scalar::from_fraction(3, 2, Domain::rationals()), Domain::prime_field(7)).residue() == 5u);
  CHECK_THROWS_AS(Scalar::convert(Scalar::from_fraction(1, 2, Domain::rationals()), Domain::integers()), DomainError);
  CHECK_THROWS_AS(Scalar::convert(Scalar::one(Domain::prime_field(5)), Domain::rationals()), DomainError);
}

TEST_CASE("field axioms hold on random samples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> value(-50, 50);
  for (const Domain d : {Domain::rationals(), Domain::prime_field(7), Domain::prime_field(101)}) {
    for (int t = 0; t < 200; ++t) {
      const Scalar a = Scalar::from_int(value(rng), d);
      const Scalar b = Scalar::from_int(value(rng), d);
      const Scalar c = Scalar::from_int(value(rng), d);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK((a - b) + b == a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}
