#include "designlab/scalar.hpp"

namespace designlab {

namespace {

constexpr std::uint32_t kMaxModulus = std::uint32_t{1} << 31;

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid; a is nonzero mod p.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.domain() == b.domain())) {
    throw DomainError("scalar domain mismatch: " + a.domain().name() + " vs " + b.domain().name());
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Domain Domain::prime_field(std::uint32_t p) {
  if (p >= kMaxModulus) throw DomainError("prime modulus must be below 2^31");
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  return Domain{ScalarKind::prime_field, p};
}

std::string Domain::name() const {
  switch (kind_) {
    case ScalarKind::integer:
      return "ZZ";
    case ScalarKind::rational:
      return "QQ";
    case ScalarKind::prime_field:
      return "GF(" + std::to_string(modulus_) + ")";
  }
  return "?";
}

Scalar Scalar::zero(Domain d) { return from_int(0, d); }
Scalar Scalar::one(Domain d) { return from_int(1, d); }

Scalar Scalar::from_int(long long value, Domain d) {
  static_assert(sizeof(long) == sizeof(long long), "mpz_set_si needs a 64-bit long");
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
  return from_integer(z, d);
}

Scalar Scalar::from_integer(const mpz_class& value, Domain d) {
  switch (d.kind()) {
    case ScalarKind::integer:
      return Scalar(d, value);
    case ScalarKind::rational:
      return Scalar(d, mpq_class(value));
    case ScalarKind::prime_field:
      return Scalar(d, reduce(value, d.modulus()));
  }
  throw DomainError("unknown domain");
}

Scalar Scalar::from_fraction(const mpz_class& num, const mpz_class& den, Domain d) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(q, d);
}

Scalar Scalar::from_rational(const mpq_class& value, Domain d) {
  switch (d.kind()) {
    case ScalarKind::integer:
      if (value.get_den() != 1) throw DomainError(value.get_str() + " is not an integer");
      return Scalar(d, mpz_class(value.get_num()));
    case ScalarKind::rational:
      return Scalar(d, value);
    case ScalarKind::prime_field: {
      const std::uint32_t p = d.modulus();
      const std::uint32_t den = reduce(value.get_den(), p);
      if (den == 0) throw DomainError("denominator of " + value.get_str() + " vanishes in " + d.name());
      const std::uint64_t num = reduce(value.get_num(), p);
      return Scalar(d, static_cast<std::uint32_t>(num * mod_inverse(den, p) % p));
    }
  }
  throw DomainError("unknown domain");
}

Scalar Scalar::convert(const Scalar& s, Domain d) {
  if (s.domain_ == d) return s;
  switch (s.domain_.kind()) {
    case ScalarKind::integer:
      return from_integer(std::get<mpz_class>(s.value_), d);
    case ScalarKind::rational:
      return from_rational(std::get<mpq_class>(s.value_), d);
    case ScalarKind::prime_field:
      break;
  }
  throw DomainError("no ring map from " + s.domain_.name() + " to " + d.name());
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x == 0; }, value_);
}

bool Scalar::is_one() const {
  return std::visit([](const auto& x) { return x == 1; }, value_);
}

mpz_class Scalar::to_integer() const {
  switch (domain_.kind()) {
    case ScalarKind::integer:
      return std::get<mpz_class>(value_);
    case ScalarKind::rational: {
      const auto& q = std::get<mpq_class>(value_);
      if (q.get_den() != 1) throw DomainError(q.get_str() + " is not an integer");
      return q.get_num();
    }
    case ScalarKind::prime_field:
      return mpz_class(static_cast<unsigned long>(std::get<std::uint32_t>(value_)));
  }
  throw DomainError("unknown domain");
}

mpq_class Scalar::to_rational() const {
  switch (domain_.kind()) {
    case ScalarKind::integer:
      return mpq_class(std::get<mpz_class>(value_));
    case ScalarKind::rational:
      return std::get<mpq_class>(value_);
    case ScalarKind::prime_field:
      break;
  }
  throw DomainError("prime-field element has no rational value");
}

std::uint32_t Scalar::residue() const {
  if (domain_.kind() != ScalarKind::prime_field) throw DomainError("residue() needs a prime-field scalar");
  return std::get<std::uint32_t>(value_);
}

std::string Scalar::to_string() const {
  switch (domain_.kind()) {
    case ScalarKind::integer:
      return std::get<mpz_class>(value_).get_str();
    case ScalarKind::rational:
      return std::get<mpq_class>(value_).get_str();
    case ScalarKind::prime_field:
      return std::to_string(std::get<std::uint32_t>(value_));
  }
  return "?";
}

Scalar Scalar::operator-() const {
  switch (domain_.kind()) {
    case ScalarKind::integer:
      return Scalar(domain_, mpz_class(-std::get<mpz_class>(value_)));
    case ScalarKind::rational:
      return Scalar(domain_, mpq_class(-std::get<mpq_class>(value_)));
    case ScalarKind::prime_field: {
      const auto r = std::get<std::uint32_t>(value_);
      return Scalar(domain_, r == 0 ? 0u : domain_.modulus() - r);
    }
  }
  throw DomainError("unknown domain");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.domain_.kind()) {
    case ScalarKind::integer:
      return Scalar(a.domain_, mpz_class(std::get<mpz_class>(a.value_) + std::get<mpz_class>(b.value_)));
    case ScalarKind::rational:
      return Scalar(a.domain_, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
    case ScalarKind::prime_field: {
      const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(a.value_)} + std::get<std::uint32_t>(b.value_);
      return Scalar(a.domain_, static_cast<std::uint32_t>(s % a.domain_.modulus()));
    }
  }
  throw DomainError("unknown domain");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.domain_.kind()) {
    case ScalarKind::integer:
      return Scalar(a.domain_, mpz_class(std::get<mpz_class>(a.value_) * std::get<mpz_class>(b.value_)));
    case ScalarKind::rational:
      return Scalar(a.domain_, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
    case ScalarKind::prime_field: {
      const std::uint64_t m = std::uint64_t{std::get<std::uint32_t>(a.value_)} * std::get<std::uint32_t>(b.value_);
      return Scalar(a.domain_, static_cast<std::uint32_t>(m % a.domain_.modulus()));
    }
  }
  throw DomainError("unknown domain");
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero");
  switch (a.domain_.kind()) {
    case ScalarKind::integer:
      throw DomainError("division is not defined in ZZ");
    case ScalarKind::rational:
      return Scalar(a.domain_, mpq_class(std::get<mpq_class>(a.value_) / std::get<mpq_class>(b.value_)));
    case ScalarKind::prime_field: {
      const std::uint32_t p = a.domain_.modulus();
      const std::uint64_t m =
          std::uint64_t{std::get<std::uint32_t>(a.value_)} * mod_inverse(std::get<std::uint32_t>(b.value_), p);
      return Scalar(a.domain_, static_cast<std::uint32_t>(m % p));
    }
  }
  throw DomainError("unknown domain");
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.domain_ == b.domain_ && a.value_ == b.value_;
}

Scalar Scalar::pow(unsigned long exponent) const {
  Scalar result = one(domain_);
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

}  // namespace designlab
