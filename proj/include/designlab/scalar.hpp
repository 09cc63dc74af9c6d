#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace designlab {

enum class ScalarKind { integer, rational, prime_field };

/// Thrown when two scalars, vectors or matrices from different domains meet,
/// or when an operation is not defined over the given domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The coefficient domain of a scalar: the integers, the rationals, or GF(p).
///
/// The modulus is only meaningful for prime fields; it is validated prime by
/// trial division and must be below 2^31 so products fit in 64 bits.
class Domain {
 public:
  static Domain integers() { return Domain{ScalarKind::integer, 0}; }
  static Domain rationals() { return Domain{ScalarKind::rational, 0}; }
  static Domain prime_field(std::uint32_t p);

  ScalarKind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_field() const { return kind_ != ScalarKind::integer; }

  /// "ZZ", "QQ" or "GF(p)".
  std::string name() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(ScalarKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  ScalarKind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

/// An exact scalar tagged with its domain.
///
/// Integers are held as mpz_class, rationals as canonical mpq_class (lowest
/// terms, positive denominator), prime-field elements as residues 0..p-1.
class Scalar {
 public:
  /// The integer zero.
  Scalar() : Scalar(Domain::integers(), mpz_class(0)) {}

  static Scalar zero(Domain d);
  static Scalar one(Domain d);
  static Scalar from_int(long long value, Domain d);
  static Scalar from_integer(const mpz_class& value, Domain d);
  /// Normalizes num/den into `d`. Throws DomainError for a zero denominator,
  /// a non-integral value in ZZ, or a denominator divisible by p in GF(p).
  static Scalar from_fraction(const mpz_class& num, const mpz_class& den, Domain d);
  static Scalar from_rational(const mpq_class& value, Domain d);

  /// Re-expresses `s` in domain `d` through the canonical ring map
  /// ZZ -> QQ -> GF(p). Going from GF(p) anywhere else is rejected.
  static Scalar convert(const Scalar& s, Domain d);

  const Domain& domain() const { return domain_; }
  bool is_zero() const;
  bool is_one() const;

  /// Integer value; valid for ZZ, for QQ with denominator 1, and for GF(p)
  /// (the residue 0..p-1).
  mpz_class to_integer() const;
  mpq_class to_rational() const;
  std::uint32_t residue() const;

  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Field division; ZZ operands are rejected.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Scalars from different domains never compare equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar pow(unsigned long exponent) const;

 private:
  using Value = std::variant<mpz_class, mpq_class, std::uint32_t>;

  Scalar(Domain d, Value v) : domain_(d), value_(std::move(v)) {}

  Domain domain_;
  Value value_;
};

}  // namespace designlab
