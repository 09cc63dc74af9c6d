#include "designlab/exact_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace designlab {

namespace {

// Typed views of a field for the elimination kernel. Working in the native
// representation avoids re-dispatching on the domain for every entry.
struct RationalOps {
  using value_type = mpq_class;
  Domain domain = Domain::rationals();

  value_type load(const Scalar& s) const { return s.to_rational(); }
  Scalar store(const value_type& x) const { return Scalar::from_rational(x, domain); }
  static bool is_zero(const value_type& x) { return x == 0; }
  static value_type one() { return 1; }
  static value_type neg(const value_type& x) { return -x; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type inv(const value_type& a) { return 1 / a; }
};

struct PrimeOps {
  using value_type = std::uint32_t;
  Domain domain;

  value_type load(const Scalar& s) const { return s.residue(); }
  Scalar store(value_type x) const { return Scalar::from_int(x, domain); }
  static bool is_zero(value_type x) { return x == 0; }
  static value_type one() { return 1; }
  value_type neg(value_type x) const { return x == 0 ? 0 : domain.modulus() - x; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % domain.modulus());
  }
  value_type sub(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} + domain.modulus() - b) % domain.modulus());
  }
  value_type inv(value_type a) const {
    // a^(p-2) by square and multiply.
    value_type result = 1;
    value_type base = a;
    for (std::uint32_t e = domain.modulus() - 2; e != 0; e >>= 1) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
};

template <typename Ops>
struct Echelon {
  std::size_t rank = 0;
  typename Ops::value_type det;
};

// Row reduction with first-nonzero pivoting. `det` is only meaningful when
// the matrix is square.
template <typename Ops>
Echelon<Ops> eliminate(const Ops& ops, const ExactMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<typename Ops::value_type> m;
  m.reserve(rows * cols);
  for (const Scalar& s : a.entries()) m.push_back(ops.load(s));
  auto at = [&](std::size_t i, std::size_t j) -> typename Ops::value_type& { return m[i * cols + j]; };

  Echelon<Ops> out{0, Ops::one()};
  for (std::size_t col = 0; col < cols && out.rank < rows; ++col) {
    std::size_t pivot = out.rank;
    while (pivot < rows && Ops::is_zero(at(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != out.rank) {
      for (std::size_t j = col; j < cols; ++j) std::swap(at(pivot, j), at(out.rank, j));
      out.det = ops.neg(out.det);
    }
    const auto p = at(out.rank, col);
    out.det = ops.mul(out.det, p);
    const auto p_inv = ops.inv(p);
    for (std::size_t i = out.rank + 1; i < rows; ++i) {
      if (Ops::is_zero(at(i, col))) continue;
      const auto factor = ops.mul(at(i, col), p_inv);
      for (std::size_t j = col; j < cols; ++j) at(i, j) = ops.sub(at(i, j), ops.mul(factor, at(out.rank, j)));
    }
    ++out.rank;
  }
  return out;
}

template <typename F>
decltype(auto) with_field_ops(const Domain& d, F&& f) {
  switch (d.kind()) {
    case ScalarKind::rational:
      return f(RationalOps{});
    case ScalarKind::prime_field:
      return f(PrimeOps{d});
    case ScalarKind::integer:
      break;
  }
  throw DomainError("operation needs a field domain; lift ZZ to QQ first");
}

mpz_class bareiss_integer(std::vector<mpz_class> m, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * n + j]; };
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return n == 0 ? mpz_class(1) : mpz_class(sign * at(n - 1, n - 1));
}

void check_row_index(std::size_t i, std::size_t limit, const char* what) {
  if (i >= limit) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) + " out of range (limit " +
                            std::to_string(limit) + ")");
  }
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Domain domain)
    : rows_(rows), cols_(cols), domain_(domain), entries_(rows * cols, Scalar::zero(domain)) {}

ExactMatrix ExactMatrix::from_entries(std::size_t rows, std::size_t cols, Domain domain,
                                      std::vector<Scalar> entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
  for (const Scalar& s : entries) {
    if (!(s.domain() == domain)) throw DomainError("entry from " + s.domain().name() + " in a " + domain.name() + " matrix");
  }
  return ExactMatrix(rows, cols, domain, std::move(entries));
}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows, Domain domain) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Scalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    for (long long x : row) entries.push_back(Scalar::from_int(x, domain));
  }
  return ExactMatrix(r, c, domain, std::move(entries));
}

ExactMatrix ExactMatrix::identity(std::size_t n, Domain domain) {
  return mat_build(n, n, domain, [](std::size_t i, std::size_t j) { return i == j ? 1 : 0; });
}

ExactMatrix ExactMatrix::ones(std::size_t rows, std::size_t cols, Domain domain) {
  return ExactMatrix(rows, cols, domain, std::vector<Scalar>(rows * cols, Scalar::one(domain)));
}

const Scalar& ExactMatrix::at(std::size_t i, std::size_t j) const {
  check_row_index(i, rows_, "row");
  check_row_index(j, cols_, "column");
  return (*this)(i, j);
}

ExactVector::ExactVector(Domain domain, std::vector<Scalar> entries) : domain_(domain), entries_(std::move(entries)) {
  for (const Scalar& s : entries_) {
    if (!(s.domain() == domain_)) throw DomainError("vector entry from " + s.domain().name());
  }
}

ExactVector ExactVector::from_ints(std::initializer_list<long long> values, Domain domain) {
  std::vector<Scalar> entries;
  for (long long x : values) entries.push_back(Scalar::from_int(x, domain));
  return ExactVector(domain, std::move(entries));
}

ExactVector ExactVector::column_of(const ExactMatrix& m, std::size_t j) {
  check_row_index(j, m.cols(), "column");
  std::vector<Scalar> entries;
  entries.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(m(i, j));
  return ExactVector(m.domain(), std::move(entries));
}

ExactMatrix transpose(const ExactMatrix& a) {
  return mat_build(a.cols(), a.rows(), a.domain(), [&](std::size_t i, std::size_t j) { return a(j, i); });
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.domain() == b.domain())) throw DomainError("mat_mul: " + a.domain().name() + " vs " + b.domain().name());
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return mat_build(a.rows(), b.cols(), a.domain(), [&](std::size_t i, std::size_t j) {
    Scalar sum = Scalar::zero(a.domain());
    for (std::size_t t = 0; t < a.cols(); ++t) sum += a(i, t) * b(t, j);
    return sum;
  });
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  return mat_build(a.rows(), a.cols(), a.domain(), [&](std::size_t i, std::size_t j) { return a(i, j) + b(i, j); });
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  return mat_build(a.rows(), a.cols(), a.domain(), [&](std::size_t i, std::size_t j) { return a(i, j) - b(i, j); });
}

ExactMatrix scale(const Scalar& c, const ExactMatrix& a) {
  return mat_build(a.rows(), a.cols(), a.domain(), [&](std::size_t i, std::size_t j) { return c * a(i, j); });
}

ExactMatrix change_domain(const ExactMatrix& a, Domain target) {
  return mat_build(a.rows(), a.cols(), target, [&](std::size_t i, std::size_t j) { return a(i, j); });
}

ExactMatrix add_multiple_rows(const ExactMatrix& a, const Scalar& c, std::size_t k,
                              std::span<const std::size_t> sources) {
  check_row_index(k, a.rows(), "target row");
  for (std::size_t l : sources) {
    check_row_index(l, a.rows(), "source row");
    if (l == k) throw std::invalid_argument("add_multiple_rows: target row " + std::to_string(k) + " is also a source");
  }
  const Scalar cc = Scalar::convert(c, a.domain());
  return mat_build(a.rows(), a.cols(), a.domain(), [&](std::size_t i, std::size_t j) {
    if (i != k) return a(i, j);
    Scalar sum = Scalar::zero(a.domain());
    for (std::size_t l : sources) sum += a(l, j);
    return a(i, j) + cc * sum;
  });
}

ExactMatrix add_row_to_multiple(const ExactMatrix& a, const Scalar& c, std::span<const std::size_t> targets,
                                std::size_t l) {
  check_row_index(l, a.rows(), "source row");
  std::vector<bool> is_target(a.rows(), false);
  for (std::size_t k : targets) {
    check_row_index(k, a.rows(), "target row");
    if (k == l) throw std::invalid_argument("add_row_to_multiple: source row " + std::to_string(l) + " is also a target");
    if (is_target[k]) throw std::invalid_argument("add_row_to_multiple: duplicate target row " + std::to_string(k));
    is_target[k] = true;
  }
  const Scalar cc = Scalar::convert(c, a.domain());
  return mat_build(a.rows(), a.cols(), a.domain(), [&](std::size_t i, std::size_t j) {
    return is_target[i] ? a(i, j) + cc * a(l, j) : a(i, j);
  });
}

ExactMatrix add_multiple_cols(const ExactMatrix& a, const Scalar& c, std::size_t k,
                              std::span<const std::size_t> sources) {
  return transpose(add_multiple_rows(transpose(a), c, k, sources));
}

ExactMatrix add_col_to_multiple(const ExactMatrix& a, const Scalar& c, std::span<const std::size_t> targets,
                                std::size_t l) {
  return transpose(add_row_to_multiple(transpose(a), c, targets, l));
}

Scalar det_bareiss(const ExactMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  switch (a.domain().kind()) {
    case ScalarKind::integer: {
      std::vector<mpz_class> m;
      m.reserve(n * n);
      for (const Scalar& s : a.entries()) m.push_back(s.to_integer());
      return Scalar::from_integer(bareiss_integer(std::move(m), n), a.domain());
    }
    case ScalarKind::rational: {
      // Clear each row's denominators: det(A) = det(D A) / det(D).
      std::vector<mpz_class> m;
      m.reserve(n * n);
      mpz_class scale_product = 1;
      for (std::size_t i = 0; i < n; ++i) {
        mpz_class row_lcm = 1;
        for (const Scalar& s : a.row(i)) {
          mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), s.to_rational().get_den_mpz_t());
        }
        for (const Scalar& s : a.row(i)) {
          const mpq_class q = s.to_rational();
          m.push_back(mpz_class(q.get_num() * (row_lcm / q.get_den())));
        }
        scale_product *= row_lcm;
      }
      return Scalar::from_fraction(bareiss_integer(std::move(m), n), scale_product, a.domain());
    }
    case ScalarKind::prime_field:
      break;
  }
  throw DomainError("det_bareiss works over ZZ or QQ; use det_field for " + a.domain().name());
}

Scalar det_field(const ExactMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  return with_field_ops(a.domain(), [&](const auto& ops) {
    const auto e = eliminate(ops, a);
    return e.rank == a.rows() ? ops.store(e.det) : Scalar::zero(a.domain());
  });
}

std::size_t rank_field(const ExactMatrix& a) {
  return with_field_ops(a.domain(), [&](const auto& ops) { return eliminate(ops, a).rank; });
}

Scalar det_aI_bJ(const Scalar& a, const Scalar& b, std::size_t v) {
  if (v == 0) throw std::invalid_argument("det_aI_bJ needs v >= 1");
  if (!(a.domain() == b.domain())) throw DomainError("det_aI_bJ: operands from different domains");
  if (a.domain().kind() == ScalarKind::prime_field) throw DomainError("det_aI_bJ works over ZZ or QQ");
  const Scalar vv = Scalar::from_int(static_cast<long long>(v), a.domain());
  return a.pow(v - 1) * (a + vv * b);
}

std::string to_string(const ExactMatrix& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j != 0) out << ' ';
      out << a(i, j).to_string();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace designlab
