#include "designlab/theorems.hpp"

#include <algorithm>
#include <numeric>

namespace designlab {

namespace {

std::string count_str(std::size_t n) { return std::to_string(n); }

// N N^T == lambda J + (r - lambda) I, entrywise over ZZ.
bool matches_pbd_gram(const ExactMatrix& gram, std::size_t r, std::size_t lambda) {
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      const std::size_t expected = i == j ? r : lambda;
      if (gram(i, j).to_integer() != static_cast<unsigned long>(expected)) return false;
    }
  }
  return true;
}

std::vector<ExactVector> columns_of(const ExactMatrix& m) {
  std::vector<ExactVector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(ExactVector::column_of(m, j));
  return cols;
}

FisherReport violated(FisherReport report) {
  report.verdict = Verdict::hypotheses_violated;
  return report;
}

}  // namespace

BoundCertificate rank_argument(const ExactMatrix& n) {
  if (!n.domain().is_field()) throw DomainError("rank argument needs a field domain, got " + n.domain().name());
  const ExactMatrix gram = n * transpose(n);
  const Scalar det = n.domain().kind() == ScalarKind::rational ? det_bareiss(gram) : det_field(gram);
  if (det.is_zero()) throw RankArgumentInapplicable("rank argument inapplicable: det(N N^T) = 0");

  const std::size_t rank = rank_field(gram);
  if (rank != n.rows()) throw std::logic_error("nonzero determinant but rank(N N^T) != rows");

  BoundCertificate cert;
  cert.technique = Technique::rank_argument;
  cert.matrix_dims = {n.rows(), n.cols()};
  cert.square_det = det;
  cert.rank_value = rank;
  cert.domain = n.domain();
  cert.inequality = {n.rows(), n.cols()};
  return cert;
}

BoundCertificate linear_bound(std::span<const ExactVector> vectors, std::size_t dimension, Domain domain) {
  if (!domain.is_field()) throw DomainError("linear bound needs a field domain, got " + domain.name());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!(vectors[i].domain() == domain)) throw DomainError("vector " + count_str(i) + " is over " + vectors[i].domain().name());
    if (vectors[i].dim() != dimension) {
      throw std::invalid_argument("vector " + count_str(i) + " has dimension " + count_str(vectors[i].dim()) +
                                  ", expected " + count_str(dimension));
    }
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (vectors[i] == vectors[j]) {
        throw LinearBoundFailure(LinearBoundFailure::Reason::distinctness_violated, 0,
                                 "distinctness violated: vectors " + count_str(i) + " and " + count_str(j) + " are equal");
      }
    }
  }

  const ExactMatrix m = mat_build(dimension, vectors.size(), domain,
                                  [&](std::size_t i, std::size_t j) { return vectors[j][i]; });
  const std::size_t rank = rank_field(m);
  if (rank < vectors.size()) {
    throw LinearBoundFailure(LinearBoundFailure::Reason::linearly_dependent, rank,
                             "linearly dependent: rank " + count_str(rank) + " < " + count_str(vectors.size()) +
                                 " vectors");
  }

  BoundCertificate cert;
  cert.technique = Technique::linear_bound;
  cert.matrix_dims = {dimension, vectors.size()};
  cert.rank_value = rank;
  cert.domain = domain;
  cert.inequality = {vectors.size(), dimension};
  return cert;
}

std::pair<std::size_t, std::size_t> pbd_characterization_reverse(const IncidenceSystem& s) {
  const DesignClass c = classify(s);
  if (!c.regular_r) throw HypothesisError("system is not regular");
  if (!c.pbd_lambda) throw HypothesisError("system is not pairwise balanced with lambda >= 1");
  const std::size_t r = *c.regular_r;
  const std::size_t lambda = *c.pbd_lambda;

  const ExactMatrix n = inc_mat_of(s).matrix();
  if (!matches_pbd_gram(n * transpose(n), r, lambda)) {
    throw std::logic_error("N N^T != lambda J + (r - lambda) I for a regular PBD");
  }
  return {r, lambda};
}

IncidenceSystem pbd_characterization_forward(const IncidenceMatrix01& m, std::size_t r, std::size_t lambda) {
  if (r == 0 || lambda == 0) throw std::invalid_argument("r and lambda must be positive");
  if (m.rows() < 2) throw std::invalid_argument("pair balance needs at least two points");

  const ExactMatrix n = lift_01_mat(m, Domain::integers()).matrix();
  if (!matches_pbd_gram(n * transpose(n), r, lambda)) {
    throw HypothesisError("matrix is not a regular-PBD incidence matrix: N N^T != " + count_str(lambda) + " J + " +
                          std::to_string(static_cast<long long>(r) - static_cast<long long>(lambda)) + " I");
  }

  IncidenceSystem s = system_of_mat(m);
  const DesignClass c = classify(s);
  if (c.regular_r != r || c.pbd_lambda != lambda) {
    throw std::logic_error("Gram identity holds but classification disagrees");
  }
  return s;
}

const HypothesisCheck* FisherReport::first_failure() const {
  auto it = std::find_if(hypotheses.begin(), hypotheses.end(), [](const HypothesisCheck& h) { return !h.passed; });
  return it == hypotheses.end() ? nullptr : &*it;
}

FisherReport uniform_fisher(const IncidenceSystem& s) {
  const std::size_t v = s.point_count();
  const std::size_t b = s.block_count();
  const DesignClass c = classify(s);

  FisherReport report;
  report.variant = FisherVariant::uniform;
  auto& h = report.hypotheses;

  h.push_back({"uniform block size", c.uniform_k.has_value(),
               c.uniform_k ? "k = " + count_str(*c.uniform_k) : (b == 0 ? "no blocks" : "block sizes vary")});
  if (!c.uniform_k) return violated(std::move(report));
  const std::size_t k = *c.uniform_k;
  h.push_back({"block size at least 2", k >= 2, "k = " + count_str(k)});
  h.push_back({"incomplete", k < v, "k = " + count_str(k) + ", v = " + count_str(v)});
  std::string balance_detail = "lambda = " + (c.pbd_lambda ? count_str(*c.pbd_lambda) : std::string("none"));
  if (v < 2) balance_detail = "fewer than two points";
  h.push_back({"pairwise balanced", c.pbd_lambda.has_value(), balance_detail});
  if (report.first_failure() != nullptr) return violated(std::move(report));

  const std::size_t r = *c.regular_r;
  const std::size_t lambda = *c.pbd_lambda;
  const ExactMatrix n = lift_01_mat(inc_mat_of(s), Domain::rationals()).matrix();
  BoundCertificate cert = rank_argument(n);

  const Domain q = Domain::rationals();
  const Scalar closed_form =
      det_aI_bJ(Scalar::from_int(static_cast<long long>(r - lambda), q), Scalar::from_int(static_cast<long long>(lambda), q), v);
  if (!(closed_form == *cert.square_det)) {
    throw std::logic_error("det(N N^T) = " + cert.square_det->to_string() + " but closed form gives " +
                           closed_form.to_string());
  }

  report.certificate = std::move(cert);
  report.bound = Inequality{v, b};
  report.verdict = Verdict::bound_holds;
  return report;
}

FisherReport odd_town(const IncidenceSystem& s) {
  const std::size_t v = s.point_count();
  const std::size_t b = s.block_count();

  FisherReport report;
  report.variant = FisherVariant::odd_town;
  auto& h = report.hypotheses;

  HypothesisCheck odd{"odd block sizes", true, "all " + count_str(b) + " blocks odd"};
  for (std::size_t j = 0; j < b && odd.passed; ++j) {
    if (block_size(s, j) % 2 == 0) {
      odd.passed = false;
      odd.detail = "block " + count_str(j) + " has even size " + count_str(block_size(s, j));
    }
  }
  h.push_back(odd);

  HypothesisCheck even{"even pairwise intersections", true, "all pairwise intersections even"};
  for (std::size_t i = 0; i < b && even.passed; ++i) {
    for (std::size_t j = i + 1; j < b && even.passed; ++j) {
      const std::size_t x = inter_num(s, i, j);
      if (x % 2 != 0) {
        even.passed = false;
        even.detail = "blocks " + count_str(i) + " and " + count_str(j) + ": pairwise intersection " + count_str(x) +
                      " is odd";
      }
    }
  }
  h.push_back(even);
  if (report.first_failure() != nullptr) return violated(std::move(report));

  // Odd sizes with even intersections force distinct blocks.
  const bool simple = classify(s).is_simple;
  h.push_back({"simple (implied)", simple, simple ? "no repeated blocks" : "repeated block despite odd-town hypotheses"});
  if (!simple) throw std::logic_error("odd-town family with a repeated block");

  const Domain gf2 = Domain::prime_field(2);
  const ExactMatrix n = lift_01_mat(inc_mat_of(s), gf2).matrix();
  const std::vector<ExactVector> cols = columns_of(n);
  report.certificate = linear_bound(cols, v, gf2);
  report.bound = Inequality{b, v};
  report.verdict = Verdict::bound_holds;
  return report;
}

FisherReport general_fisher(const IncidenceSystem& s) {
  const std::size_t v = s.point_count();
  const std::size_t b = s.block_count();
  const DesignClass c = classify(s);

  FisherReport report;
  report.variant = FisherVariant::general;
  auto& h = report.hypotheses;

  h.push_back({"distinct blocks", c.is_simple, c.is_simple ? "no repeated blocks" : "some block is repeated"});
  if (!c.is_simple) return violated(std::move(report));

  if (b < 2) {
    const bool ok = b == 0 || v >= 1;
    h.push_back({"trivial case: fewer than two blocks", ok,
                 "b = " + count_str(b) + ", v = " + count_str(v) + (ok ? "" : ": a block on an empty ground set")});
    if (!ok) return violated(std::move(report));
    report.bound = Inequality{b, v};
    report.verdict = Verdict::trivial_case;
    return report;
  }

  h.push_back({"constant intersection", c.const_intersect_k.has_value(),
               c.const_intersect_k ? "k = " + count_str(*c.const_intersect_k) : "pairwise intersections vary"});
  if (!c.const_intersect_k) return violated(std::move(report));
  const std::size_t k = *c.const_intersect_k;

  if (k == 0) {
    // Distinct, pairwise disjoint, nonempty blocks: b <= sum |A_i| <= v.
    h.push_back({"nonempty blocks", c.is_design, c.is_design ? "no empty block" : "an empty block with b >= 2"});
    if (!c.is_design) return violated(std::move(report));
    std::size_t covered = 0;
    for (const Block& blk : s.blocks()) covered += blk.size();
    const bool ok = b <= covered && covered <= v;
    h.push_back({"trivial case: pairwise disjoint", ok,
                 "b = " + count_str(b) + " <= " + count_str(covered) + " covered points <= v = " + count_str(v)});
    if (!ok) throw std::logic_error("disjoint nonempty blocks exceed the ground set");
    report.bound = Inequality{b, v};
    report.verdict = Verdict::trivial_case;
    return report;
  }

  const ExactMatrix n = lift_01_mat(inc_mat_of(s), Domain::rationals()).matrix();
  const std::vector<ExactVector> cols = columns_of(n);
  report.certificate = linear_bound(cols, v, Domain::rationals());
  report.bound = Inequality{b, v};
  report.verdict = Verdict::bound_holds;
  return report;
}

FisherReport fisher_dual(const IncidenceSystem& s) {
  const std::size_t v = s.point_count();
  const std::size_t b = s.block_count();
  const DesignClass c = classify(s);

  FisherReport report;
  report.variant = FisherVariant::dual;
  auto& h = report.hypotheses;

  h.push_back({"at least two points", v >= 2, "v = " + count_str(v)});
  h.push_back({"pairwise balanced", c.pbd_lambda.has_value(),
               c.pbd_lambda ? "lambda = " + count_str(*c.pbd_lambda) : "no constant pair index >= 1"});
  h.push_back({"incomplete", c.is_incomplete, c.is_incomplete ? "every block smaller than v" : "some block is complete"});
  if (report.first_failure() != nullptr) return violated(std::move(report));

  const IncidenceSystem d = dual(s);
  const bool dual_simple = classify(d).is_simple;
  h.push_back({"dual blocks distinct", dual_simple, dual_simple ? "dual is simple" : "dual repeats a block"});
  if (!dual_simple) return violated(std::move(report));

  FisherReport inner = general_fisher(d);
  for (const HypothesisCheck& check : inner.hypotheses) {
    h.push_back({"dual: " + check.name, check.passed, check.detail});
  }
  if (inner.verdict != Verdict::bound_holds) return violated(std::move(report));

  report.certificate = std::move(inner.certificate);
  report.bound = Inequality{v, b};
  report.verdict = Verdict::bound_holds;
  return report;
}

FisherReport run_fisher(FisherVariant variant, const IncidenceSystem& s) {
  switch (variant) {
    case FisherVariant::uniform:
      return uniform_fisher(s);
    case FisherVariant::odd_town:
      return odd_town(s);
    case FisherVariant::general:
      return general_fisher(s);
    case FisherVariant::dual:
      return fisher_dual(s);
  }
  throw std::invalid_argument("unknown Fisher variant");
}

bool revalidate(const FisherReport& report, const IncidenceSystem& s) {
  const std::size_t v = s.point_count();
  const std::size_t b = s.block_count();
  const bool points_bound_blocks = report.variant == FisherVariant::uniform || report.variant == FisherVariant::dual;
  const Inequality expected = points_bound_blocks ? Inequality{v, b} : Inequality{b, v};

  if (report.verdict == Verdict::hypotheses_violated) return !report.certificate.has_value();
  if (!report.bound || !(*report.bound == expected) || !expected.holds()) return false;
  if (report.verdict == Verdict::trivial_case) return true;
  if (!report.certificate) return false;

  const BoundCertificate& cert = *report.certificate;
  if (!(cert.inequality == expected)) return false;

  switch (report.variant) {
    case FisherVariant::uniform: {
      if (cert.technique != Technique::rank_argument || !cert.square_det) return false;
      if (cert.matrix_dims != std::pair{v, b} || cert.rank_value != v) return false;
      const ExactMatrix n = change_domain(inc_mat_of(s).matrix(), Domain::rationals());
      const Scalar det = det_bareiss(n * transpose(n));
      return !det.is_zero() && det == Scalar::convert(*cert.square_det, Domain::rationals());
    }
    case FisherVariant::odd_town:
    case FisherVariant::general: {
      const Domain d = report.variant == FisherVariant::odd_town ? Domain::prime_field(2) : Domain::rationals();
      if (cert.technique != Technique::linear_bound || !(cert.domain == d)) return false;
      if (cert.matrix_dims != std::pair{v, b} || cert.rank_value != b) return false;
      return rank_field(change_domain(inc_mat_of(s).matrix(), d)) == b;
    }
    case FisherVariant::dual: {
      if (cert.technique != Technique::linear_bound) return false;
      if (cert.matrix_dims != std::pair{b, v} || cert.rank_value != v) return false;
      return rank_field(transpose(change_domain(inc_mat_of(s).matrix(), Domain::rationals()))) == v;
    }
  }
  return false;
}

const char* to_string(Technique t) {
  return t == Technique::rank_argument ? "rank-argument" : "linear-bound";
}

const char* to_string(FisherVariant v) {
  switch (v) {
    case FisherVariant::uniform:
      return "uniform";
    case FisherVariant::odd_town:
      return "oddtown";
    case FisherVariant::general:
      return "general";
    case FisherVariant::dual:
      return "dual";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::bound_holds:
      return "bound-holds";
    case Verdict::hypotheses_violated:
      return "hypotheses-violated";
    case Verdict::trivial_case:
      return "trivial-case";
  }
  return "?";
}

std::optional<FisherVariant> parse_variant(std::string_view name) {
  if (name == "uniform") return FisherVariant::uniform;
  if (name == "oddtown" || name == "odd-town") return FisherVariant::odd_town;
  if (name == "general") return FisherVariant::general;
  if (name == "dual") return FisherVariant::dual;
  return std::nullopt;
}

}  // namespace designlab
