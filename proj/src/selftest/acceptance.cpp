#include "designlab/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "designlab/design_io.hpp"
#include "designlab/enumerate.hpp"
#include "designlab/incidence.hpp"
#include "designlab/oracles.hpp"
#include "designlab/theorems.hpp"

namespace designlab::selftest {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few failures of a randomized check.
class FailureLog {
 public:
  void fail(const std::string& what) {
    if (count_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  std::size_t count() const { return count_; }
  Outcome outcome(const std::string& summary) const {
    if (count_ == 0) return {true, summary};
    return {false, std::to_string(count_) + " failures: " + notes_};
  }

 private:
  std::size_t count_ = 0;
  std::string notes_;
};

std::vector<std::vector<mpz_class>> to_mpz_rows(const ExactMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const Scalar& s : m.row(i)) rows[i].push_back(s.to_integer());
  }
  return rows;
}

std::filesystem::path scratch_file(const std::string& name) {
  static const auto stamp = Clock::now().time_since_epoch().count();
  return std::filesystem::temp_directory_path() / ("designlab-selftest-" + std::to_string(stamp) + "-" + name);
}

Outcome uniform_fisher_on_fano() {
  const IncidenceSystem fano = oracle::fano_plane();
  const auto path = scratch_file("fano.json");
  {
    std::ofstream out(path);
    out << io::write_design(fano, io::DesignFormat::json);
  }
  const auto started = Clock::now();
  const Report report = cli::cmd_fisher(path, FisherVariant::uniform, {});
  const double elapsed = seconds_since(started);
  std::filesystem::remove(path);

  const nlohmann::json& p = report.payload;
  const Scalar closed = det_aI_bJ(Scalar::from_int(2, Domain::integers()), Scalar::from_int(1, Domain::integers()), 7);
  const ExactMatrix gram = mat_build(7, 7, Domain::integers(), [](std::size_t i, std::size_t j) { return i == j ? 3 : 1; });
  const mpz_class cofactor = oracle::cofactor_det(to_mpz_rows(gram));

  std::ostringstream detail;
  detail << "exit " << report.exit_code << ", verdict " << p.value("verdict", "?") << ", det "
         << p["certificate"].value("square_det", "?") << ", closed form " << closed.to_string() << ", cofactor "
         << cofactor.get_str() << ", " << elapsed << " s";
  const bool ok = report.exit_code == kExitSuccess && p["verdict"] == "bound-holds" && p["bound"]["lhs"] == 7 &&
                  p["bound"]["rhs"] == 7 && p["certificate"]["square_det"] == "576" && closed.to_string() == "576" &&
                  cofactor == 576 && elapsed < 1.0;
  return {ok, detail.str()};
}

Outcome exhaustive(ExhaustiveTheorem theorem, std::size_t v_lo, std::size_t v_hi, double budget_seconds) {
  const auto started = Clock::now();
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first;
  for (std::size_t v = v_lo; v <= v_hi; ++v) {
    const EnumerationReport r = verify_exhaustive(theorem, v);
    instances += r.instances_checked;
    violations += r.violations.size();
    if (first.empty() && !r.violations.empty()) first = r.violations.front();
  }
  const double elapsed = seconds_since(started);
  std::ostringstream detail;
  detail << "v = " << v_lo << ".." << v_hi << ", " << instances << " instances, " << violations << " violations, "
         << elapsed << " s (budget " << budget_seconds << " s)";
  if (!first.empty()) detail << "; first: " << first;
  return {violations == 0 && elapsed < budget_seconds, detail.str()};
}

Outcome characterization_on_fano() {
  const IncidenceSystem fano = oracle::fano_plane();
  const auto [r, lambda] = pbd_characterization_reverse(fano);

  const auto gram = oracle::gram_by_dot_products(fano);
  bool entrywise = true;
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) entrywise &= gram[i][j] == (i == j ? 1 + 2 : 1);
  }
  const ExactMatrix n = inc_mat_of(fano).matrix();
  const ExactMatrix expected = ExactMatrix::ones(7, 7, Domain::integers()) +
                               scale(Scalar::from_int(2, Domain::integers()), ExactMatrix::identity(7, Domain::integers()));
  entrywise &= n * transpose(n) == expected;

  const IncidenceSystem rebuilt = pbd_characterization_forward(inc_mat_of(fano), 3, 1);
  const DesignClass c = classify(rebuilt);
  const bool forward_ok = rebuilt == fano && c.regular_r == 3u && c.pbd_lambda == 1u;

  std::ostringstream detail;
  detail << "reverse (" << r << ", " << lambda << "), N N^T = J + 2I " << (entrywise ? "verified" : "MISMATCH")
         << ", forward " << (forward_ok ? "regular PBD r=3 lambda=1" : "FAILED");
  return {r == 3 && lambda == 1 && entrywise && forward_ok, detail.str()};
}

Outcome determinant_invariance(std::size_t trials) {
  std::mt19937_64 rng(0x5eed0005);
  FailureLog log;
  const Domain zz = Domain::integers();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const ExactMatrix a = oracle::random_matrix(rng, n, n, zz, -9, 9);
    const Scalar c = Scalar::from_int(std::uniform_int_distribution<long>(-9, 9)(rng), zz);
    const std::size_t pivot = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != pivot && std::bernoulli_distribution(0.6)(rng)) others.push_back(i);
    }
    const int op = std::uniform_int_distribution<int>(0, 3)(rng);
    ExactMatrix b = a;
    switch (op) {
      case 0:
        b = add_multiple_rows(a, c, pivot, others);
        break;
      case 1:
        b = add_row_to_multiple(a, c, others, pivot);
        break;
      case 2:
        b = add_multiple_cols(a, c, pivot, others);
        break;
      default:
        b = add_col_to_multiple(a, c, others, pivot);
        break;
    }
    if (!(det_bareiss(a) == det_bareiss(b))) log.fail("trial " + std::to_string(t) + " op " + std::to_string(op));
  }
  return log.outcome(std::to_string(trials) + " trials, determinant unchanged in all");
}

Outcome rank_lemmas(std::size_t trials) {
  std::mt19937_64 rng(0x5eed0006);
  FailureLog log;
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::size_t strict = 0;
  for (const Domain d : {Domain::rationals(), Domain::prime_field(5)}) {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t m = dim(rng), k = dim(rng), p = dim(rng);
      const ExactMatrix a = oracle::random_matrix(rng, m, k, d, -4, 4, 0.5);
      const ExactMatrix b = oracle::random_matrix(rng, k, p, d, -4, 4, 0.5);
      const std::size_t ra = rank_field(a), rb = rank_field(b), rab = rank_field(a * b);
      strict += rab < std::min(ra, rb);
      if (rab > std::min(ra, rb)) log.fail(d.name() + " trial " + std::to_string(t) + ": rank(AB) too large");
      if (ra > std::min(m, k) || rb > std::min(k, p)) log.fail(d.name() + " trial " + std::to_string(t) + ": rank > dims");
    }
  }
  return log.outcome(std::to_string(trials) + " pairs each over QQ and GF(5); " + std::to_string(strict) +
                     " with strict rank drop");
}

Outcome dual_complement_identities(std::size_t trials, std::size_t enum_v) {
  std::mt19937_64 rng(0x5eed0007);
  FailureLog log;
  for (std::size_t t = 0; t < trials; ++t) {
    const IncidenceSystem s = oracle::random_system(rng, 6, 6);
    const ExactMatrix n = inc_mat_of(s).matrix();
    const std::string tag = "trial " + std::to_string(t);
    const IncidenceSystem d = dual(s);
    if (!(inc_mat_of(d).matrix() == transpose(n))) log.fail(tag + ": dual is not the transpose");
    if (!(inc_mat_of(complement(s)).matrix() == ExactMatrix::ones(n.rows(), n.cols(), n.domain()) - n)) {
      log.fail(tag + ": complement is not J - N");
    }
    for (std::size_t j = 0; j < s.block_count(); ++j) {
      if (replication_number(d, j) != block_size(s, j)) log.fail(tag + ": replication/block size swap");
    }
    for (std::size_t x = 0; x < s.point_count(); ++x) {
      if (block_size(d, x) != replication_number(s, x)) log.fail(tag + ": block size/replication swap");
    }
  }
  std::size_t families = 0;
  for (std::size_t v = 0; v <= enum_v; ++v) {
    enum_const_intersect(v, [&](const IncidenceSystem& f) {
      ++families;
      const DesignClass fc = classify(f);
      const DesignClass dc = classify(dual(f));
      if (!fc.const_intersect_k || dc.pbd_lambda != fc.const_intersect_k) {
        log.fail("[" + family_line(f) + "]: dual lambda does not match k");
      }
      return true;
    });
  }
  return log.outcome(std::to_string(trials) + " random systems; " + std::to_string(families) +
                     " constant-intersect families (v <= " + std::to_string(enum_v) + ") dualize to PBDs");
}

Outcome property_bridge(std::size_t trials) {
  std::mt19937_64 rng(0x5eed0008);
  FailureLog log;
  const Domain targets[] = {Domain::rationals(), Domain::prime_field(2)};
  for (std::size_t t = 0; t < trials; ++t) {
    const IncidenceSystem s = oracle::random_system(rng, 6, 6);
    const IncidenceMatrix01 n = inc_mat_of(s);
    const std::string tag = "trial " + std::to_string(t);

    // All subsets T of size <= 2 plus one random subset.
    std::vector<std::vector<Point>> subsets = {{}};
    for (Point x = 0; x < s.point_count(); ++x) {
      subsets.push_back({x});
      for (Point y = x + 1; y < s.point_count(); ++y) subsets.push_back({x, y});
    }
    std::vector<Point> random_t;
    for (Point x = 0; x < s.point_count(); ++x) {
      if (std::bernoulli_distribution(0.5)(rng)) random_t.push_back(x);
    }
    subsets.push_back(random_t);

    auto check_counts = [&](const IncidenceMatrix01& m, const std::string& where) {
      for (Point x = 0; x < s.point_count(); ++x) {
        if (mat_rep_num(m, x) != replication_number(s, x)) log.fail(tag + where + ": mat_rep_num");
      }
      for (std::size_t j = 0; j < s.block_count(); ++j) {
        if (mat_block_size(m, j) != block_size(s, j)) log.fail(tag + where + ": mat_block_size");
        for (std::size_t i = 0; i < s.block_count(); ++i) {
          if (mat_inter_num(m, i, j) != inter_num(s, i, j)) log.fail(tag + where + ": mat_inter_num");
        }
      }
      for (const auto& subset : subsets) {
        if (mat_point_index(m, subset) != points_index(s, subset)) log.fail(tag + where + ": mat_point_index");
      }
    };
    check_counts(n, "");
    for (const Domain& d : targets) {
      const IncidenceMatrix01 lifted = lift_01_mat(n, d);
      for (std::size_t i = 0; i < n.rows(); ++i) {
        for (std::size_t j = 0; j < n.cols(); ++j) {
          if (lifted.is_one(i, j) != n.is_one(i, j)) log.fail(tag + ": lift to " + d.name() + " changed the pattern");
        }
      }
      check_counts(lifted, " (" + d.name() + ")");
    }
  }
  return log.outcome(std::to_string(trials) + " random systems; all counts agree over ZZ, QQ and GF(2)");
}

Outcome dual_fisher_examples() {
  const FisherReport fano = fisher_dual(oracle::fano_plane());
  const bool fano_ok = fano.verdict == Verdict::bound_holds && fano.bound == Inequality{7, 7};

  const std::vector<IncidenceSystem> found = collect_bibd(9, 3, 1, 1);
  if (found.empty()) return {false, "enum_bibd found no (9,3,1) design"};
  const IncidenceSystem& sts = found.front();
  const DesignClass c = classify(sts);
  bool pairs_ok = true;
  for (std::size_t x = 0; x < 9; ++x) {
    for (std::size_t y = x + 1; y < 9; ++y) pairs_ok &= oracle::pair_count(sts, x, y) == 1;
  }
  const bool sts_class_ok = c.is_bibd && c.uniform_k == 3u && c.pbd_lambda == 1u && sts.block_count() == 12 && pairs_ok;
  const FisherReport sts_report = fisher_dual(sts);
  const bool sts_ok = sts_report.verdict == Verdict::bound_holds && sts_report.bound == Inequality{9, 12};

  std::ostringstream detail;
  detail << "Fano " << to_string(fano.verdict);
  if (fano.bound) detail << " " << fano.bound->lhs << " <= " << fano.bound->rhs;
  detail << "; (9,3,1) " << (sts_class_ok ? "classified BIBD" : "MISCLASSIFIED") << ", " << to_string(sts_report.verdict);
  if (sts_report.bound) detail << " " << sts_report.bound->lhs << " <= " << sts_report.bound->rhs;
  return {fano_ok && sts_class_ok && sts_ok && revalidate(fano, oracle::fano_plane()) && revalidate(sts_report, sts),
          detail.str()};
}

Outcome enumeration_soundness(std::size_t max_v) {
  FailureLog log;
  std::size_t compared = 0;
  auto compare = [&](const char* name, std::size_t v, const std::vector<IncidenceSystem>& stream,
                     const std::set<oracle::CanonicalFamily>& naive) {
    std::set<oracle::CanonicalFamily> seen;
    for (const IncidenceSystem& s : stream) seen.insert(oracle::canonical(s));
    const std::string tag = std::string(name) + " v=" + std::to_string(v);
    if (seen.size() != stream.size()) log.fail(tag + ": duplicates in stream");
    if (seen != naive) {
      log.fail(tag + ": " + std::to_string(seen.size()) + " families vs " + std::to_string(naive.size()) + " naive");
    }
    compared += stream.size();
  };
  for (std::size_t v = 0; v <= max_v; ++v) {
    compare("odd-town", v, collect_odd_town(v), oracle::naive_odd_town(v));
    compare("const-intersect", v, collect_const_intersect(v), oracle::naive_const_intersect(v));
  }
  return log.outcome(std::to_string(compared) + " streamed families match the naive filter for v <= " +
                     std::to_string(max_v));
}

}  // namespace

std::vector<CriterionResult> run_acceptance(cli::SelftestLevel level) {
  const bool full = level == cli::SelftestLevel::full;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Uniform Fisher on Fano", uniform_fisher_on_fano},
      {"Exhaustive odd-town",
       [full] { return exhaustive(ExhaustiveTheorem::odd_town, 1, full ? 6 : 4, 120.0); }},
      {"Exhaustive generalized Fisher",
       [full] { return exhaustive(ExhaustiveTheorem::general_fisher, 2, full ? 5 : 4, 300.0); }},
      {"Characterization theorem", characterization_on_fano},
      {"Determinant invariance", [full] { return determinant_invariance(full ? 1000 : 200); }},
      {"Rank lemmas", [full] { return rank_lemmas(full ? 1000 : 200); }},
      {"Dual/complement identities", [full] { return dual_complement_identities(full ? 500 : 100, 4); }},
      {"Property-equivalence bridge", [full] { return property_bridge(full ? 500 : 100); }},
      {"Dual Fisher", dual_fisher_examples},
      {"Enumeration soundness", [full] { return enumeration_soundness(full ? 4 : 3); }},
  };

  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i + 1);
    r.title = criteria[i].first;
    const auto started = Clock::now();
    try {
      const Outcome o = criteria[i].second();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("threw: ") + e.what();
    }
    r.seconds = seconds_since(started);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + (r.id < 10 ? " " : "") + std::to_string(r.id) + "  " +
         r.title + ": " + r.detail + " (" + timing + ")";
}

}  // namespace designlab::selftest
