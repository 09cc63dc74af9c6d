#include "designlab/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

namespace designlab {

using nlohmann::json;

namespace {

json optional_count(const std::optional<std::size_t>& x) { return x ? json(*x) : json(nullptr); }

std::string optional_text(const std::optional<std::size_t>& x, const char* absent = "-") {
  return x ? std::to_string(*x) : std::string(absent);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

json Report::to_json() const {
  json out = {{"command", command}, {"input_digest", input_digest}, {"payload", payload}, {"exit_code", exit_code}};
  if (wall_time_seconds) out["timing"] = {{"wall_time_seconds", *wall_time_seconds}};
  return out;
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

json to_json(const DesignClass& c) {
  json out = {
      {"is_wellformed", c.is_wellformed},
      {"is_design", c.is_design},
      {"is_simple", c.is_simple},
      {"uniform_k", optional_count(c.uniform_k)},
      {"regular_r", optional_count(c.regular_r)},
      {"pbd_lambda", optional_count(c.pbd_lambda)},
      {"is_incomplete", c.is_incomplete},
      {"is_bibd", c.is_bibd},
  };
  out["const_intersect_k"] = c.intersect_determined ? optional_count(c.const_intersect_k) : json("undetermined");
  return out;
}

json to_json(const BoundCertificate& cert) {
  json out = {
      {"technique", to_string(cert.technique)},
      {"matrix_dims", {cert.matrix_dims.first, cert.matrix_dims.second}},
      {"rank", cert.rank_value},
      {"domain", cert.domain.name()},
      {"inequality", {{"lhs", cert.inequality.lhs}, {"rhs", cert.inequality.rhs}}},
  };
  // Determinants can outgrow 64 bits, so they travel as strings.
  out["square_det"] = cert.square_det ? json(cert.square_det->to_string()) : json(nullptr);
  return out;
}

json to_json(const FisherReport& report) {
  json hypotheses = json::array();
  for (const HypothesisCheck& h : report.hypotheses) {
    hypotheses.push_back({{"name", h.name}, {"passed", h.passed}, {"detail", h.detail}});
  }
  json out = {
      {"variant", to_string(report.variant)},
      {"verdict", to_string(report.verdict)},
      {"hypotheses", std::move(hypotheses)},
  };
  out["certificate"] = report.certificate ? to_json(*report.certificate) : json(nullptr);
  out["bound"] = report.bound ? json{{"lhs", report.bound->lhs}, {"rhs", report.bound->rhs}} : json(nullptr);
  return out;
}

json to_json(const EnumerationReport& report) {
  json out = {
      {"family_kind", to_string(report.family_kind)},
      {"v", report.v},
      {"instances_checked", report.instances_checked},
      {"max_family_size_found", report.max_family_size_found},
      {"violations", report.violations},
  };
  if (report.family_kind == FamilyKind::bibd) {
    out["k"] = report.k;
    out["lambda"] = report.lambda;
  }
  return out;
}

std::string render(const DesignClass& c, const IncidenceSystem& s) {
  std::ostringstream out;
  out << "points v            " << s.point_count() << "\n"
      << "blocks b            " << s.block_count() << "\n"
      << "design (nonempty)   " << yes_no(c.is_design) << "\n"
      << "simple              " << yes_no(c.is_simple) << "\n"
      << "uniform k           " << optional_text(c.uniform_k) << "\n"
      << "regular r           " << optional_text(c.regular_r) << "\n"
      << "pbd lambda          " << optional_text(c.pbd_lambda) << "\n"
      << "const intersect k   "
      << (c.intersect_determined ? optional_text(c.const_intersect_k) : std::string("undetermined")) << "\n"
      << "incomplete          " << yes_no(c.is_incomplete) << "\n"
      << "bibd                " << yes_no(c.is_bibd) << "\n";
  return out.str();
}

std::string render(const FisherReport& report) {
  std::ostringstream out;
  out << "variant   " << to_string(report.variant) << "\n";
  for (const HypothesisCheck& h : report.hypotheses) {
    out << "  [" << (h.passed ? "ok" : "FAIL") << "] " << h.name;
    if (!h.detail.empty()) out << ": " << h.detail;
    out << "\n";
  }
  if (report.certificate) {
    const BoundCertificate& c = *report.certificate;
    out << "certificate " << to_string(c.technique) << " over " << c.domain.name() << ", matrix "
        << c.matrix_dims.first << "x" << c.matrix_dims.second << ", rank " << c.rank_value;
    if (c.square_det) out << ", det " << c.square_det->to_string();
    out << "\n";
  }
  if (report.bound) {
    const bool points_first = report.variant == FisherVariant::uniform || report.variant == FisherVariant::dual;
    out << "bound     " << (points_first ? "v <= b: " : "b <= v: ") << report.bound->lhs << " <= " << report.bound->rhs
        << "\n";
  }
  out << "verdict   " << to_string(report.verdict) << "\n";
  return out.str();
}

std::string render(const EnumerationReport& report) {
  std::ostringstream out;
  out << "family " << to_string(report.family_kind) << ", v = " << report.v;
  if (report.family_kind == FamilyKind::bibd) out << ", k = " << report.k << ", lambda = " << report.lambda;
  out << "\ninstances " << report.instances_checked << ", largest family " << report.max_family_size_found
      << ", violations " << report.violations.size() << "\n";
  for (const std::string& v : report.violations) out << "  violation: " << v << "\n";
  return out.str();
}

}  // namespace designlab
