#include "designlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "designlab/acceptance.hpp"
#include "designlab/enumerate.hpp"
#include "designlab/incidence.hpp"

namespace designlab::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json system_json(const IncidenceSystem& s) {
  return {{"v", s.point_count()}, {"blocks", s.blocks()}};
}

Report transformed(const char* command, const std::filesystem::path& path,
                   const std::optional<std::filesystem::path>& out, const GlobalOptions& opts,
                   IncidenceSystem (*transform)(const IncidenceSystem&)) {
  const io::DesignFile in = io::read_design(path, opts.format);
  const IncidenceSystem result = transform(in.system);
  io::DesignFormat format = opts.format.value_or(in.format);
  if (out && !opts.format && (out->extension() == ".json" || out->extension() == ".txt" || out->extension() == ".design")) {
    format = io::infer_format(*out, "");
  }
  const std::string text = io::write_design(result, format);

  Report r;
  r.command = command;
  r.input_digest = input_digest(in.content);
  r.payload = {{"design", system_json(result)}};
  if (out) {
    std::ofstream file(*out);
    if (!file) throw std::runtime_error("cannot write " + out->string());
    file << text;
    r.payload["written_to"] = out->string();
    r.human = "wrote " + out->string() + "\n";
  } else {
    r.human = text;
  }
  return r;
}

}  // namespace

Report cmd_check(const std::filesystem::path& path, const GlobalOptions& opts) {
  const io::DesignFile in = io::read_design(path, opts.format);
  const DesignClass c = classify(in.system);
  Report r;
  r.command = "check";
  r.input_digest = input_digest(in.content);
  r.payload = {{"v", in.system.point_count()}, {"b", in.system.block_count()}, {"classification", to_json(c)}};
  r.human = render(c, in.system);
  return r;
}

Report cmd_matrix(const std::filesystem::path& path, const GlobalOptions& opts) {
  const io::DesignFile in = io::read_design(path, opts.format);
  const ExactMatrix n = inc_mat_of(in.system).matrix();
  json rows = json::array();
  for (std::size_t i = 0; i < n.rows(); ++i) {
    json row = json::array();
    for (const Scalar& x : n.row(i)) row.push_back(x.is_one() ? 1 : 0);
    rows.push_back(std::move(row));
  }
  Report r;
  r.command = "matrix";
  r.input_digest = input_digest(in.content);
  r.payload = {{"rows", n.rows()}, {"cols", n.cols()}, {"matrix", std::move(rows)}};
  r.human = to_string(n);
  return r;
}

Report cmd_dual(const std::filesystem::path& path, const std::optional<std::filesystem::path>& out,
                const GlobalOptions& opts) {
  return transformed("dual", path, out, opts, &dual);
}

Report cmd_complement(const std::filesystem::path& path, const std::optional<std::filesystem::path>& out,
                      const GlobalOptions& opts) {
  return transformed("complement", path, out, opts, &complement);
}

Report cmd_fisher(const std::filesystem::path& path, FisherVariant variant, const GlobalOptions& opts) {
  const io::DesignFile in = io::read_design(path, opts.format);
  const auto started = Clock::now();
  const FisherReport fr = run_fisher(variant, in.system);
  Report r;
  r.command = "fisher";
  r.input_digest = input_digest(in.content);
  r.payload = to_json(fr);
  r.human = render(fr);
  r.exit_code = fr.verdict == Verdict::hypotheses_violated ? kExitNegative : kExitSuccess;
  r.wall_time_seconds = seconds_since(started);
  return r;
}

Report cmd_isomorphic(const std::filesystem::path& first, const std::filesystem::path& second,
                      const GlobalOptions& opts) {
  const io::DesignFile a = io::read_design(first, opts.format);
  const io::DesignFile b = io::read_design(second, opts.format);
  const bool iso = are_isomorphic(a.system, b.system);
  Report r;
  r.command = "isomorphic";
  r.input_digest = input_digest(a.content + b.content);
  r.payload = {{"isomorphic", iso}};
  r.human = iso ? "isomorphic\n" : "not isomorphic\n";
  r.exit_code = iso ? kExitSuccess : kExitNegative;
  return r;
}

Report cmd_enumerate(const EnumerateRequest& request, std::ostream& families) {
  EnumerationReport er;
  er.family_kind = request.family;
  er.v = request.v;
  const auto started = Clock::now();
  auto visit = [&](const IncidenceSystem& s, FisherReport (*check)(const IncidenceSystem&)) {
    families << family_line(s) << '\n';
    ++er.instances_checked;
    er.max_family_size_found = std::max(er.max_family_size_found, s.block_count());
    const FisherReport fr = check(s);
    if (fr.verdict == Verdict::hypotheses_violated || !revalidate(fr, s)) {
      const HypothesisCheck* failure = fr.first_failure();
      er.violations.push_back("[" + family_line(s) + "] " + to_string(fr.verdict) +
                              (failure ? ": " + failure->name : std::string()));
    }
  };
  switch (request.family) {
    case FamilyKind::odd_town:
      enum_odd_town(request.v, [&](const IncidenceSystem& s) {
        visit(s, &odd_town);
        return true;
      });
      break;
    case FamilyKind::const_intersect:
      enum_const_intersect(request.v, [&](const IncidenceSystem& s) {
        visit(s, &general_fisher);
        return true;
      });
      break;
    case FamilyKind::bibd:
      er.k = request.k;
      er.lambda = request.lambda;
      enum_bibd(request.v, request.k, request.lambda, request.limit, [&](const IncidenceSystem& s) {
        visit(s, &uniform_fisher);
        return true;
      });
      break;
  }
  er.wall_time = Clock::now() - started;

  Report r;
  r.command = "enumerate";
  r.payload = to_json(er);
  r.human = render(er);
  r.exit_code = er.violations.empty() ? kExitSuccess : kExitNegative;
  r.wall_time_seconds = er.wall_time.count();
  return r;
}

Report cmd_selftest(SelftestLevel level) {
  const auto started = Clock::now();
  const auto results = selftest::run_acceptance(level);
  Report r;
  r.command = "selftest";
  r.payload = {{"level", level == SelftestLevel::full ? "full" : "quick"}, {"criteria", json::array()}};
  bool all = true;
  for (const auto& c : results) {
    all &= c.passed;
    r.payload["criteria"].push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"detail", c.detail}});
    r.human += selftest::format_line(c) + '\n';
  }
  r.payload["passed"] = all;
  r.exit_code = all ? kExitSuccess : kExitNegative;
  r.wall_time_seconds = seconds_since(started);
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic workbench for block designs and Fisher-type inequalities", "designlab"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json and --format follow the subcommand

  std::string format_name;
  bool as_json = false;
  app.add_option("--format", format_name, "Design file format (json or text); inferred when omitted")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--json", as_json, "Print the machine-readable report");

  std::string input, second, output;
  auto add_input = [&](CLI::App* sub) { sub->add_option("design", input, "Design file")->required(); };

  CLI::App* check = app.add_subcommand("check", "Classify a design");
  add_input(check);
  CLI::App* matrix = app.add_subcommand("matrix", "Print the 0/1 incidence matrix");
  add_input(matrix);
  CLI::App* dual_cmd = app.add_subcommand("dual", "Write the dual design");
  add_input(dual_cmd);
  dual_cmd->add_option("-o,--output", output, "Output file");
  CLI::App* complement_cmd = app.add_subcommand("complement", "Write the complement design");
  add_input(complement_cmd);
  complement_cmd->add_option("-o,--output", output, "Output file");

  CLI::App* fisher = app.add_subcommand("fisher", "Check a Fisher-type inequality");
  add_input(fisher);
  std::string variant_name = "uniform";
  fisher->add_option("--variant", variant_name, "uniform, oddtown, general or dual")
      ->check(CLI::IsMember({"uniform", "oddtown", "odd-town", "general", "dual"}));

  CLI::App* iso = app.add_subcommand("isomorphic", "Test two designs for isomorphism");
  iso->add_option("first", input, "First design")->required();
  iso->add_option("second", second, "Second design")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate families and check each one");
  std::string family_name;
  EnumerateRequest request;
  enumerate->add_option("--family", family_name, "odd-town, const-intersect or bibd")
      ->required()
      ->check(CLI::IsMember({"odd-town", "oddtown", "const-intersect", "bibd"}));
  enumerate->add_option("--v", request.v, "Number of points")->required();
  enumerate->add_option("--k", request.k, "Block size (bibd)");
  enumerate->add_option("--lambda", request.lambda, "Pair multiplicity (bibd)");
  enumerate->add_option("--limit", request.limit, "Maximum number of designs (bibd)");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance criteria");
  bool full = false;
  selftest_cmd->add_flag("--full", full, "Use the full bounds instead of the quick ones");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "designlab: " << e.what() << '\n';
    return kExitInputError;
  }

  GlobalOptions opts;
  if (!format_name.empty()) opts.format = io::parse_format(format_name);
  const auto out_path = output.empty() ? std::nullopt : std::optional<std::filesystem::path>(output);

  Report report;
  try {
    if (check->parsed()) {
      report = cmd_check(input, opts);
    } else if (matrix->parsed()) {
      report = cmd_matrix(input, opts);
    } else if (dual_cmd->parsed()) {
      report = cmd_dual(input, out_path, opts);
    } else if (complement_cmd->parsed()) {
      report = cmd_complement(input, out_path, opts);
    } else if (fisher->parsed()) {
      report = cmd_fisher(input, *parse_variant(variant_name), opts);
    } else if (iso->parsed()) {
      report = cmd_isomorphic(input, second, opts);
    } else if (enumerate->parsed()) {
      request.family = family_name == "bibd"              ? FamilyKind::bibd
                       : family_name == "const-intersect" ? FamilyKind::const_intersect
                                                          : FamilyKind::odd_town;
      // Families go to stdout only in human mode; --json prints the summary alone.
      std::ostringstream sink;
      report = cmd_enumerate(request, as_json ? sink : out);
      if (!as_json) {
        err << report.human;
        return report.exit_code;
      }
    } else {
      report = cmd_selftest(full ? SelftestLevel::full : SelftestLevel::quick);
    }
  } catch (const std::exception& e) {
    // Mathematical negatives come back as exit 1 inside the report; anything
    // thrown here is a problem with the input or the request.
    err << "designlab: " << e.what() << '\n';
    return kExitInputError;
  }

  if (as_json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.human;
  }
  return report.exit_code;
}

}  // namespace designlab::cli
