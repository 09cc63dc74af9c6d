#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "designlab/design_io.hpp"
#include "designlab/report.hpp"
#include "designlab/theorems.hpp"

namespace designlab::cli {

struct GlobalOptions {
  /// Overrides format inference for input and output files.
  std::optional<io::DesignFormat> format;
};

enum class SelftestLevel { quick, full };

// Each command reads its inputs, runs the library operation and packages the
// outcome. Input problems surface as exceptions (io::ParseError,
// MalformedSystem, std::runtime_error); run() maps them to exit code 2.

Report cmd_check(const std::filesystem::path& path, const GlobalOptions& opts);
Report cmd_matrix(const std::filesystem::path& path, const GlobalOptions& opts);
/// Writes the dual to `out`, in the format named by --format, else by the
/// extension of `out`, else the input format. With no `out` the design
/// text becomes the human-readable output.
Report cmd_dual(const std::filesystem::path& path, const std::optional<std::filesystem::path>& out,
                const GlobalOptions& opts);
Report cmd_complement(const std::filesystem::path& path, const std::optional<std::filesystem::path>& out,
                      const GlobalOptions& opts);
/// Exit 0 iff the verdict is bound-holds or trivial-case.
Report cmd_fisher(const std::filesystem::path& path, FisherVariant variant, const GlobalOptions& opts);
/// Exit 0 iff isomorphic.
Report cmd_isomorphic(const std::filesystem::path& first, const std::filesystem::path& second,
                      const GlobalOptions& opts);

struct EnumerateRequest {
  FamilyKind family = FamilyKind::odd_town;
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t lambda = 1;
  std::size_t limit = 10;
};

/// Streams one family per line to `families` (blocks separated by " | ",
/// the empty family as a blank line) and checks each with the matching
/// theorem; the summary comes back as the report.
Report cmd_enumerate(const EnumerateRequest& request, std::ostream& families);

Report cmd_selftest(SelftestLevel level);

/// Full command-line entry point. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace designlab::cli
