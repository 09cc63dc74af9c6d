#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "designlab/enumerate.hpp"
#include "designlab/incidence.hpp"
#include "designlab/theorems.hpp"

namespace designlab {

/// CLI exit codes.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitNegative = 1,  ///< hypotheses violated, not isomorphic, bound question answered "no"
  kExitInputError = 2,
};

/// Output of one CLI command. The payload carries no timing; wall time, when
/// measured, lives in its own field so payloads stay comparable run to run.
struct Report {
  std::string command;
  std::string input_digest;
  nlohmann::json payload;
  std::string human;  ///< rendering for the default (non --json) output
  int exit_code = kExitSuccess;
  std::optional<double> wall_time_seconds;

  nlohmann::json to_json() const;
};

/// "fnv1a64:<16 hex digits>" over the raw bytes.
std::string input_digest(std::string_view bytes);

nlohmann::json to_json(const DesignClass& c);
nlohmann::json to_json(const BoundCertificate& cert);
nlohmann::json to_json(const FisherReport& report);
/// wall_time is left out; Report carries it separately.
nlohmann::json to_json(const EnumerationReport& report);

std::string render(const DesignClass& c, const IncidenceSystem& s);
std::string render(const FisherReport& report);
std::string render(const EnumerationReport& report);

}  // namespace designlab
