#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ballft/report.hpp"

namespace ballft::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Entry point of the `ballft` tool; never calls std::exit.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> reports_from_json(const std::string& text);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

}  // namespace ballft::cli
