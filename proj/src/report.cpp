#include "ballft/report.hpp"

#include <algorithm>
#include <cmath>

namespace ballft {

VerificationReport make_report(std::string name, ParameterSet parameters, Complex lhs, Complex rhs,
                               Tolerance tol, std::optional<double> scale, bool low_confidence) {
  VerificationReport rep;
  rep.identity_name = std::move(name);
  rep.parameters = std::move(parameters);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_error = std::abs(lhs - rhs);
  const double s = scale.value_or(std::abs(rhs));
  rep.rel_error = s > 0.0 ? rep.abs_error / s : rep.abs_error;
  rep.tolerance = tol.relative;
  rep.passed = std::isfinite(rep.abs_error) &&
               (rep.rel_error <= tol.relative || rep.abs_error <= tol.absolute_floor);
  rep.low_confidence = low_confidence;
  return rep;
}

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    if (a.identity_name != b.identity_name) return a.identity_name < b.identity_name;
    return a.parameters < b.parameters;
  });
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

}  // namespace ballft
