#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ballft/special.hpp"

namespace ballft {

/// Named parameters of one check. Scalars are one-element vectors.
using ParameterSet = std::map<std::string, std::vector<double>>;

struct VerificationReport {
  std::string identity_name;
  ParameterSet parameters;
  Complex lhs;
  Complex rhs;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool low_confidence = false;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct Tolerance {
  double relative = 1e-10;
  double absolute_floor = 0.0;
};

/// rel_error = |lhs - rhs| / scale, where scale defaults to |rhs| (and falls back
/// to an absolute comparison when it is zero). passed iff rel_error <= relative
/// or abs_error <= absolute_floor.
VerificationReport make_report(std::string name, ParameterSet parameters, Complex lhs, Complex rhs,
                               Tolerance tol, std::optional<double> scale = std::nullopt,
                               bool low_confidence = false);

/// Sorts by identity name, then parameters.
void sort_reports(std::vector<VerificationReport>& reports);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace ballft
