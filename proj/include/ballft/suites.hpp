#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ballft/report.hpp"

namespace ballft {

/// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state, golden-ratio increment.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);

 private:
  std::uint64_t state_;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  int r_max = 3;
  /// Replaces the relative tolerance of every check when set.
  std::optional<double> tolerance;
};

/// Suite names accepted by run_suite, besides "all".
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one suite (or "all") and returns canonically sorted reports.
/// Throws ParameterError for an unknown name.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);

// Individual check groups.
std::vector<VerificationReport> gegenbauer_orthogonality_checks(const SuiteOptions& options);
std::vector<VerificationReport> jacobi_relation_checks(const SuiteOptions& options);
std::vector<VerificationReport> ball_orthogonality_checks(const SuiteOptions& options);
std::vector<VerificationReport> ball_pde_checks(const SuiteOptions& options);
std::vector<VerificationReport> fourier_path_checks(const SuiteOptions& options);
std::vector<VerificationReport> fourier_oracle_checks(const SuiteOptions& options);
std::vector<VerificationReport> fourier_known_value_checks(const SuiteOptions& options);
std::vector<VerificationReport> hahn_orthogonality_checks(const SuiteOptions& options);
std::vector<VerificationReport> parseval_checks(const SuiteOptions& options);
std::vector<VerificationReport> dfamily_orthogonality_checks(const SuiteOptions& options);
std::vector<VerificationReport> dfamily_structure_checks(const SuiteOptions& options);
std::vector<VerificationReport> dfamily_constant_checks(const SuiteOptions& options);

}  // namespace ballft
