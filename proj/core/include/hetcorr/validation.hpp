#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hetcorr {

struct ValidationOptions {
  std::uint64_t seed = 20260826;
  double tolerance_scale = 1.0;  // multiplies every tolerance
  std::size_t n_samples = std::size_t{1} << 20;       // per main simulation
  std::size_t sweep_samples = std::size_t{1} << 19;   // per sweep grid point
};

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double predicted = 0.0;
  double tolerance = 0.0;
  bool one_sided = false;  // pass iff measured <= predicted + tolerance
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Full Monte-Carlo-vs-closed-form validation run: coherent CSD null,
/// negative/positive squeezed CSD, conventional-detector reference, beat
/// factor of 4, optimal squeezing, feasibility boundary, direct detection,
/// and estimator properties.
ValidationReport run_acceptance(const ValidationOptions& opts = {});

}  // namespace hetcorr
