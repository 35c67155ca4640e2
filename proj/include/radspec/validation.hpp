#pragma once

#include "radspec/variational.hpp"

#include <string>
#include <vector>

namespace radspec::validation {

struct ValidationConfig {
  int basis_size = variational::kDefaultBasisSize;
  bool quick = false;  // skip the slow checks (4, 5, 6)
};

enum class Status { Pass, Fail, Skipped };

struct CheckResult {
  int id = 0;
  std::string name;
  Status status = Status::Fail;
  std::string detail;
};

// Individual acceptance checks, numbered as in the README.
CheckResult check_golden_spectra(const ValidationConfig& cfg);
CheckResult check_truncation_closed_forms();
CheckResult check_oscillator_limit(const ValidationConfig& cfg);
CheckResult check_single_truncation_eigenvalue(const ValidationConfig& cfg);
CheckResult check_hellmann_feynman(const ValidationConfig& cfg);
CheckResult check_oracle_equivalence(const ValidationConfig& cfg);
CheckResult check_node_law();
CheckResult check_ritz_upper_bound();
CheckResult check_frequency_artifact();

std::vector<CheckResult> run_all(const ValidationConfig& cfg);

bool all_passed(const std::vector<CheckResult>& results);

/// "[PASS] 1 golden spectra: ..." style line.
std::string format_line(const CheckResult& r);

}  // namespace radspec::validation
