#pragma once

#include <string>
#include <vector>

#include "tlab/enumeration.hpp"

namespace tlab {

struct Counterexample {
  std::string code;  // compact code of the offending representative
  std::string details;
};

struct VerificationReport {
  std::string check_id;
  int n_lo = 0;
  int n_hi = 0;
  bool pass = false;
  long instances_checked = 0;
  long total_counterexamples = 0;
  std::vector<Counterexample> counterexamples;  // capped at 10
  double elapsed_seconds = 0.0;
};

// Registered check ids, in a stable order.
std::vector<std::string> check_ids();

// Run one named exhaustive check over every representative with n in
// [n_lo, n_hi] intersected with the check's applicable orders. Requesting
// past the enumeration cap is an error, never a silent truncation.
VerificationReport run_check(const std::string& check_id, int n_lo, int n_hi,
                             Enumerator& reps, bool parallel = true);

}  // namespace tlab
