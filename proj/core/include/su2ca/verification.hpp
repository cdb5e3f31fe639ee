#pragma once

#include <string>
#include <vector>

namespace su2ca {

// One named invariant check. `residual` is the worst value observed,
// `threshold` the allowance it was compared against after scaling. Exact
// integer checks count mismatches and never scale.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  int two_l_max = 8;
  double tol = 1e-9;  // scales every float threshold by tol / 1e-9
  unsigned mc_samples = 1000000;
};

// Cross-module invariant suite: algebra identities, symbol calculus,
// Fourier round trips, solver bounds, complex composites, report totals.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

}  // namespace su2ca
