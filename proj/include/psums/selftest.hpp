#pragma once

#include <string>
#include <vector>

namespace psums {

struct SelfTestCheck {
  std::string name;
  bool pass = false;
  /// Measured quantity against its threshold, human readable.
  std::string detail;
};

struct SelfTestReport {
  std::vector<SelfTestCheck> checks;
  bool all_pass() const;
  /// One line per check, no timestamps, so reruns compare byte for byte.
  std::string text() const;
};

/// Fast invariant suite: special-function identities, saddle data, chart round
/// trips, small zero clouds and the n = 20 F_n identity.
SelfTestReport run_selftest();

}  // namespace psums
