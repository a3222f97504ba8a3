// The invariant suite behind `xbl verify`.
#ifndef XBL_VERIFY_HPP
#define XBL_VERIFY_HPP

#include <string>
#include <vector>

#include "xbl/config.hpp"
#include "xbl/io.hpp"

namespace xbl {

struct CheckResult {
  std::string name;
  double value;      // the measured residual (or count for rank checks)
  double threshold;  // pass iff value < threshold, or value == threshold for counts
  bool pass;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int failures() const;
};

/// Runs every check for the family, N and omega of cfg. Results depend only
/// on cfg, so repeated runs serialize identically.
VerifyReport run_verify_suite(const RunConfig& cfg);

json to_json(const VerifyReport& r);

/// One "PASS|FAIL name value threshold" line per check.
std::string format_table(const VerifyReport& r);

}  // namespace xbl

#endif  // XBL_VERIFY_HPP
