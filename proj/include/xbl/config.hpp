// Run configuration shared by the CLI and the verification suite.
#ifndef XBL_CONFIG_HPP
#define XBL_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "xbl/special_polys.hpp"

namespace xbl {

inline constexpr const char* kVersion = "xbl 0.1.0";

struct RunConfig {
  std::string family = "xhermite";
  std::optional<double> alpha;
  int N = 12;
  double omega = 0.3;
  double tol = 1e-12;
  double eps = 0.01;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  // Relative error injected into the leading Perline coefficient. Not part of
  // the echoed config; used only by negative controls.
  double perturbation = 0.0;
};

/// Throws std::invalid_argument for an unknown family, a missing or
/// superfluous alpha, or alpha <= 0.
PolyFamily make_family(const RunConfig& cfg);

}  // namespace xbl

#endif  // XBL_CONFIG_HPP
