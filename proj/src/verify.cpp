#include "xbl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "xbl/quadrature.hpp"

namespace xbl {

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

namespace {

CheckResult below(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, value < threshold};
}

CheckResult equal(std::string name, int value, int expected) {
  return {std::move(name), static_cast<double>(value), static_cast<double>(expected), value == expected};
}

double orthonormality_defect(const PolyFamily& fam, int n_max, double tol) {
  const GramMatrix g = gram_matrix(fam, std::max(n_max, fam.max_exceptional() + 1), fam.upper(), tol);
  const Eigen::MatrixXd c = compress(g).matrix;
  return (c - Eigen::MatrixXd::Identity(c.rows(), c.cols())).cwiseAbs().maxCoeff();
}

std::vector<double> sample_grid(const PolyFamily& fam, int count) {
  std::vector<double> grid;
  for (int i = 0; i < count; ++i) {
    const double t = (i + 0.5) / count;
    grid.push_back(fam.kind() == FamilyKind::XHermite ? -3.0 + 6.0 * t : 0.05 + 6.0 * t);
  }
  return grid;
}

}  // namespace

VerifyReport run_verify_suite(const RunConfig& cfg) {
  const PolyFamily fam = make_family(cfg);
  validate_time_band(fam, cfg.N, cfg.omega);
  VerifyReport r;
  auto& c = r.checks;

  c.push_back(below("orthonormality", orthonormality_defect(fam, 25, cfg.tol), 1e-9));

  const auto grid50 = sample_grid(fam, 50);
  for (int j = 0; j < builtin_count(fam); ++j) {
    c.push_back(below("intertwining_D" + std::to_string(j), verify_pair(fam, j, 20, grid50), 1e-8));
  }

  const GramMatrix M = gram_matrix(fam, cfg.N, cfg.omega, cfg.tol);
  const CommutingPair pair = make_commuting_pair(M, cfg.perturbation);
  c.push_back(below("cond1", pair.cond1_residual, 1e-10));
  c.push_back(below("cond2", pair.cond2_residual, 1e-9));
  c.push_back(below("commutator", pair.commutator_residual, 1e-8));

  const auto grid20 = sample_grid(fam, 20);
  c.push_back(below("cross_representation", cross_representation_residual(fam, cfg.N, cfg.omega, 15, grid20), 1e-7));

  std::mt19937_64 rng(cfg.seed);
  const double lo = fam.kind() == FamilyKind::XHermite ? -2.5 : 0.05;
  std::uniform_real_distribution<double> u(lo, lo + 5.0);
  std::vector<std::pair<double, double>> samples;
  for (int i = 0; i < 10; ++i) {
    const double x = u(rng);
    samples.emplace_back(x, u(rng));
  }
  c.push_back(below("kernel_symmetry", kernel_symmetry_residual(fam, cfg.N, cfg.omega, samples), 1e-6));

  std::vector<BandedOperator> Y;
  for (const auto& op : fourier_basis(fam)) Y.push_back(op.op);
  const int expected = static_cast<int>(Y.size());
  c.push_back(equal("independence_rank", independence_rank(Y, fam.kind() == FamilyKind::XHermite ? 40 : 30), expected));

  const GenericSolution g = solve_commuting_generic(Y, M);
  c.push_back(below("generic_rediscovery", g.nontrivial ? g.residual : std::numeric_limits<double>::infinity(), 1e-8));

  const SpectralReport s = diagonalize_via_commuting(fam, cfg.N, cfg.omega, cfg.tol, cfg.eps);
  double outside = 0.0;
  for (double e : s.eig_M_direct) outside = std::max({outside, -e, e - 1.0});
  c.push_back(below("gram_spectrum_bounds", outside, 1e-10));
  if (s.degenerate_That) {
    c.push_back({"spectrum_agreement_skipped_degenerate_That", s.min_gap_That, 0.0, true});
  } else {
    c.push_back(below("spectrum_agreement", s.spectrum_mismatch, 1e-8));
  }
  return r;
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass}});
  }
  return {{"checks", checks}, {"failures", r.failures()}};
}

std::string format_table(const VerifyReport& r) {
  std::string out;
  char line[160];
  for (const auto& c : r.checks) {
    std::snprintf(line, sizeof line, "%s  %-24s %.3e  (limit %.1e)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                  c.value, c.threshold);
    out += line;
  }
  return out;
}

}  // namespace xbl
