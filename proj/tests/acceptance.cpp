// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "xbl/commuting.hpp"
#include "xbl/gram.hpp"
#include "xbl/spectral.hpp"
#include "xbl/verify.hpp"

using namespace xbl;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct GridPoint {
  PolyFamily fam;
  int N;
  double omega;
};

std::vector<GridPoint> condition_grid() {
  std::vector<GridPoint> g;
  for (int N : {5, 12, 20})
    for (double omega : {-1.0, 0.3, 2.0}) g.push_back({PolyFamily::xhermite(), N, omega});
  for (double alpha : {0.5, 1.3})
    for (int N : {5, 10})
      for (double omega : {0.7, 3.0}) g.push_back({PolyFamily::xlaguerre(alpha), N, omega});
  return g;
}

std::vector<double> sample_grid(const PolyFamily& fam, int count) {
  std::vector<double> g;
  for (int i = 0; i < count; ++i) {
    const double t = (i + 0.5) / count;
    g.push_back(fam.kind() == FamilyKind::XHermite ? -3.0 + 6.0 * t : 0.05 + 6.0 * t);
  }
  return g;
}

std::string sci(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2e", v);
  return b;
}

Outcome orthonormality() {
  double worst = 0.0;
  for (const auto& fam : {PolyFamily::xhermite(), PolyFamily::xlaguerre(0.5), PolyFamily::xlaguerre(1.0),
                          PolyFamily::xlaguerre(2.7)}) {
    const Eigen::MatrixXd c = compress(gram_matrix(fam, 25, fam.upper(), 1e-12)).matrix;
    worst = std::max(worst, (c - Eigen::MatrixXd::Identity(c.rows(), c.cols())).cwiseAbs().maxCoeff());
  }
  return {worst < 1e-9, "max |<q_m,q_n> - delta| = " + sci(worst) + " (< 1e-9)"};
}

Outcome intertwining() {
  double worst = 0.0;
  for (const auto& fam : {PolyFamily::xhermite(), PolyFamily::xlaguerre(0.5), PolyFamily::xlaguerre(1.3),
                          PolyFamily::xlaguerre(2.7)}) {
    for (int j = 0; j < builtin_count(fam); ++j) worst = std::max(worst, verify_pair(fam, j, 20, sample_grid(fam, 50)));
  }
  return {worst < 1e-8, "max pair residual = " + sci(worst) + " (< 1e-8)"};
}

Outcome conditions() {
  double c1 = 0.0;
  double c2 = 0.0;
  for (const auto& p : condition_grid()) {
    c1 = std::max(c1, check_cond1(p.fam, p.N, p.omega));
    c2 = std::max(c2, check_cond2(perline_That(p.fam, p.N, p.omega), p.N));
  }
  return {c1 < 1e-10 && c2 < 1e-9, "cond1 = " + sci(c1) + " (< 1e-10), cond2 = " + sci(c2) + " (< 1e-9)"};
}

Outcome commutation() {
  double worst = 0.0;
  for (const auto& p : condition_grid()) {
    worst = std::max(worst, commutator_residual(perline_That(p.fam, p.N, p.omega), gram_matrix(p.fam, p.N, p.omega, 1e-12)));
  }
  return {worst < 1e-8, "max relative commutator = " + sci(worst) + " (< 1e-8)"};
}

Outcome cross_representation() {
  const auto H = PolyFamily::xhermite();
  const auto L = PolyFamily::xlaguerre(1.3);
  const double h = cross_representation_residual(H, 12, 0.3, 15, sample_grid(H, 20));
  const double l = cross_representation_residual(L, 10, 0.7, 15, sample_grid(L, 20));
  return {h < 1e-7 && l < 1e-7, "xhermite " + sci(h) + ", xlaguerre " + sci(l) + " (< 1e-7)"};
}

Outcome kernel_symmetry() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  std::vector<std::pair<double, double>> s;
  for (int i = 0; i < 10; ++i) {
    const double x = u(rng);
    s.emplace_back(x, u(rng));
  }
  const double r = kernel_symmetry_residual(PolyFamily::xhermite(), 12, 0.3, s);
  return {r < 1e-6, "residual = " + sci(r) + " (< 1e-6)"};
}

std::vector<BandedOperator> basis(const PolyFamily& fam) {
  std::vector<BandedOperator> out;
  for (const auto& n : fourier_basis(fam)) out.push_back(n.op);
  return out;
}

Outcome ranks() {
  const int h = independence_rank(basis(PolyFamily::xhermite()), 40);
  const int l = independence_rank(basis(PolyFamily::xlaguerre(1.3)), 30);
  return {h == 14 && l == 8, "xhermite " + std::to_string(h) + "/14, xlaguerre " + std::to_string(l) + "/8"};
}

Outcome rediscovery() {
  const auto H = PolyFamily::xhermite();
  const GenericSolution g = solve_commuting_generic(basis(H), gram_matrix(H, 12, 0.3, 1e-12));
  double off_identity = 0.0;
  for (std::size_t i = 1; i < g.coefficients.size(); ++i) off_identity = std::max(off_identity, std::abs(g.coefficients[i]));
  const bool ok = g.nontrivial && off_identity > 0.0 && g.residual < 1e-8;
  return {ok, "residual = " + sci(g.residual) + " (< 1e-8), non-scalar = " + (ok ? "yes" : "no")};
}

Outcome spectral() {
  int evaluated = 0;
  int passed = 0;
  int excluded = 0;
  double worst = 0.0;
  std::string excluded_points;
  const auto grid = condition_grid();
  for (const auto& p : grid) {
    const SpectralReport r = diagonalize_via_commuting(p.fam, p.N, p.omega);
    if (r.degenerate_That) {
      ++excluded;
      excluded_points += " " + p.fam.name() + "(N=" + std::to_string(p.N) + ",omega=" + sci(p.omega) + ")";
      continue;
    }
    ++evaluated;
    double outside = 0.0;
    for (double e : r.eig_M_direct) outside = std::max({outside, -e - 1e-10, e - 1.0 - 1e-10});
    worst = std::max(worst, r.spectrum_mismatch);
    if (r.spectrum_mismatch < 1e-8 && outside <= 0.0) ++passed;
  }
  const bool ok = passed == evaluated && passed * 5 >= static_cast<int>(grid.size()) * 4;
  std::string d = std::to_string(passed) + "/" + std::to_string(grid.size()) + " points pass, max mismatch " +
                  sci(worst) + " (< 1e-8)";
  if (excluded > 0) d += ", excluded (degenerate That):" + excluded_points;
  return {ok, d};
}

Outcome determinism() {
  RunConfig cfg;
  cfg.seed = 9;
  const std::string a = to_json(run_verify_suite(cfg)).dump();
  const std::string b = to_json(run_verify_suite(cfg)).dump();
  return {a == b, a == b ? "identical verify JSON" : "verify JSON differs"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 orthonormality", 30, orthonormality},
      {"2 intertwining", 10, intertwining},
      {"3 conditions", 5, conditions},
      {"4 commutation", 60, commutation},
      {"5 cross-representation", 10, cross_representation},
      {"6 kernel symmetry", 5, kernel_symmetry},
      {"7 independence ranks", 5, ranks},
      {"8 generic rediscovery", 10, rediscovery},
      {"9 spectral payoff", 60, spectral},
      {"10 determinism", 60, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.ok && s < c.budget_s;
    failures += ok ? 0 : 1;
    std::printf("%s  %-24s %s; %.2f s (< %.0f s)\n", ok ? "PASS" : "FAIL", c.name, o.detail.c_str(), s, c.budget_s);
  }
  return failures;
}
