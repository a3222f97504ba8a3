#include "xbl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace xbl {

QuadratureRule gauss_legendre(int order) {
  if (order < 1 || order > 128) throw std::out_of_range("gauss_legendre: order must be in [1, 128]");
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(order - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (order % 2 == 1) rule.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
  return rule;
}

namespace {

const QuadratureRule& rule32() {
  static const QuadratureRule r = gauss_legendre(32);
  return r;
}

const QuadratureRule& rule16() {
  static const QuadratureRule r = gauss_legendre(16);
  return r;
}

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

double apply_rule(const QuadratureRule& r, const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
  return s * half;
}

Panel make_panel(const std::function<double(double)>& f, double a, double b) {
  const double g32 = apply_rule(rule32(), f, a, b);
  const double g16 = apply_rule(rule16(), f, a, b);
  return {a, b, g32, std::abs(g32 - g16)};
}

}  // namespace

Integral integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integrate_adaptive: need finite a < b");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tol must be positive");

  // Kept sorted by left endpoint.
  std::vector<Panel> panels{make_panel(f, a, b)};
  auto total_error = [&] {
    double e = 0.0;
    for (const auto& p : panels) e += p.error;
    return e;
  };
  while (!(total_error() <= tol)) {
    if (!std::isfinite(total_error())) {
      throw ConvergenceError("integrate_adaptive: non-finite integrand or error estimate");
    }
    if (static_cast<int>(panels.size()) >= kMaxPanels) {
      throw ConvergenceError("integrate_adaptive: no convergence within 4096 panels");
    }
    const auto worst = std::max_element(panels.begin(), panels.end(),
                                        [](const Panel& l, const Panel& r) { return l.error < r.error; });
    const double mid = 0.5 * (worst->a + worst->b);
    if (!(mid > worst->a && mid < worst->b)) {
      throw ConvergenceError("integrate_adaptive: panel width reached machine resolution");
    }
    const Panel left = make_panel(f, worst->a, mid);
    const Panel right = make_panel(f, mid, worst->b);
    *worst = left;
    panels.insert(worst + 1, right);
  }

  Integral out;
  for (const auto& p : panels) {
    out.value += p.value;
    out.error += p.error;
  }
  out.panels = static_cast<int>(panels.size());
  return out;
}

double lower_cutoff(const PolyFamily& fam, int degree, double tol) {
  if (fam.kind() != FamilyKind::XHermite) throw std::invalid_argument("lower_cutoff: XHermite only");
  if (!(tol > 0.0)) throw std::invalid_argument("lower_cutoff: tol must be positive");
  const double p = 2.0 * std::max(degree, 0);
  // p ln x - x^2/2 is decreasing for x > sqrt(p), so checking it at A covers [A, ∞).
  double A = 8.0;
  for (;;) {
    const bool bound_holds = A * A >= p && p * std::log(A) <= 0.5 * A * A;
    const double tail = std::sqrt(0.5 * std::numbers::pi) * std::erfc(A / std::numbers::sqrt2);
    if (bound_holds && tail < tol) return A;
    A *= 2.0;
  }
}

double upper_cutoff(const PolyFamily& fam, int degree, double tol) {
  if (fam.kind() != FamilyKind::XLaguerre) throw std::invalid_argument("upper_cutoff: XLaguerre only");
  if (!(tol > 0.0)) throw std::invalid_argument("upper_cutoff: tol must be positive");
  const double p = fam.alpha() + 2.0 * std::max(degree, 0);
  // p ln x - x/2 is decreasing for x > 2p.
  double B = 16.0;
  for (;;) {
    const bool bound_holds = B >= 2.0 * p && p * std::log(B) <= 0.5 * B;
    const double tail = 2.0 * std::exp(-0.5 * B);
    if (bound_holds && tail < tol) return B;
    B *= 2.0;
  }
}

Range truncated_range(const PolyFamily& fam, double omega, int degree, double tol) {
  if (fam.kind() == FamilyKind::XHermite) {
    const double A = lower_cutoff(fam, degree, tol);
    return {-A, std::isinf(omega) ? A : omega};
  }
  return {0.0, std::isinf(omega) ? upper_cutoff(fam, degree, tol) : omega};
}

}  // namespace xbl
