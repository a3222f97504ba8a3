// Gauss-Legendre rules and globally adaptive composite integration.
#ifndef XBL_QUADRATURE_HPP
#define XBL_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "xbl/special_polys.hpp"

namespace xbl {

struct QuadratureRule {
  std::vector<double> nodes;    // ascending, in [-1, 1]
  std::vector<double> weights;  // positive, sum to 2
  int order = 0;
};

/// Gauss-Legendre rule with `order` points, 1 <= order <= 128.
QuadratureRule gauss_legendre(int order);

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Integral {
  double value = 0.0;
  double error = 0.0;  // sum over panels of |G32 - G16|
  int panels = 0;
};

inline constexpr int kMaxPanels = 4096;

/// Integrates f over [a, b] with 32-point Gauss-Legendre panels, bisecting the
/// panel with the largest |G32 - G16| until the summed estimate is <= tol.
/// Panel values are summed left to right, so results are deterministic.
/// Throws ConvergenceError when more than kMaxPanels panels would be needed.
Integral integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol);

/// A > 0 with  ∫_{-∞}^{-A} x^(2 degree) e^{-x^2} dx < tol  (XHermite only).
/// A is found by doubling from 8 until the bound x^(2d) <= e^{x^2/2} holds on
/// [A, ∞) and sqrt(pi/2) erfc(A/sqrt 2) < tol.
double lower_cutoff(const PolyFamily& fam, int degree, double tol);

/// B > 0 with  ∫_B^∞ x^(alpha + 2 degree) e^{-x} dx < tol  (XLaguerre only),
/// found the same way from the bound x^p <= e^{x/2}.
double upper_cutoff(const PolyFamily& fam, int degree, double tol);

/// Finite integration range standing in for (a, min(omega, b)) when the
/// integrand is a polynomial of degree <= 2 degree times the family weight.
/// Pass omega = +infinity for the full interval.
struct Range {
  double lo;
  double hi;
};
Range truncated_range(const PolyFamily& fam, double omega, int degree, double tol);

}  // namespace xbl

#endif  // XBL_QUADRATURE_HPP
