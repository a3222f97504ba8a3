#include "xbl/gram.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "xbl/quadrature.hpp"

namespace xbl {

void validate_band(const PolyFamily& fam, int N, double omega) {
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (N > kMaxDegree) throw std::invalid_argument("N exceeds the supported maximum of 200");
  if (std::isnan(omega) || !(fam.in_interior(omega) || omega == fam.upper())) {
    throw std::invalid_argument("omega must lie in the open interval of " + fam.name());
  }
}

void validate_time_band(const PolyFamily& fam, int N, double omega) {
  if (N < fam.max_exceptional() || fam.is_exceptional(N)) {
    throw std::invalid_argument("N = " + std::to_string(N) + " must be a non-exceptional degree >= " +
                                std::to_string(fam.max_exceptional()) + " for " + fam.name());
  }
  validate_band(fam, N, omega);
}

GramMatrix gram_matrix(const PolyFamily& fam, int N, double omega, double tol) {
  validate_time_band(fam, N, omega);
  if (!(tol > 0.0)) throw std::invalid_argument("gram_matrix: tol must be positive");
  GramMatrix g{fam, N, omega, tol, Eigen::MatrixXd::Zero(N + 1, N + 1)};
  // The cutoff tail bound is stated for a unit-coefficient polynomial; the
  // extra factor absorbs the normalized coefficients of q_m q_n.
  const Range r = truncated_range(fam, omega, N, tol * 1e-6);
  if (!(r.lo < r.hi)) return g;
  for (int m = 0; m <= N; ++m) {
    if (fam.is_exceptional(m)) continue;
    for (int n = m; n <= N; ++n) {
      if (fam.is_exceptional(n)) continue;
      const auto f = [&](double x) { return q_eval(fam, m, x) * q_eval(fam, n, x) * weight(fam, x); };
      const double v = integrate_adaptive(f, r.lo, r.hi, tol).value;
      g.entries(m, n) = v;
      g.entries(n, m) = v;
    }
  }
  return g;
}

double kernel_eval(const PolyFamily& fam, int N, double x, double y) {
  double s = 0.0;
  for (int n : fam.regular_indices(N)) s += q_eval(fam, n, x) * q_eval(fam, n, y);
  return s;
}

double apply_S(const PolyFamily& fam, int N, double omega, const std::function<double(double)>& f, double x,
               double tol, int f_degree) {
  validate_band(fam, N, omega);
  if (!fam.in_interior(x)) throw std::domain_error("apply_S: x outside the interval");
  const Range r = truncated_range(fam, omega, N + f_degree, tol * 1e-6);
  if (!(r.lo < r.hi)) return 0.0;
  const auto g = [&](double y) { return f(y) * weight(fam, y) * kernel_eval(fam, N, x, y); };
  return integrate_adaptive(g, r.lo, r.hi, tol).value;
}

Compressed compress(const GramMatrix& m) {
  Compressed c;
  c.indices = m.family.regular_indices(m.N);
  const auto n = static_cast<Eigen::Index>(c.indices.size());
  c.matrix.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      c.matrix(i, j) = m.entries(c.indices[static_cast<std::size_t>(i)], c.indices[static_cast<std::size_t>(j)]);
    }
  }
  return c;
}

}  // namespace xbl
