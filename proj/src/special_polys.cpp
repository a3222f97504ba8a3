#include "xbl/special_polys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace xbl {

PolyFamily PolyFamily::xhermite() {
  const double inf = std::numeric_limits<double>::infinity();
  return PolyFamily(FamilyKind::XHermite, 0.0, -inf, inf, {1, 2});
}

PolyFamily PolyFamily::xlaguerre(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("xlaguerre: alpha must be a finite number > 0");
  }
  return PolyFamily(FamilyKind::XLaguerre, alpha, 0.0, std::numeric_limits<double>::infinity(), {0});
}

bool PolyFamily::is_exceptional(int n) const noexcept {
  return std::find(exceptional_.begin(), exceptional_.end(), n) != exceptional_.end();
}

std::vector<int> PolyFamily::regular_indices(int N) const {
  std::vector<int> out;
  for (int n = 0; n <= N; ++n) {
    if (!is_exceptional(n)) out.push_back(n);
  }
  return out;
}

std::string PolyFamily::name() const { return kind_ == FamilyKind::XHermite ? "xhermite" : "xlaguerre"; }

bool operator==(const PolyFamily& a, const PolyFamily& b) {
  return a.kind() == b.kind() && a.alpha() == b.alpha();
}

namespace {

void check_degree(int n) {
  if (n > kMaxDegree) throw std::out_of_range("degree exceeds the supported maximum of 200");
}

void check_domain(const PolyFamily& fam, double x) {
  if (!fam.in_interior(x)) {
    throw std::domain_error("point " + std::to_string(x) + " is outside the open interval of " + fam.name());
  }
}

double finite_or_throw(double v) {
  if (!std::isfinite(v)) throw std::overflow_error("polynomial value overflowed double precision");
  return v;
}

// H_0..H_n at x.
std::vector<double> hermite_table(int n, double x) {
  std::vector<double> h(static_cast<std::size_t>(std::max(n, 1)) + 1);
  h[0] = 1.0;
  h[1] = 2.0 * x;
  for (int k = 1; k < n; ++k) h[k + 1] = 2.0 * x * h[k] - 2.0 * k * h[k - 1];
  return h;
}

double binomial(int m, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (m - k + i) / i;
  return b;
}

// Jet of L_m^(alpha) at x through `order`.
Jet laguerre_jet(int m, double alpha, double x, int order) {
  Jet j = Jet::constant(x, 0.0);
  double factorial = 1.0;
  for (int k = 0; k <= order && k <= m; ++k) {
    if (k > 0) factorial *= k;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    j[k] = sign * laguerre_classical(m - k, alpha + k, x) / factorial;
  }
  return j;
}

}  // namespace

double hermite_classical(int n, double x) {
  if (n < 0) return 0.0;
  check_degree(n);
  return hermite_table(n, x)[static_cast<std::size_t>(n)];
}

double laguerre_classical(int n, double alpha, double x) {
  if (n < 0) return 0.0;
  check_degree(n);
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double q_normalization(const PolyFamily& fam, int n) {
  if (n < 0 || fam.is_exceptional(n)) return 0.0;
  check_degree(n);
  if (fam.kind() == FamilyKind::XHermite) {
    const double log_scale = 0.25 * std::log(std::numbers::pi) +
                             0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0));
    return std::sqrt(static_cast<double>((n - 1) * (n - 2))) * std::exp(-log_scale);
  }
  const double a = fam.alpha();
  return std::sqrt((a + n - 1.0) / (a + n) * std::exp(std::lgamma(static_cast<double>(n)) - std::lgamma(n + a)));
}

double q_eval(const PolyFamily& fam, int n, double x) {
  check_domain(fam, x);
  if (n < 0) throw std::invalid_argument("q_eval: negative degree");
  check_degree(n);
  if (fam.is_exceptional(n)) return 0.0;
  const double c = q_normalization(fam, n);
  if (fam.kind() == FamilyKind::XHermite) {
    const auto h = hermite_table(n, x);
    double s = h[static_cast<std::size_t>(n)];
    if (n >= 2) s += 4.0 * n * h[static_cast<std::size_t>(n - 2)];
    if (n >= 4) s += 4.0 * n * (n - 3.0) * h[static_cast<std::size_t>(n - 4)];
    return finite_or_throw(c * s);
  }
  const double a = fam.alpha();
  const double s = -(x + a + 1.0) * laguerre_classical(n - 1, a, x) + laguerre_classical(n - 2, a, x);
  return finite_or_throw(c * s);
}

Jet q_jet(const PolyFamily& fam, int n, double x, int order) {
  if (order < 0 || order > kJetOrder) throw std::out_of_range("q_jet: order exceeds jet order");
  check_domain(fam, x);
  if (n < 0) throw std::invalid_argument("q_jet: negative degree");
  check_degree(n);
  Jet out = Jet::constant(x, 0.0);
  if (fam.is_exceptional(n)) return out;
  const double c = q_normalization(fam, n);

  if (fam.kind() == FamilyKind::XHermite) {
    // d^k/dx^k H_m = 2^k m!/(m-k)! H_{m-k}, so the k-th scaled coefficient is
    // 2^k binom(m, k) H_{m-k}.
    const auto h = hermite_table(n, x);
    const struct {
      double coef;
      int degree;
    } terms[] = {{1.0, n}, {4.0 * n, n - 2}, {4.0 * n * (n - 3.0), n - 4}};
    for (int k = 0; k <= order; ++k) {
      double s = 0.0;
      for (const auto& t : terms) {
        if (t.degree < k || t.coef == 0.0) continue;
        s += t.coef * std::ldexp(binomial(t.degree, k), k) * h[static_cast<std::size_t>(t.degree - k)];
      }
      out[k] = finite_or_throw(c * s);
    }
    return out;
  }

  const double a = fam.alpha();
  const Jet linear = -(Jet::variable(x) + (a + 1.0));
  Jet s = linear * laguerre_jet(n - 1, a, x, order);
  if (n >= 2) s += laguerre_jet(n - 2, a, x, order);
  out = (c * s).truncated(order);
  for (int k = 0; k <= order; ++k) finite_or_throw(out[k]);
  return out;
}

double weight(const PolyFamily& fam, double x) {
  check_domain(fam, x);
  if (fam.kind() == FamilyKind::XHermite) {
    const double d = 1.0 + 2.0 * x * x;
    return std::exp(-x * x) / (d * d);
  }
  const double a = fam.alpha();
  return std::exp(-x) * std::pow(x, a) / ((x + a) * (x + a));
}

Jet weight_sqrt_jet(const PolyFamily& fam, double x, int order) {
  if (order < 0 || order > kJetOrder) throw std::out_of_range("weight_sqrt_jet: order exceeds jet order");
  check_domain(fam, x);
  const Jet t = Jet::variable(x);
  Jet r;
  if (fam.kind() == FamilyKind::XHermite) {
    r = exp(-0.5 * t * t) / (1.0 + 2.0 * t * t);
  } else {
    const double a = fam.alpha();
    r = exp(-0.5 * t) * pow(t, 0.5 * a) / (t + a);
  }
  return r.truncated(order);
}

}  // namespace xbl
