#include "xbl/jet.hpp"

#include <cmath>
#include <stdexcept>

namespace xbl {

namespace {
constexpr int K = kJetOrder;
}

Jet Jet::constant(double center, double value) {
  Jet j;
  j.center_ = center;
  j.c_[0] = value;
  return j;
}

Jet Jet::variable(double center) {
  Jet j;
  j.center_ = center;
  j.c_[0] = center;
  j.c_[1] = 1.0;
  return j;
}

double Jet::derivative(int k) const {
  if (k < 0 || k > K) throw std::out_of_range("Jet::derivative: order out of range");
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return factorial * c_[static_cast<std::size_t>(k)];
}

Jet Jet::differentiate() const {
  Jet d;
  d.center_ = center_;
  for (int k = 0; k < K; ++k) d.c_[k] = (k + 1) * c_[k + 1];
  d.c_[K] = 0.0;
  return d;
}

Jet Jet::truncated(int order) const {
  Jet t = *this;
  for (int k = order + 1; k <= K; ++k) t.c_[k] = 0.0;
  return t;
}

void Jet::require_same_center(const Jet& rhs) const {
  if (center_ != rhs.center_) throw std::invalid_argument("Jet arithmetic: centers differ");
}

Jet& Jet::operator+=(const Jet& rhs) {
  require_same_center(rhs);
  for (int k = 0; k <= K; ++k) c_[k] += rhs.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  require_same_center(rhs);
  for (int k = 0; k <= K; ++k) c_[k] -= rhs.c_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& rhs) {
  require_same_center(rhs);
  Coeffs out{};
  for (int k = 0; k <= K; ++k) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) s += c_[i] * rhs.c_[k - i];
    out[k] = s;
  }
  c_ = out;
  return *this;
}

Jet& Jet::operator/=(const Jet& rhs) {
  require_same_center(rhs);
  if (rhs.c_[0] == 0.0) throw std::domain_error("Jet division: zero leading coefficient");
  Coeffs out{};
  for (int k = 0; k <= K; ++k) {
    double s = c_[k];
    for (int i = 1; i <= k; ++i) s -= rhs.c_[i] * out[k - i];
    out[k] = s / rhs.c_[0];
  }
  c_ = out;
  return *this;
}

Jet& Jet::operator+=(double s) {
  c_[0] += s;
  return *this;
}

Jet& Jet::operator-=(double s) {
  c_[0] -= s;
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Jet& Jet::operator/=(double s) {
  for (auto& v : c_) v /= s;
  return *this;
}

Jet operator-(Jet a) { return a *= -1.0; }

Jet operator/(double s, const Jet& a) { return Jet::constant(a.center(), s) / a; }

Jet exp(const Jet& a) {
  Jet::Coeffs e{};
  e[0] = std::exp(a[0]);
  for (int k = 1; k <= K; ++k) {
    double s = 0.0;
    for (int i = 1; i <= k; ++i) s += i * a[i] * e[k - i];
    e[k] = s / k;
  }
  return Jet(a.center(), e);
}

Jet log(const Jet& a) {
  if (!(a[0] > 0.0)) throw std::domain_error("Jet log: non-positive base");
  Jet::Coeffs l{};
  l[0] = std::log(a[0]);
  for (int k = 1; k <= K; ++k) {
    double s = 0.0;
    for (int i = 1; i < k; ++i) s += i * l[i] * a[k - i];
    l[k] = (a[k] - s / k) / a[0];
  }
  return Jet(a.center(), l);
}

Jet sqrt(const Jet& a) {
  if (!(a[0] > 0.0)) throw std::domain_error("Jet sqrt: non-positive base");
  Jet::Coeffs r{};
  r[0] = std::sqrt(a[0]);
  for (int k = 1; k <= K; ++k) {
    double s = 0.0;
    for (int i = 1; i < k; ++i) s += r[i] * r[k - i];
    r[k] = (a[k] - s) / (2.0 * r[0]);
  }
  return Jet(a.center(), r);
}

Jet pow(const Jet& a, double p) {
  if (!(a[0] > 0.0)) throw std::domain_error("Jet pow: non-positive base");
  Jet::Coeffs y{};
  y[0] = std::pow(a[0], p);
  for (int k = 1; k <= K; ++k) {
    double s = 0.0;
    for (int i = 1; i <= k; ++i) s += ((p + 1.0) * i - k) * a[i] * y[k - i];
    y[k] = s / (k * a[0]);
  }
  return Jet(a.center(), y);
}

Jet ipow(const Jet& a, int p) {
  if (p < 0) throw std::invalid_argument("Jet ipow: negative exponent");
  Jet r = Jet::constant(a.center(), 1.0);
  for (int i = 0; i < p; ++i) r *= a;
  return r;
}

}  // namespace xbl
