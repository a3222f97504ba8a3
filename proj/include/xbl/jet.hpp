// Truncated Taylor expansions ("jets") of a scalar function at a point.
//
// A Jet stores the scaled Taylor coefficients c[k] = f^(k)(x0) / k! for
// k = 0..kJetOrder. Arithmetic is truncated at kJetOrder, so a jet built from
// exact inputs carries exact derivatives up to that order. This is enough to
// apply differential operators of order up to 6 at a point without symbolic
// algebra or finite differences.
#ifndef XBL_JET_HPP
#define XBL_JET_HPP

#include <array>
#include <cstddef>

namespace xbl {

inline constexpr int kJetOrder = 8;

class Jet {
 public:
  using Coeffs = std::array<double, kJetOrder + 1>;

  Jet() = default;
  Jet(double center, const Coeffs& coeffs) : center_(center), c_(coeffs) {}

  static Jet constant(double center, double value);
  /// Jet of the identity function x -> x at `center`.
  static Jet variable(double center);

  double center() const noexcept { return center_; }
  const Coeffs& coeffs() const noexcept { return c_; }
  double value() const noexcept { return c_[0]; }

  double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  /// f^(k)(center) = k! * c[k]. Throws std::out_of_range for k > kJetOrder.
  double derivative(int k) const;

  /// Jet of f'. The top coefficient becomes 0, so one order of validity is lost.
  Jet differentiate() const;

  /// Zeroes coefficients above `order`.
  Jet truncated(int order) const;

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(const Jet& rhs);
  Jet& operator/=(const Jet& rhs);
  Jet& operator+=(double s);
  Jet& operator-=(double s);
  Jet& operator*=(double s);
  Jet& operator/=(double s);

 private:
  void require_same_center(const Jet& rhs) const;

  double center_ = 0.0;
  Coeffs c_{};
};

Jet operator-(Jet a);
inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator/(Jet a, const Jet& b) { return a /= b; }
inline Jet operator+(Jet a, double s) { return a += s; }
inline Jet operator+(double s, Jet a) { return a += s; }
inline Jet operator-(Jet a, double s) { return a -= s; }
inline Jet operator-(double s, Jet a) { return (-a) += s; }
inline Jet operator*(Jet a, double s) { return a *= s; }
inline Jet operator*(double s, Jet a) { return a *= s; }
inline Jet operator/(Jet a, double s) { return a /= s; }
Jet operator/(double s, const Jet& a);

// Elementary functions, by the usual Taylor-coefficient recurrences.
Jet exp(const Jet& a);
Jet log(const Jet& a);   // requires a.value() > 0
Jet sqrt(const Jet& a);  // requires a.value() > 0
Jet pow(const Jet& a, double p);  // requires a.value() > 0
Jet ipow(const Jet& a, int p);    // integer power by repeated multiplication, p >= 0

}  // namespace xbl

#endif  // XBL_JET_HPP
