// Classical and exceptional Hermite/Laguerre polynomials.
//
// Sequences are indexed over all n >= 0; q_n is identically zero at the
// exceptional degrees of the family, and deg q_n = n otherwise.
#ifndef XBL_SPECIAL_POLYS_HPP
#define XBL_SPECIAL_POLYS_HPP

#include <string>
#include <vector>

#include "xbl/jet.hpp"

namespace xbl {

/// Largest degree accepted by the evaluators. Beyond it double-precision
/// recurrences overflow on the sampled ranges.
inline constexpr int kMaxDegree = 200;

enum class FamilyKind { XHermite, XLaguerre };

class PolyFamily {
 public:
  static PolyFamily xhermite();
  /// Throws std::invalid_argument unless alpha > 0.
  static PolyFamily xlaguerre(double alpha);

  FamilyKind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  const std::vector<int>& exceptional() const noexcept { return exceptional_; }
  bool is_exceptional(int n) const noexcept;
  int max_exceptional() const noexcept { return exceptional_.back(); }
  bool in_interior(double x) const noexcept { return x > lower_ && x < upper_; }

  /// Z ∩ [0, N], increasing.
  std::vector<int> regular_indices(int N) const;

  /// "xhermite" or "xlaguerre".
  std::string name() const;

  /// Half-order d of the commuting differential operator (order 2d) and the
  /// half-bandwidth k of its banded partner.
  int commuting_half_order() const noexcept { return kind_ == FamilyKind::XHermite ? 3 : 2; }
  int commuting_bandwidth() const noexcept { return commuting_half_order(); }

 private:
  PolyFamily(FamilyKind kind, double alpha, double lower, double upper, std::vector<int> x)
      : kind_(kind), alpha_(alpha), lower_(lower), upper_(upper), exceptional_(std::move(x)) {}

  FamilyKind kind_;
  double alpha_;
  double lower_;
  double upper_;
  std::vector<int> exceptional_;
};

bool operator==(const PolyFamily& a, const PolyFamily& b);

/// Physicists' Hermite H_n(x), leading coefficient 2^n.
double hermite_classical(int n, double x);

/// Generalized Laguerre L_n^(alpha)(x) with L_n^(alpha)(0) = binom(n + alpha, n).
/// L_{-1} is taken as 0.
double laguerre_classical(int n, double alpha, double x);

/// The orthonormal exceptional polynomial q_n(x); exactly 0 for exceptional n.
/// Throws std::domain_error if x is not in the open interval of the family,
/// std::overflow_error if the value is not representable.
double q_eval(const PolyFamily& fam, int n, double x);

/// Jet of q_n at x, exact through `order` (<= kJetOrder), zero above.
Jet q_jet(const PolyFamily& fam, int n, double x, int order);

/// The orthogonality weight w(x) > 0.
double weight(const PolyFamily& fam, double x);

/// Jet of sqrt(w) at x, exact through `order`.
Jet weight_sqrt_jet(const PolyFamily& fam, double x, int order);

/// Normalization constant multiplying the classical combination in q_n
/// (0 for exceptional n).
double q_normalization(const PolyFamily& fam, int n);

}  // namespace xbl

#endif  // XBL_SPECIAL_POLYS_HPP
