// The commuting operator in both representations: the banded matrix Ť built
// from the L_j, and the differential operator
//   T = w^{-1/2} (Σ_j ∂^j f_j ∂^j) w^{1/2}.
#ifndef XBL_COMMUTING_HPP
#define XBL_COMMUTING_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "xbl/banded.hpp"
#include "xbl/gram.hpp"
#include "xbl/jet.hpp"
#include "xbl/special_polys.hpp"

namespace xbl {

struct NamedOperator {
  std::string label;  // e.g. "{D0,D3}" or "D1^2"
  BandedOperator op;
};

struct PerlineTerm {
  std::string label;
  double coefficient;
  BandedOperator op;
};

/// The terms of the Perline combination with their coefficients evaluated at
/// (N, omega). Throws std::invalid_argument for invalid N or omega.
std::vector<PerlineTerm> perline_terms(const PolyFamily& fam, int N, double omega);

/// Σ coefficient * op over perline_terms. `perturbation` scales the first
/// coefficient by (1 + perturbation); it exists for negative controls.
BandedOperator perline_That(const PolyFamily& fam, int N, double omega, double perturbation = 0.0);

/// The commuting operator in both representations with its certificates.
struct CommutingPair {
  PolyFamily family;
  int N;
  double omega;
  BandedOperator That;
  double cond1_residual;
  double cond2_residual;
  double commutator_residual;
};

/// perline_That together with check_cond1, check_cond2 and the commutator
/// against M, which must have been built for the same family, N and omega.
CommutingPair make_commuting_pair(const GramMatrix& M, double perturbation = 0.0);

/// Jet at x of the coefficient f_j, 0 <= j <= commuting_half_order().
Jet f_coeff_jet(const PolyFamily& fam, int N, double omega, int j, double x);

/// Jet-valued function g(x, order).
using JetFunction = std::function<Jet(double x, int order)>;

/// (T g)(x) with the f_j of (N, omega).
double apply_T(const PolyFamily& fam, int N, double omega, const JetFunction& g, double x);

/// (D_j g)(x) for the builtin differential operator D_j; g must have order >= 2.
double apply_D(const PolyFamily& fam, int j, const Jet& g);

/// Max over non-exceptional n <= n_max and x in grid of
/// |D_j q_n(x) - (L_j q)_n(x)| / (1 + |q_n(x)|).
double verify_pair(const PolyFamily& fam, int j, int n_max, const std::vector<double>& grid);

/// Max over n <= n_max and x in grid of
/// |(T q_n)(x) - (Ť q)_n(x)| / (1 + |q_n(x)|).
double cross_representation_residual(const PolyFamily& fam, int N, double omega, int n_max,
                                      const std::vector<double>& grid);

/// ‖A M_c - M_c A‖_F / (‖A‖_F ‖M_c‖_F) with A the compressed (N+1)-block of
/// That and M_c the compressed Gram matrix. 0 when either factor is 0.
double commutator_residual(const BandedOperator& That, const GramMatrix& M);
double commutator_residual(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Mc);

/// Max over j and i < j of |f_j^(i)(Ω)| / max |f_j| on [max(a, Ω - 1), Ω].
double check_cond1(const PolyFamily& fam, int N, double omega);

/// Max |Ť(i, j)| over j = N+1..N+k, i = j-k..N, relative to the max entry of
/// the (N+1+k)-block, k = bandwidth of That.
double check_cond2(const BandedOperator& That, int N);

struct GenericSolution {
  std::vector<double> coefficients;  // unit norm; empty when no candidate exists
  double residual = 0.0;             // relative commutator norm of Σ c_i A_i
  double min_eigenvalue = 0.0;       // of the normal-equations matrix
  int nullity = 0;                   // eigenvalues <= 1e-10 relative
  bool nontrivial = false;           // false when the span holds only multiples of the identity
};

/// Unit-norm direction in the span of `basis`, with the identity projected
/// out, minimizing the commutator with the compressed Gram matrix.
/// Throws std::invalid_argument for an empty basis.
GenericSolution solve_commuting_generic(const std::vector<BandedOperator>& basis, const GramMatrix& M);

/// Numerical rank (singular values > 1e-9 of the largest) of the matrix whose
/// rows are the vectorized, unit-normalized size x size blocks.
int independence_rank(const std::vector<BandedOperator>& ops, int block);

/// The symmetric Fourier-algebra set Y: 14 operators for XHermite, 8 for
/// XLaguerre, on the banded side.
std::vector<NamedOperator> fourier_basis(const PolyFamily& fam);

/// Max over samples of |T(x) k(x,y) - T(y) k(x,y)| / (1 + |k(x,y)|).
double kernel_symmetry_residual(const PolyFamily& fam, int N, double omega,
                                const std::vector<std::pair<double, double>>& samples);

}  // namespace xbl

#endif  // XBL_COMMUTING_HPP
