// Dense symmetric eigensolver and diagonalization of the Gram matrix through
// the eigenvectors of the commuting operator.
#ifndef XBL_SPECTRAL_HPP
#define XBL_SPECTRAL_HPP

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "xbl/special_polys.hpp"

namespace xbl {

struct Eigh {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // column i belongs to values(i)
};

class SweepLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cyclic Jacobi. Stops once the largest off-diagonal entry is below
/// 1e-13 ‖A‖_F. Throws std::invalid_argument for a non-square or non-symmetric
/// (beyond 1e-12 relative) input, SweepLimitError after 50 sweeps.
Eigh eigh(const Eigen::MatrixXd& A);

struct GapCounts {
  int near_one = 0;  // >= 1 - eps
  int plunge = 0;    // in (eps, 1 - eps)
  int near_zero = 0; // <= eps
};

/// Throws std::invalid_argument unless 0 < eps < 1/2.
GapCounts gap_profile(const std::vector<double>& eigs, double eps);

struct SpectralReport {
  PolyFamily family;
  int N;
  double omega;
  std::vector<double> eig_M;     // read off Vᵀ M_c V, sorted
  std::vector<double> eig_M_direct;
  std::vector<double> eig_That;
  double alignment_residual = 0.0;  // max |offdiag(Vᵀ M_c V)| / ‖M_c‖_2
  double orthogonality = 0.0;       // ‖VᵀV - I‖_max
  double spectrum_mismatch = 0.0;   // max |eig_M - eig_M_direct|
  double min_gap_That = 0.0;
  bool degenerate_That = false;     // min_gap_That < 1e-8 ‖Ť‖_2
  bool aligned = false;             // alignment_residual < 1e-6
  GapCounts gaps;
};

/// Builds M and Ť, compresses both, and compares the spectrum of M read off
/// the Ť eigenbasis with a direct eigendecomposition of M.
SpectralReport diagonalize_via_commuting(const PolyFamily& fam, int N, double omega, double tol = 1e-12,
                                         double eps = 0.01);

}  // namespace xbl

#endif  // XBL_SPECTRAL_HPP
