// The time-and-band limited Gram matrix, its reproducing kernel and the
// integral operator S.
#ifndef XBL_GRAM_HPP
#define XBL_GRAM_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "xbl/special_polys.hpp"

namespace xbl {

/// M_{mn} = ∫_a^Ω q_m q_n w dx for 0 <= m, n <= N.
struct GramMatrix {
  PolyFamily family;
  int N;
  double omega;  // +infinity for the full interval
  double tol;
  Eigen::MatrixXd entries;
};

/// Throws std::invalid_argument unless N >= max(X), N is not exceptional,
/// N <= kMaxDegree, and omega lies in the open interval (or is +infinity).
void validate_time_band(const PolyFamily& fam, int N, double omega);

/// The omega part of validate_time_band, with only 0 <= N <= kMaxDegree.
void validate_band(const PolyFamily& fam, int N, double omega);

/// Each entry within tol absolute; rows and columns at exceptional degrees are
/// exact zeros. Throws ConvergenceError from the quadrature.
GramMatrix gram_matrix(const PolyFamily& fam, int N, double omega, double tol);

/// k(x, y) = Σ_{n in Z, n <= N} q_n(x) q_n(y).
double kernel_eval(const PolyFamily& fam, int N, double x, double y);

/// (S f)(x) = ∫_a^Ω f(y) w(y) k(x, y) dy within tol. The cutoff on an infinite
/// lower end assumes |f| grows at most like a polynomial of degree f_degree.
double apply_S(const PolyFamily& fam, int N, double omega, const std::function<double(double)>& f, double x,
               double tol, int f_degree = 20);

struct Compressed {
  Eigen::MatrixXd matrix;
  std::vector<int> indices;  // surviving original indices, increasing
};

/// Drops rows and columns at exceptional degrees.
Compressed compress(const GramMatrix& m);

}  // namespace xbl

#endif  // XBL_GRAM_HPP
