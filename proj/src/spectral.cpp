#include "xbl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "xbl/banded.hpp"
#include "xbl/commuting.hpp"
#include "xbl/gram.hpp"

namespace xbl {

Eigh eigh(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("eigh: matrix is not square");
  const Eigen::Index n = A.rows();
  const double fro = A.norm();
  if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(fro, 1e-300) && fro > 0.0) {
    throw std::invalid_argument("eigh: matrix is not symmetric");
  }
  Eigen::MatrixXd a = 0.5 * (A + A.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double stop = 1e-13 * fro;

  auto max_off = [&] {
    double m = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < j; ++i) m = std::max(m, std::abs(a(i, j)));
    return m;
  };

  int sweeps = 0;
  while (max_off() > stop) {
    if (++sweeps > 50) throw SweepLimitError("eigh: no convergence within 50 sweeps");
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index l, Eigen::Index r) { return a(l, l) < a(r, r); });
  Eigh out{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.values(i) = a(src, src);
    out.vectors.col(i) = v.col(src);
  }
  return out;
}

GapCounts gap_profile(const std::vector<double>& eigs, double eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("gap_profile: eps must lie in (0, 1/2)");
  GapCounts g;
  for (double e : eigs) {
    if (e >= 1.0 - eps) {
      ++g.near_one;
    } else if (e <= eps) {
      ++g.near_zero;
    } else {
      ++g.plunge;
    }
  }
  return g;
}

namespace {

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

double spectral_norm(const Eigen::VectorXd& eigenvalues) {
  return eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
}

}  // namespace

SpectralReport diagonalize_via_commuting(const PolyFamily& fam, int N, double omega, double tol, double eps) {
  const GramMatrix M = gram_matrix(fam, N, omega, tol);
  const Eigen::MatrixXd Mc = compress(M).matrix;
  const Eigen::MatrixXd Tc = compress_banded(perline_That(fam, N, omega), fam, N + 1);
  const Eigen::Index n = Mc.rows();

  SpectralReport r{fam, N, omega, {}, {}, {}, 0.0, 0.0, 0.0, 0.0, false, false, {}};
  const Eigh et = eigh(Tc);
  const Eigh em = eigh(Mc);
  r.eig_That = to_vector(et.values);
  r.eig_M_direct = to_vector(em.values);

  const Eigen::MatrixXd& V = et.vectors;
  r.orthogonality = (V.transpose() * V - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  const Eigen::MatrixXd B = V.transpose() * Mc * V;
  const double mnorm = spectral_norm(em.values);
  double off = 0.0;
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != j) off = std::max(off, std::abs(B(i, j)));
  r.alignment_residual = mnorm > 0.0 ? off / mnorm : 0.0;
  r.aligned = r.alignment_residual < 1e-6;

  r.min_gap_That = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 1; i < n; ++i) r.min_gap_That = std::min(r.min_gap_That, et.values(i) - et.values(i - 1));
  if (n < 2) r.min_gap_That = 0.0;
  r.degenerate_That = n >= 2 && r.min_gap_That < 1e-8 * spectral_norm(et.values);

  r.eig_M = to_vector(B.diagonal());
  std::sort(r.eig_M.begin(), r.eig_M.end());
  for (std::size_t i = 0; i < r.eig_M.size(); ++i) {
    r.spectrum_mismatch = std::max(r.spectrum_mismatch, std::abs(r.eig_M[i] - r.eig_M_direct[i]));
  }
  r.gaps = gap_profile(r.eig_M_direct, eps);
  return r;
}

}  // namespace xbl
