#include "xbl/commuting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "perline_coefficients.hpp"
#include "xbl/spectral.hpp"

namespace xbl {

namespace {

void validate_commuting(const PolyFamily& fam, int N, double omega) {
  validate_time_band(fam, N, omega);
  if (!std::isfinite(omega)) throw std::invalid_argument("omega must be finite for the commuting operator");
}

int half_order(const PolyFamily& fam) { return fam.commuting_half_order(); }

std::vector<BandedOperator> generators(const PolyFamily& fam) {
  std::vector<BandedOperator> L;
  for (int j = 0; j < builtin_count(fam); ++j) L.push_back(builtin_L(fam, j));
  return L;
}

Eigen::Map<const Eigen::VectorXd> vec(const Eigen::MatrixXd& m) { return {m.data(), m.size()}; }

}  // namespace

std::vector<PerlineTerm> perline_terms(const PolyFamily& fam, int N, double omega) {
  validate_commuting(fam, N, omega);
  const auto L = generators(fam);
  const auto& D0 = L[0];
  const auto& D1 = L[1];
  const auto& D2 = L[2];
  if (fam.kind() == FamilyKind::XHermite) {
    const auto& D3 = L[3];
    const auto c = detail::hermite_perline_coefficients(N, omega);
    const BandedOperator D0sq = power(D0, 2);
    const BandedOperator D0cu = power(D0, 3);
    return {
        {"D0^3", c[0], D0cu},
        {"{D1,D0^2}", c[1], anticommutator(D1, D0sq)},
        {"{D1^2,D0}", c[2], anticommutator(power(D1, 2), D0)},
        {"{D3,D0^3}", c[3], anticommutator(D3, D0cu)},
        {"{D1,D0}", c[4], anticommutator(D1, D0)},
        {"D0^2", c[5], D0sq},
        {"D0", c[6], D0},
        {"D1^2", c[7], power(D1, 2)},
        {"{D3,D0^2}", c[8], anticommutator(D3, D0sq)},
        {"{D0,D3}", c[9], anticommutator(D0, D3)},
        {"D1", c[10], D1},
        {"D2", c[11], D2},
        {"D3", c[12], D3},
    };
  }
  const auto c = detail::laguerre_perline_coefficients(N, omega, fam.alpha());
  return {
      {"D1^2", c[0], power(D1, 2)},
      {"{D0,D1}", c[1], anticommutator(D0, D1)},
      {"D0^2", c[2], power(D0, 2)},
      {"{D0,D2}", c[3], anticommutator(D0, D2)},
      {"D1", c[4], D1},
      {"D0", c[5], D0},
      {"D2", c[6], D2},
  };
}

BandedOperator perline_That(const PolyFamily& fam, int N, double omega, double perturbation) {
  const auto terms = perline_terms(fam, N, omega);
  BandedOperator sum = (terms[0].coefficient * (1.0 + perturbation)) * terms[0].op;
  for (std::size_t i = 1; i < terms.size(); ++i) sum = sum + terms[i].coefficient * terms[i].op;
  return sum;
}

CommutingPair make_commuting_pair(const GramMatrix& M, double perturbation) {
  BandedOperator T = perline_That(M.family, M.N, M.omega, perturbation);
  const double c1 = check_cond1(M.family, M.N, M.omega);
  const double c2 = check_cond2(T, M.N);
  const double cr = commutator_residual(T, M);
  return {M.family, M.N, M.omega, std::move(T), c1, c2, cr};
}

Jet f_coeff_jet(const PolyFamily& fam, int N, double omega, int j, double x) {
  if (j < 0 || j > half_order(fam)) throw std::invalid_argument("f_coeff_jet: j out of range");
  if (!fam.in_interior(x)) throw std::domain_error("f_coeff_jet: x outside the interval");
  if (fam.kind() == FamilyKind::XHermite) return detail::hermite_f(j, N, omega, x);
  return detail::laguerre_f(j, N, omega, fam.alpha(), x);
}

double apply_T(const PolyFamily& fam, int N, double omega, const JetFunction& g, double x) {
  const int d = half_order(fam);
  const int order = 2 * d;
  const Jet s = weight_sqrt_jet(fam, x, order);
  const Jet h = (s * g(x, order)).truncated(order);
  double total = 0.0;
  for (int j = 0; j <= d; ++j) {
    Jet dh = h;
    for (int i = 0; i < j; ++i) dh = dh.differentiate();
    Jet p = f_coeff_jet(fam, N, omega, j, x) * dh;
    for (int i = 0; i < j; ++i) p = p.differentiate();
    total += p.value();
  }
  return total / s.value();
}

double apply_D(const PolyFamily& fam, int j, const Jet& g) {
  const double x = g.center();
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;
  if (fam.kind() == FamilyKind::XHermite) {
    const double d = 2 * x * x + 1;
    switch (j) {
      case 0:
        a2 = 1.0;
        a1 = -2 * (2 * x * x * x + 5 * x) / d;
        break;
      case 1:
        a2 = x;
        a1 = -(4 * x * x * x * x + 8 * x * x - 1) / d;
        break;
      case 2:
        a2 = -x * x / 56 + 17.0 / 112;
        a1 = (4 * std::pow(x, 5) - 28 * x * x * x - 87 * x) / (56 * d);
        a0 = 1.0;
        break;
      case 3:
        a0 = 4 * x * x * x / 3 + 2 * x;
        break;
      default:
        throw std::invalid_argument("apply_D: XHermite has D_0..D_3");
    }
  } else {
    const double a = fam.alpha();
    switch (j) {
      case 0:
        a2 = x / 4;
        a1 = (a + x + 1) * (a - x) / (4 * (a + x));
        a0 = (a + 3 * x) / (4 * (a + x));
        break;
      case 1:
        a2 = (3 * a - x + 10) * x / 42;
        a1 = (3 * a * a * a - a * a * x - 3 * a * x * x + x * x * x + 13 * a * a - 5 * a * x - 10 * x * x + 10 * a -
              10 * x) /
             (42 * (a + x));
        a0 = -(a * a * a - a * x * x + 5 * a * a - 3 * a * x + 10 * a - 10 * x) / (42 * (a + x));
        break;
      case 2:
        a0 = (x + a) * (x + a);
        break;
      default:
        throw std::invalid_argument("apply_D: XLaguerre has D_0..D_2");
    }
  }
  return a2 * g.derivative(2) + a1 * g.derivative(1) + a0 * g.value();
}

namespace {

// Σ_i A(n, n+i) q_{n+i}(x).
double banded_on_q(const PolyFamily& fam, const BandedOperator& A, int n, double x) {
  double s = 0.0;
  const int k = A.bandwidth();
  for (int i = -k; i <= k; ++i) {
    const int m = n + i;
    if (m < 0 || fam.is_exceptional(m)) continue;
    const double e = A.entry(n, i);
    if (e != 0.0) s += e * q_eval(fam, m, x);
  }
  return s;
}

}  // namespace

double verify_pair(const PolyFamily& fam, int j, int n_max, const std::vector<double>& grid) {
  const BandedOperator L = builtin_L(fam, j);
  double worst = 0.0;
  for (int n : fam.regular_indices(n_max)) {
    for (double x : grid) {
      const double lhs = apply_D(fam, j, q_jet(fam, n, x, 2));
      const double rhs = banded_on_q(fam, L, n, x);
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(q_eval(fam, n, x))));
    }
  }
  return worst;
}

double cross_representation_residual(const PolyFamily& fam, int N, double omega, int n_max,
                                     const std::vector<double>& grid) {
  const BandedOperator T = perline_That(fam, N, omega);
  double worst = 0.0;
  for (int n : fam.regular_indices(n_max)) {
    const JetFunction qn = [&fam, n](double x, int order) { return q_jet(fam, n, x, order); };
    for (double x : grid) {
      const double lhs = apply_T(fam, N, omega, qn, x);
      const double rhs = banded_on_q(fam, T, n, x);
      worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(q_eval(fam, n, x))));
    }
  }
  return worst;
}

double commutator_residual(const Eigen::MatrixXd& A, const Eigen::MatrixXd& Mc) {
  if (A.rows() != Mc.rows() || A.cols() != Mc.cols()) {
    throw std::invalid_argument("commutator_residual: size mismatch");
  }
  const double scale = A.norm() * Mc.norm();
  if (scale == 0.0) return 0.0;
  return (A * Mc - Mc * A).norm() / scale;
}

double commutator_residual(const BandedOperator& That, const GramMatrix& M) {
  return commutator_residual(compress_banded(That, M.family, M.N + 1), compress(M).matrix);
}

double check_cond1(const PolyFamily& fam, int N, double omega) {
  validate_commuting(fam, N, omega);
  const double lo = std::max(fam.lower(), omega - 1.0);
  constexpr int kSamples = 64;
  double worst = 0.0;
  for (int j = 1; j <= half_order(fam); ++j) {
    double scale = 0.0;
    for (int s = 1; s <= kSamples; ++s) {
      const double x = lo + (omega - lo) * s / kSamples;
      scale = std::max(scale, std::abs(f_coeff_jet(fam, N, omega, j, x).value()));
    }
    const Jet at = f_coeff_jet(fam, N, omega, j, omega);
    for (int i = 0; i < j; ++i) worst = std::max(worst, std::abs(at.derivative(i)) / scale);
  }
  return worst;
}

double check_cond2(const BandedOperator& That, int N) {
  const int k = That.bandwidth();
  const Eigen::MatrixXd B = finite_block(That, N + 1 + k);
  const double scale = B.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int j = N + 1; j <= N + k; ++j) {
    for (int i = std::max(0, j - k); i <= N; ++i) worst = std::max(worst, std::abs(B(i, j)));
  }
  return worst / scale;
}

GenericSolution solve_commuting_generic(const std::vector<BandedOperator>& basis, const GramMatrix& M) {
  if (basis.empty()) throw std::invalid_argument("solve_commuting_generic: empty basis");
  const Eigen::MatrixXd Mc = compress(M).matrix;
  const Eigen::Index n = Mc.rows();
  const auto p = static_cast<Eigen::Index>(basis.size());

  // Columns: vectorized blocks with the identity component removed.
  std::vector<Eigen::MatrixXd> blocks;
  Eigen::MatrixXd P(n * n, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    Eigen::MatrixXd A = compress_banded(basis[static_cast<std::size_t>(i)], M.family, M.N + 1);
    A.diagonal().array() -= A.trace() / static_cast<double>(n);
    P.col(i) = vec(A);
    blocks.push_back(std::move(A));
  }

  GenericSolution out;
  // An orthonormal basis of the span, so that ‖Σ y_k Q_k‖_F = ‖y‖.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(P, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > 1e-12 * sv(0)) ++r;
  if (sv.size() == 0 || sv(0) == 0.0 || r == 0) return out;

  const double mnorm = Mc.norm();
  Eigen::MatrixXd C(n * n, r);
  for (Eigen::Index k = 0; k < r; ++k) {
    const Eigen::MatrixXd Q = Eigen::Map<const Eigen::MatrixXd>(svd.matrixU().col(k).data(), n, n);
    const Eigen::MatrixXd comm = Q * Mc - Mc * Q;
    C.col(k) = vec(comm) / (mnorm == 0.0 ? 1.0 : mnorm);
  }
  const Eigen::MatrixXd G = C.transpose() * C;
  const Eigh e = eigh(0.5 * (G + G.transpose()));
  const Eigen::VectorXd y = e.vectors.col(0);
  out.min_eigenvalue = e.values(0);
  const double lmax = std::max(std::abs(e.values(r - 1)), 1e-300);
  for (Eigen::Index k = 0; k < r; ++k) out.nullity += e.values(k) <= 1e-10 * lmax ? 1 : 0;

  Eigen::VectorXd c = svd.matrixV().leftCols(r) * (y.array() / sv.head(r).array()).matrix();
  c /= c.norm();
  Eigen::Index big = 0;
  c.cwiseAbs().maxCoeff(&big);
  if (c(big) < 0) c = -c;
  out.coefficients.assign(c.data(), c.data() + c.size());

  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < p; ++i) S += c(i) * blocks[static_cast<std::size_t>(i)];
  out.residual = commutator_residual(S, Mc);
  out.nontrivial = S.norm() > 0.0;
  return out;
}

int independence_rank(const std::vector<BandedOperator>& ops, int block) {
  if (ops.empty()) return 0;
  Eigen::MatrixXd R(static_cast<Eigen::Index>(ops.size()), static_cast<Eigen::Index>(block) * block);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const Eigen::MatrixXd B = finite_block(ops[i], block);
    const double nrm = B.norm();
    R.row(static_cast<Eigen::Index>(i)) = vec(B).transpose() / (nrm == 0.0 ? 1.0 : nrm);
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(R).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > 1e-9 * sv(0) ? 1 : 0;
  return rank;
}

std::vector<NamedOperator> fourier_basis(const PolyFamily& fam) {
  const auto L = generators(fam);
  const auto& D0 = L[0];
  const auto& D1 = L[1];
  const auto& D2 = L[2];
  const BandedOperator Id = BandedOperator::identity();
  if (fam.kind() == FamilyKind::XHermite) {
    const auto& D3 = L[3];
    const BandedOperator D0sq = power(D0, 2);
    const BandedOperator D0cu = power(D0, 3);
    const BandedOperator D1sq = power(D1, 2);
    return {
        {"Id", Id},
        {"D0", D0},
        {"D1", D1},
        {"D2", D2},
        {"D3", D3},
        {"D0^2", D0sq},
        {"D0^3", D0cu},
        {"D1^2", D1sq},
        {"{D3,D0}", anticommutator(D3, D0)},
        {"{D3,D0^2}", anticommutator(D3, D0sq)},
        {"{D0,D1}", anticommutator(D0, D1)},
        {"{D3,D0^3}", anticommutator(D3, D0cu)},
        {"{D0^2,D1}", anticommutator(D0sq, D1)},
        {"{D0,D1^2}", anticommutator(D0, D1sq)},
    };
  }
  return {
      {"Id", Id},
      {"D0", D0},
      {"D1", D1},
      {"D2", D2},
      {"D0^2", power(D0, 2)},
      {"D1^2", power(D1, 2)},
      {"{D0,D1}", anticommutator(D0, D1)},
      {"{D2,D0}", anticommutator(D2, D0)},
  };
}

double kernel_symmetry_residual(const PolyFamily& fam, int N, double omega,
                                const std::vector<std::pair<double, double>>& samples) {
  validate_band(fam, N, omega);
  if (!std::isfinite(omega)) throw std::invalid_argument("omega must be finite for the commuting operator");
  const auto idx = fam.regular_indices(N);
  double worst = 0.0;
  for (const auto& [x, y] : samples) {
    double lhs = 0.0;
    double rhs = 0.0;
    double k = 0.0;
    for (int n : idx) {
      const JetFunction qn = [&fam, n](double t, int order) { return q_jet(fam, n, t, order); };
      const double qx = q_eval(fam, n, x);
      const double qy = q_eval(fam, n, y);
      lhs += apply_T(fam, N, omega, qn, x) * qy;
      rhs += qx * apply_T(fam, N, omega, qn, y);
      k += qx * qy;
    }
    worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(k)));
  }
  return worst;
}

}  // namespace xbl
