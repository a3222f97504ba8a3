#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "xbl/commuting.hpp"

using namespace xbl;
using doctest::Approx;

namespace {

const PolyFamily kH = PolyFamily::xhermite();
const PolyFamily kL = PolyFamily::xlaguerre(1.3);

std::vector<double> grid(const PolyFamily& fam, int count) {
  std::vector<double> g;
  for (int i = 0; i < count; ++i) {
    const double t = (i + 0.5) / count;
    g.push_back(fam.kind() == FamilyKind::XHermite ? -3.0 + 6.0 * t : 0.05 + 6.0 * t);
  }
  return g;
}

std::vector<BandedOperator> ops(const std::vector<NamedOperator>& named) {
  std::vector<BandedOperator> out;
  for (const auto& n : named) out.push_back(n.op);
  return out;
}

}  // namespace

TEST_CASE("intertwining of builtin pairs") {
  for (const auto& fam : {kH, kL, PolyFamily::xlaguerre(0.5), PolyFamily::xlaguerre(2.7)}) {
    for (int j = 0; j < builtin_count(fam); ++j) CHECK(verify_pair(fam, j, 20, grid(fam, 50)) < 1e-8);
  }
}

TEST_CASE("D_0 eigenvalues") {
  for (int n : {0, 3, 7, 20}) {
    for (double x : {-1.5, 0.2, 2.0}) {
      const double q = q_eval(kH, n, x);
      CHECK(std::abs(apply_D(kH, 0, q_jet(kH, n, x, 2)) + 2.0 * n * q) < 1e-9 * (1 + std::abs(q)));
    }
  }
  for (int n : {1, 4, 20}) {
    for (double x : {0.3, 1.7, 5.0}) {
      const double q = q_eval(kL, n, x);
      CHECK(std::abs(apply_D(kL, 0, q_jet(kL, n, x, 2)) - (3.0 - n) / 4 * q) < 1e-9 * (1 + std::abs(q)));
    }
  }
  // D_3 is multiplication by 4x^3/3 + 2x.
  const double x = 0.8;
  CHECK(apply_D(kH, 3, q_jet(kH, 4, x, 2)) == Approx((4 * x * x * x / 3 + 2 * x) * q_eval(kH, 4, x)));
  CHECK_THROWS_AS(apply_D(kH, 4, q_jet(kH, 4, x, 2)), std::invalid_argument);
}

TEST_CASE("Perline operator structure") {
  const BandedOperator T = perline_That(kH, 12, 0.3);
  CHECK(T.bandwidth() == 3);
  CHECK(T.symmetric());
  CHECK(effective_bandwidth(T, 30) == 3);
  const Eigen::MatrixXd B = finite_block(T, 30);
  CHECK((B - B.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * B.cwiseAbs().maxCoeff());
  CHECK(perline_terms(kH, 12, 0.3).size() == 13);

  const BandedOperator S = perline_That(kL, 10, 0.7);
  CHECK(S.bandwidth() == 2);
  const Eigen::MatrixXd C = finite_block(S, 25);
  CHECK((C - C.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * C.cwiseAbs().maxCoeff());
  CHECK(perline_terms(kL, 10, 0.7).size() == 7);

  CHECK_THROWS_AS(perline_That(kH, 1, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(perline_That(kL, 5, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(perline_That(kH, 5, std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("boundary conditions") {
  CHECK(check_cond2(perline_That(kH, 12, 0.3), 12) < 1e-9);
  CHECK(check_cond2(perline_That(kL, 10, 3.0), 10) < 1e-9);
  for (const auto& fam : {kH, kL}) {
    for (double omega : {0.7, 3.0}) CHECK(check_cond1(fam, 10, omega) < 1e-10);
  }
  const double omega = 0.3;
  const Jet f3 = f_coeff_jet(kH, 12, omega, 3, omega);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(f3.derivative(i)) < 1e-14);
  CHECK(f3.derivative(3) == Approx(6.0));
  const Jet f2 = f_coeff_jet(kH, 12, omega, 2, omega);
  CHECK(std::abs(f2.value()) < 1e-14);
  CHECK(std::abs(f2.derivative(1)) < 1e-12);
  const Jet f1 = f_coeff_jet(kH, 12, omega, 1, omega);
  CHECK(std::abs(f1.value()) < 1e-12);
  CHECK(std::abs(f1.derivative(1)) > 1.0);
  const Jet g2 = f_coeff_jet(kL, 10, 0.7, 2, 0.7);
  CHECK(std::abs(g2.value()) < 1e-15);
  CHECK(std::abs(g2.derivative(1)) < 1e-14);
}

TEST_CASE("commutation with the Gram matrix") {
  const GramMatrix M = gram_matrix(kH, 12, 0.3, 1e-12);
  CHECK(commutator_residual(perline_That(kH, 12, 0.3), M) < 1e-8);
  const GramMatrix N = gram_matrix(kL, 10, 0.7, 1e-12);
  CHECK(commutator_residual(perline_That(kL, 10, 0.7), N) < 1e-8);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(5, 5);
  CHECK(commutator_residual(Eigen::MatrixXd::Random(5, 5), I) < 1e-15);
  CHECK_THROWS_AS(commutator_residual(I, Eigen::MatrixXd::Identity(4, 4)), std::invalid_argument);
  CHECK(commutator_residual(perline_That(kH, 12, 0.3, 1e-3), M) > 1e-8);
  const CommutingPair p = make_commuting_pair(M);
  CHECK(p.cond2_residual < 1e-9);
  CHECK(p.commutator_residual < 1e-8);
}

TEST_CASE("the two representations agree") {
  CHECK(cross_representation_residual(kH, 12, 0.3, 15, grid(kH, 20)) < 1e-7);
  CHECK(cross_representation_residual(kL, 10, 0.7, 15, grid(kL, 20)) < 1e-7);
  const JetFunction q1 = [](double x, int order) { return q_jet(kH, 1, x, order); };
  CHECK(apply_T(kH, 12, 0.3, q1, 0.4) == 0.0);
  // T q_0 expands over q_0 and q_3 only.
  const BandedOperator T = perline_That(kH, 12, 0.3);
  const JetFunction q0 = [](double x, int order) { return q_jet(kH, 0, x, order); };
  for (double x : {-1.0, 0.5}) {
    const double expected = T(0, 0) * q_eval(kH, 0, x) + T(0, 3) * q_eval(kH, 3, x);
    CHECK(apply_T(kH, 12, 0.3, q0, x) == Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("kernel symmetry") {
  const std::vector<std::pair<double, double>> s{{0.3, 0.3}, {-1.2, 0.8}, {0.1, 2.0}, {1.5, -0.4}};
  CHECK(kernel_symmetry_residual(kH, 12, 0.3, s) < 1e-6);
  CHECK(kernel_symmetry_residual(kH, 12, 0.3, {{0.7, 0.7}}) == 0.0);
  CHECK(kernel_symmetry_residual(kL, 10, 0.7, {{0.3, 2.0}, {1.1, 0.2}}) < 1e-6);
}

TEST_CASE("kernel symmetry for N = 0 reduces to the corner entry") {
  // k(x, y) = 2/√π, so T(x) k = Ť_00 (2/√π) when Ť_03 = 0.
  const JetFunction q0 = [](double x, int order) { return q_jet(kH, 0, x, order); };
  const double x = 0.9;
  const double y = -0.4;
  const double lhs = apply_T(kH, 0, 0.3, q0, x) * q_eval(kH, 0, y);
  const double rhs = q_eval(kH, 0, x) * apply_T(kH, 0, 0.3, q0, y);
  CHECK(lhs == Approx(rhs).epsilon(1e-10));
  CHECK(kernel_symmetry_residual(kH, 0, 0.3, {{x, y}}) < 1e-8);
}

TEST_CASE("independence of the symmetric Fourier-algebra sets") {
  const auto YH = ops(fourier_basis(kH));
  const auto YL = ops(fourier_basis(kL));
  CHECK(YH.size() == 14);
  CHECK(YL.size() == 8);
  CHECK(independence_rank(YH, 40) == 14);
  CHECK(independence_rank(YL, 30) == 8);
  auto dup = YL;
  dup.push_back(YL[3]);
  CHECK(independence_rank(dup, 30) == 8);
  for (const auto& op : YH) CHECK(op.symmetric());
}

TEST_CASE("generic solver") {
  const GramMatrix M = gram_matrix(kH, 12, 0.3, 1e-12);
  const GenericSolution single = solve_commuting_generic({perline_That(kH, 12, 0.3)}, M);
  REQUIRE(single.coefficients.size() == 1);
  CHECK(single.coefficients[0] == Approx(1.0));
  CHECK(single.residual < 1e-8);

  const auto YH = ops(fourier_basis(kH));
  const GenericSolution g = solve_commuting_generic(YH, M);
  CHECK(g.nontrivial);
  CHECK(g.residual < 1e-8);
  REQUIRE(g.coefficients.size() == 14);
  double off_identity = 0.0;
  for (std::size_t i = 1; i < g.coefficients.size(); ++i) off_identity += std::abs(g.coefficients[i]);
  CHECK(off_identity > 0.1);
  CHECK(g.nullity >= 1);

  const GenericSolution id = solve_commuting_generic({BandedOperator::identity()}, M);
  CHECK_FALSE(id.nontrivial);
  CHECK(id.coefficients.empty());
  CHECK_THROWS_AS(solve_commuting_generic({}, M), std::invalid_argument);

  const GramMatrix L = gram_matrix(kL, 10, 0.7, 1e-12);
  const GenericSolution gl = solve_commuting_generic(ops(fourier_basis(kL)), L);
  CHECK(gl.nontrivial);
  CHECK(gl.residual < 1e-8);
}
