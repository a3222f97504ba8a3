#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "xbl/banded.hpp"

using namespace xbl;
using doctest::Approx;

namespace {

const PolyFamily kH = PolyFamily::xhermite();
const PolyFamily kL = PolyFamily::xlaguerre(1.3);

std::vector<BandedOperator> builtins(const PolyFamily& fam) {
  std::vector<BandedOperator> out;
  for (int j = 0; j < builtin_count(fam); ++j) out.push_back(builtin_L(fam, j));
  return out;
}

}  // namespace

TEST_CASE("builtin entries") {
  const Eigen::MatrixXd L0 = finite_block(builtin_L(kH, 0), 4);
  CHECK(L0.isApprox(Eigen::Vector4d(0, -2, -4, -6).asDiagonal().toDenseMatrix()));
  const BandedOperator L2 = builtin_L(kH, 2);
  CHECK(L2.bandwidth() == 2);
  for (long n : {0L, 3L, 9L}) CHECK(L2.entry(n, 0) == Approx((n - 4.0) * (n - 7.0) / 28));
  const BandedOperator M2 = builtin_L(kL, 2);
  const double a = 1.3;
  for (long n : {1L, 4L}) CHECK(M2.entry(n, 0) == Approx(4 * a * a + 10 * a * n + 6.0 * n * n - 5 * a - 6.0 * n));
  CHECK(builtin_L(kL, 0).entry(5, 0) == Approx(-0.5));
  CHECK_THROWS_AS(builtin_L(kH, 4), std::invalid_argument);
  CHECK_THROWS_AS(builtin_L(kL, 3), std::invalid_argument);
  CHECK(builtin_count(kH) == 4);
  CHECK(builtin_count(kL) == 3);
}

TEST_CASE("entries touching exceptional degrees vanish") {
  for (int j = 1; j < 4; ++j) {
    const Eigen::MatrixXd B = finite_block(builtin_L(kH, j), 10);
    for (int i = 0; i < 10; ++i) {
      for (int x : {1, 2}) {
        if (i != x) {
          CHECK(B(x, i) == 0.0);
          CHECK(B(i, x) == 0.0);
        }
      }
    }
  }
  const Eigen::MatrixXd B = finite_block(builtin_L(kL, 1), 6);
  for (int i = 1; i < 6; ++i) CHECK(B(0, i) == 0.0);
}

TEST_CASE("builtins are symmetric") {
  for (const auto& fam : {kH, kL, PolyFamily::xlaguerre(0.5)}) {
    for (const auto& op : builtins(fam)) {
      CHECK(op.symmetric());
      const Eigen::MatrixXd B = finite_block(op, 40);
      CHECK((B - B.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * B.cwiseAbs().maxCoeff());
    }
  }
}

TEST_CASE("products against dense multiplication") {
  for (const auto& fam : {kH, kL}) {
    const auto L = builtins(fam);
    for (const auto& A : L) {
      for (const auto& B : L) {
        const int s = 10;
        const int big = s + A.bandwidth() + B.bandwidth();
        const Eigen::MatrixXd dense = (finite_block(A, big) * finite_block(B, big)).topLeftCorner(s, s);
        const Eigen::MatrixXd prod = finite_block(A * B, s);
        CHECK((dense - prod).cwiseAbs().maxCoeff() <= 1e-12 * (1 + dense.cwiseAbs().maxCoeff()));
        CHECK((A * B).bandwidth() == A.bandwidth() + B.bandwidth());
        // Nothing beyond the sum of the bandwidths.
        const Eigen::MatrixXd full = finite_block(A, 30) * finite_block(B, 30);
        for (int i = 0; i < 30; ++i)
          for (int k = 0; k < 30; ++k)
            if (std::abs(i - k) > A.bandwidth() + B.bandwidth()) CHECK(full(i, k) == 0.0);
      }
    }
  }
}

TEST_CASE("algebra") {
  const BandedOperator D = builtin_L(kH, 0);
  const Eigen::MatrixXd sq = finite_block(D * D, 6);
  for (int n = 0; n < 6; ++n) CHECK(sq(n, n) == Approx(4.0 * n * n));
  const BandedOperator A = builtin_L(kH, 3);
  CHECK(finite_block(anticommutator(A, A), 12).isApprox(2 * finite_block(power(A, 2), 12)));
  CHECK(anticommutator(A, D).symmetric());
  CHECK_FALSE((A * D).symmetric());
  const BandedOperator B = builtin_L(kH, 1);
  CHECK(finite_block(A + B, 8).isApprox(finite_block(A, 8) + finite_block(B, 8)));
  CHECK(finite_block(A - B, 8).isApprox(finite_block(A, 8) - finite_block(B, 8)));
  CHECK(finite_block(2.5 * A, 8).isApprox(2.5 * finite_block(A, 8)));
  CHECK(finite_block(BandedOperator::identity(), 3).isIdentity(0.0));
  CHECK(finite_block(power(A, 0), 5).isIdentity(0.0));
  CHECK_THROWS_AS(power(A, -1), std::invalid_argument);
  CHECK_THROWS_AS(finite_block(A, 0), std::invalid_argument);
  const Eigen::MatrixXd S = finite_block(anticommutator(A, power(D, 3)), 20);
  CHECK((S - S.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * S.cwiseAbs().maxCoeff());
}

TEST_CASE("apply to coefficient sequences") {
  const std::vector<double> c{1.0, -2.0, 0.5};
  CHECK(apply_to_coeffs(BandedOperator::identity(), c) == c);
  std::vector<double> e3(6, 0.0);
  e3[3] = 1.0;
  const auto r = apply_to_coeffs(builtin_L(kH, 0), e3);
  CHECK(r[3] == -6.0);
  std::vector<double> e5(8, 0.0);
  e5[5] = 1.0;
  const auto s = apply_to_coeffs(builtin_L(kH, 1), e5);
  // (L e_5)_n = L(n, 5): rows 4 and 6.
  CHECK(s[4] == Approx(-std::numbers::sqrt2 * std::sqrt(5.0 * 2 * 4)));
  CHECK(s[6] == Approx(-std::numbers::sqrt2 * std::sqrt(5.0 * 3 * 6)));
  int nonzero = 0;
  for (double v : s) nonzero += v != 0.0;
  CHECK(nonzero == 2);
  CHECK_THROWS_AS(apply_to_coeffs(builtin_L(kH, 0), std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("compression of banded blocks") {
  const std::vector<int> X{1, 2};
  const Eigen::MatrixXd c = compress_banded(builtin_L(kH, 0), X, 5);
  CHECK(c.rows() == 3);
  CHECK(c(0, 0) == 0.0);
  CHECK(c(1, 1) == -6.0);
  CHECK(c(2, 2) == -8.0);
  CHECK(compress_banded(BandedOperator::identity(), kL, 4).isIdentity(0.0));
  CHECK(compress_banded(builtin_L(kH, 2), std::vector<int>{}, 6).isApprox(finite_block(builtin_L(kH, 2), 6)));
}

TEST_CASE("effective bandwidth") {
  CHECK(effective_bandwidth(builtin_L(kH, 3), 20) == 3);
  CHECK(effective_bandwidth(builtin_L(kH, 0), 20) == 0);
  const BandedOperator A = builtin_L(kH, 1);
  CHECK(effective_bandwidth(A - A, 10) == 0);
}
