#include "xbl/banded.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xbl {

BandedOperator::BandedOperator(int bandwidth, Generator generator, bool symmetric)
    : bandwidth_(bandwidth), gen_(std::make_shared<const Generator>(std::move(generator))), symmetric_(symmetric) {
  if (bandwidth < 0) throw std::invalid_argument("BandedOperator: negative bandwidth");
}

BandedOperator BandedOperator::identity() {
  return BandedOperator(0, [](long, int) { return 1.0; }, true);
}

BandedOperator BandedOperator::diagonal(std::function<double(long n)> d) {
  return BandedOperator(0, [d = std::move(d)](long n, int) { return d(n); }, true);
}

double BandedOperator::entry(long n, int j) const {
  if (n < 0 || n + j < 0 || j > bandwidth_ || j < -bandwidth_) return 0.0;
  return (*gen_)(n, j);
}

double BandedOperator::operator()(long row, long col) const {
  const long j = col - row;
  if (j > bandwidth_ || j < -bandwidth_) return 0.0;
  return entry(row, static_cast<int>(j));
}

BandedOperator operator*(const BandedOperator& a, const BandedOperator& b) {
  const int ka = a.bandwidth();
  const int kb = b.bandwidth();
  return BandedOperator(
      ka + kb,
      [a, b, ka, kb](long n, int j) {
        double s = 0.0;
        for (int i = std::max(-ka, j - kb); i <= std::min(ka, j + kb); ++i) {
          const double left = a.entry(n, i);
          if (left != 0.0) s += left * b.entry(n + i, j - i);
        }
        return s;
      },
      false);
}

BandedOperator operator+(const BandedOperator& a, const BandedOperator& b) {
  return BandedOperator(
      std::max(a.bandwidth(), b.bandwidth()), [a, b](long n, int j) { return a.entry(n, j) + b.entry(n, j); },
      a.symmetric() && b.symmetric());
}

BandedOperator operator-(const BandedOperator& a, const BandedOperator& b) { return a + (-1.0) * b; }

BandedOperator operator*(double s, const BandedOperator& a) {
  return BandedOperator(
      a.bandwidth(), [s, a](long n, int j) { return s * a.entry(n, j); }, a.symmetric());
}

BandedOperator anticommutator(const BandedOperator& a, const BandedOperator& b) {
  const BandedOperator ab = a * b;
  const BandedOperator ba = b * a;
  return BandedOperator(
      ab.bandwidth(), [ab, ba](long n, int j) { return ab.entry(n, j) + ba.entry(n, j); },
      a.symmetric() && b.symmetric());
}

BandedOperator power(const BandedOperator& a, int p) {
  if (p < 0) throw std::invalid_argument("power: negative exponent");
  if (p == 0) return BandedOperator::identity();
  BandedOperator r = a;
  for (int i = 1; i < p; ++i) r = r * a;
  // Powers of a symmetric matrix are symmetric.
  return BandedOperator(
      r.bandwidth(), [r](long n, int j) { return r.entry(n, j); }, a.symmetric());
}

Eigen::MatrixXd finite_block(const BandedOperator& a, int size) {
  if (size < 1) throw std::invalid_argument("finite_block: size must be >= 1");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  const int k = a.bandwidth();
  for (int i = 0; i < size; ++i) {
    for (int j = std::max(0, i - k); j <= std::min(size - 1, i + k); ++j) m(i, j) = a(i, j);
  }
  return m;
}

std::vector<double> apply_to_coeffs(const BandedOperator& a, std::span<const double> c) {
  if (c.empty()) throw std::invalid_argument("apply_to_coeffs: empty sequence");
  const long size = static_cast<long>(c.size());
  std::vector<double> out(c.size(), 0.0);
  const int k = a.bandwidth();
  for (long n = 0; n < size; ++n) {
    double s = 0.0;
    for (int j = -k; j <= k; ++j) {
      const long m = n + j;
      if (m < 0 || m >= size) continue;
      s += a.entry(n, j) * c[static_cast<std::size_t>(m)];
    }
    out[static_cast<std::size_t>(n)] = s;
  }
  return out;
}

Eigen::MatrixXd compress_banded(const BandedOperator& a, std::span<const int> removed, int size) {
  std::vector<int> keep;
  for (int i = 0; i < size; ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) keep.push_back(i);
  }
  const Eigen::MatrixXd full = finite_block(a, size);
  const auto n = static_cast<Eigen::Index>(keep.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) out(r, c) = full(keep[static_cast<std::size_t>(r)], keep[static_cast<std::size_t>(c)]);
  }
  return out;
}

Eigen::MatrixXd compress_banded(const BandedOperator& a, const PolyFamily& fam, int size) {
  return compress_banded(a, fam.exceptional(), size);
}

namespace {

// c * sqrt(radicand), or 0 when the radicand is negative or the entry touches
// an exceptional degree.
double radical(const PolyFamily& fam, long n, int j, double c, double radicand) {
  if (fam.is_exceptional(static_cast<int>(n)) || fam.is_exceptional(static_cast<int>(n + j))) return 0.0;
  if (radicand < 0.0) return 0.0;
  return c * std::sqrt(radicand);
}

BandedOperator hermite_L(const PolyFamily& fam, int j) {
  constexpr double r2 = std::numbers::sqrt2;
  switch (j) {
    case 0:
      return BandedOperator::diagonal([](long n) { return -2.0 * static_cast<double>(n); });
    case 1:
      // Sign chosen so that D_1 q_n = (L_1 q)_n for D_1 = x d^2 - (4x^4 + 8x^2 - 1)/(2x^2 + 1) d.
      return BandedOperator(
          1,
          [fam](long nl, int o) {
            const double n = static_cast<double>(nl);
            if (o == -1) return radical(fam, nl, o, -r2, (n - 1) * (n - 3) * n);
            if (o == 1) return radical(fam, nl, o, -r2, (n + 1) * (n - 2) * n);
            return 0.0;
          },
          true);
    case 2:
      return BandedOperator(
          2,
          [fam](long nl, int o) {
            const double n = static_cast<double>(nl);
            switch (o) {
              case -2: return radical(fam, nl, o, 1.0 / 56.0, (n - 2) * (n - 3) * (n - 4) * n);
              case 0: return (n - 4) * (n - 7) / 28.0;
              case 2: return radical(fam, nl, o, 1.0 / 56.0, (n + 2) * (n - 1) * (n - 2) * n);
              default: return 0.0;
            }
          },
          true);
    case 3:
      return BandedOperator(
          3,
          [fam](long nl, int o) {
            const double n = static_cast<double>(nl);
            switch (o) {
              case -3: return radical(fam, nl, o, r2 / 3.0, n * (n - 4) * (n - 5));
              case -1: return radical(fam, nl, o, 1.0, 2.0 * n * (n - 1) * (n - 3));
              case 1: return radical(fam, nl, o, 1.0, 2.0 * (n + 1) * n * (n - 2));
              case 3: return radical(fam, nl, o, r2 / 3.0, (n + 3) * (n - 1) * (n - 2));
              default: return 0.0;
            }
          },
          true);
    default:
      throw std::invalid_argument("builtin_L: XHermite has operators L_0..L_3");
  }
}

BandedOperator laguerre_L(const PolyFamily& fam, int j) {
  const double a = fam.alpha();
  switch (j) {
    case 0:
      return BandedOperator::diagonal([](long n) { return (3.0 - static_cast<double>(n)) / 4.0; });
    case 1:
      return BandedOperator(
          1,
          [fam, a](long nl, int o) {
            const double n = static_cast<double>(nl);
            switch (o) {
              case -1: return radical(fam, nl, o, -1.0 / 42.0, (a + n) * (a + n - 1) * (a + n - 2) * (n - 1));
              case 0: return (n - 1) * (n - 5) / 21.0;
              case 1: return radical(fam, nl, o, -1.0 / 42.0, (a + n + 1) * (a + n) * (a + n - 1) * n);
              default: return 0.0;
            }
          },
          true);
    case 2:
      return BandedOperator(
          2,
          [fam, a](long nl, int o) {
            const double n = static_cast<double>(nl);
            switch (o) {
              case -2: return radical(fam, nl, o, 1.0, (a + n) * (a + n - 3) * (n - 1) * (n - 2));
              case -1: return radical(fam, nl, o, -4.0, (a + n) * (a + n - 1) * (a + n - 2) * (n - 1));
              case 0: return 4 * a * a + 10 * a * n + 6 * n * n - 5 * a - 6 * n;
              case 1: return radical(fam, nl, o, -4.0, (a + n + 1) * (a + n) * (a + n - 1) * n);
              case 2: return radical(fam, nl, o, 1.0, (a + n + 2) * (a + n - 1) * (n + 1) * n);
              default: return 0.0;
            }
          },
          true);
    default:
      throw std::invalid_argument("builtin_L: XLaguerre has operators L_0..L_2");
  }
}

}  // namespace

BandedOperator builtin_L(const PolyFamily& fam, int j) {
  return fam.kind() == FamilyKind::XHermite ? hermite_L(fam, j) : laguerre_L(fam, j);
}

int builtin_count(const PolyFamily& fam) { return fam.kind() == FamilyKind::XHermite ? 4 : 3; }

int effective_bandwidth(const BandedOperator& a, int size, double rel_tol) {
  const Eigen::MatrixXd m = finite_block(a, size);
  const double scale = m.cwiseAbs().maxCoeff();
  int band = 0;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (std::abs(m(i, j)) > rel_tol * scale) band = std::max(band, std::abs(i - j));
    }
  }
  return band;
}

}  // namespace xbl
