#include "perline_coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace xbl::detail {

namespace {

struct Monomial {
  double coef;
  int pn;
  int pw;
  int px;
};

// Numerator of f0; rows are {coefficient, power of N, power of Omega, power of x}.
constexpr Monomial kHermiteF0[] = {
    {-64, 0, 0, 21},
    {192, 0, 1, 20},
    {-576, 0, 0, 19},
    {-192, 0, 2, 19},
    {384, 1, 0, 19},
    {1536, 0, 1, 18},
    {64, 0, 3, 18},
    {-768, 1, 1, 18},
    {336, 0, 0, 17},
    {-1344, 0, 2, 17},
    {2688, 1, 0, 17},
    {384, 1, 2, 17},
    {-768, 2, 0, 17},
    {336, 0, 1, 16},
    {384, 0, 3, 16},
    {-4608, 1, 1, 16},
    {768, 2, 1, 16},
    {7616, 0, 0, 15},
    {-1296, 0, 2, 15},
    {4000, 1, 0, 15},
    {1920, 1, 2, 15},
    {-4224, 2, 0, 15},
    {512, 3, 0, 15},
    {-10896, 0, 1, 14},
    {624, 0, 3, 14},
    {-8640, 1, 1, 14},
    {3456, 2, 1, 14},
    {18996, 0, 0, 13},
    {3552, 0, 2, 13},
    {-1344, 1, 0, 13},
    {4128, 1, 2, 13},
    {-10176, 2, 0, 13},
    {2304, 3, 0, 13},
    {-29052, 0, 1, 12},
    {112, 0, 3, 12},
    {37824, 1, 1, 12},
    {50496, 2, 1, 12},
    {20940, 0, 0, 11},
    {12156, 0, 2, 11},
    {-10584, 1, 0, 11},
    {3840, 1, 2, 11},
    {-12192, 2, 0, 11},
    {4224, 3, 0, 11},
    {-31272, 0, 1, 10},
    {-1332, 0, 3, 10},
    {134928, 1, 1, 10},
    {137184, 2, 1, 10},
    {9851, 0, 0, 9},
    {9804, 0, 2, 9},
    {-9176, 1, 0, 9},
    {-1464, 1, 2, 9},
    {-7440, 2, 0, 9},
    {4160, 3, 0, 9},
    {-1917, 0, 1, 8},
    {1200, 0, 3, 8},
    {153312, 1, 1, 8},
    {165360, 2, 1, 8},
    {31338, 0, 0, 7},
    {-24975, 0, 2, 7},
    {-12858, 1, 0, 7},
    {11160, 1, 2, 7},
    {-1944, 2, 0, 7},
    {2400, 3, 0, 7},
    {-160785, 0, 1, 6},
    {17521, 0, 3, 6},
    {109500, 1, 1, 6},
    {107784, 2, 1, 6},
    {-68367, 0, 0, 5},
    {266580, 0, 2, 5},
    {-9792, 1, 0, 5},
    {8670, 1, 2, 5},
    {108, 2, 0, 5},
    {816, 3, 0, 5},
    {242145, 0, 1, 4},
    {-139845, 0, 3, 4},
    {51324, 1, 1, 4},
    {39708, 2, 1, 4},
    {29088, 0, 0, 3},
    {-247383, 0, 2, 3},
    {-1964, 1, 0, 3},
    {-1044, 1, 2, 3},
    {162, 2, 0, 3},
    {152, 3, 0, 3},
    {-56673, 0, 1, 2},
    {69189, 0, 3, 2},
    {11466, 1, 1, 2},
    {7818, 2, 1, 2},
    {-1512, 0, 0, 1},
    {27432, 0, 2, 1},
    {144, 1, 0, 1},
    {-1134, 1, 2, 1},
    {24, 2, 0, 1},
    {12, 3, 0, 1},
    {1134, 0, 1, 0},
    {-2097, 0, 3, 0},
    {582, 1, 1, 0},
    {642, 2, 1, 0}
};

// Numerator of f1; rows are {coefficient, power of N, power of Omega, power of x}.
constexpr Monomial kHermiteF1[] = {
    {16, 0, 0, 14},
    {-32, 0, 1, 13},
    {96, 0, 0, 12},
    {16, 0, 2, 12},
    {-64, 1, 0, 12},
    {-160, 0, 1, 11},
    {64, 1, 1, 11},
    {72, 0, 0, 10},
    {64, 0, 2, 10},
    {-256, 1, 0, 10},
    {64, 2, 0, 10},
    {-272, 0, 1, 9},
    {192, 1, 1, 9},
    {-120, 0, 0, 8},
    {168, 0, 2, 8},
    {-448, 1, 0, 8},
    {160, 2, 0, 8},
    {-192, 0, 1, 7},
    {416, 1, 1, 7},
    {-359, 0, 0, 6},
    {152, 0, 2, 6},
    {-128, 1, 0, 6},
    {160, 2, 0, 6},
    {334, 0, 1, 5},
    {160, 1, 1, 5},
    {324, 0, 0, 4},
    {-279, 0, 2, 4},
    {92, 1, 0, 4},
    {80, 2, 0, 4},
    {-1662, 0, 1, 3},
    {-76, 1, 1, 3},
    {-497, 0, 0, 2},
    {1210, 0, 2, 2},
    {32, 1, 0, 2},
    {20, 2, 0, 2},
    {610, 0, 1, 1},
    {-36, 1, 1, 1},
    {18, 0, 0, 0},
    {-83, 0, 2, 0},
    {-2, 1, 0, 0},
    {2, 2, 0, 0}
};

// Numerator of f2; rows are {coefficient, power of N, power of Omega, power of x}.
constexpr Monomial kHermiteF2[] = {
    {-4, 0, 0, 7},
    {4, 0, 1, 6},
    {-12, 0, 0, 5},
    {8, 1, 0, 5},
    {8, 0, 1, 4},
    {-17, 0, 0, 3},
    {8, 1, 0, 3},
    {21, 0, 1, 2},
    {10, 0, 0, 1},
    {2, 1, 0, 1},
    {-7, 0, 1, 0}
};
// Σ coef N^pn Ω^pw x^px as a jet, by Horner in x.
Jet numerator_jet(std::span<const Monomial> terms, double N, double omega, double x) {
  int top = 0;
  for (const auto& t : terms) top = std::max(top, t.px);
  std::vector<double> c(static_cast<std::size_t>(top) + 1, 0.0);
  for (const auto& t : terms) c[static_cast<std::size_t>(t.px)] += t.coef * std::pow(N, t.pn) * std::pow(omega, t.pw);
  const Jet v = Jet::variable(x);
  Jet s = Jet::constant(x, c.back());
  for (int k = top - 1; k >= 0; --k) s = s * v + c[static_cast<std::size_t>(k)];
  return s;
}

}  // namespace

std::array<double, 13> hermite_perline_coefficients(double N, double W) {
  const double W2 = W * W;
  return {
      -W2 * W,
      0.75 * (2 * W2 - 1),
      -1.5 * W,
      3.0 / 8.0,
      3 * (N * W2 + 2 * W2 - 1.5 * N - 4),
      -3 * (2 * W2 - 1) * W,
      -2 * W * (54 * N * N + 4 * W2 + 48 * N - 3),
      -6 * (2 * N + 1) * W,
      9.0 / 8.0 * (2 * N + 1),
      1.5 * (3 * N * N + 3 * N - 7),
      3 * (6 * N * W2 - 4 * N * N + 2 * W2 - 17 * N - 7),
      672 * (N + 1) * N * W,
      1.5 * (2 * N * N + 2 * N - 15) * (2 * N + 1),
  };
}

std::array<double, 7> laguerre_perline_coefficients(double N, double W, double a) {
  const double s = W - 3 * a - 10;
  return {
      1764.0,
      168 * s,
      16 * s * s,
      4 * (N + a),
      42 * (2 * N * W + 2 * N * a + 4 * a * a - 5 * W + 15 * a + 40),
      -4 * (8 * N * W * a + 20 * N * W + 8 * N * a * a + 20 * N * a + 2 * W * W * a + 5 * W * W - 30 * W * a - 90 * W +
            14 * a * a * a + 85 * a * a + 270 * a + 400),
      (N + a) * (N - a - 5),
  };
}

Jet hermite_f(int j, double N, double W, double x) {
  const Jet t = Jet::variable(x);
  const Jet d = 2.0 * t * t + 1.0;
  const Jet r = W - t;
  switch (j) {
    case 0: return numerator_jet(kHermiteF0, N, W, x) / ipow(d, 6);
    case 1: return -3.0 * r * numerator_jet(kHermiteF1, N, W, x) / ipow(d, 4);
    case 2: return 3.0 * r * r * numerator_jet(kHermiteF2, N, W, x) / (d * d);
    case 3: return -ipow(r, 3);
    default: throw std::invalid_argument("hermite_f: j must be in 0..3");
  }
}

Jet laguerre_f(int j, double N, double W, double a, double x) {
  const Jet t = Jet::variable(x);
  const Jet r = W - t;
  const Jet u = t + a;
  switch (j) {
    case 0: {
      const double a2 = a * a;
      const double W2 = W * W;
      const double c = N * N * a2 - 2.5 * N * W * a2 - 20 * N * W * a - 40 * N * W - 2.5 * N * a2 * a - 20 * N * a2 -
                       36 * N * a - 0.625 * W2 * a2 - 5 * W2 * a - 6 * W2 - W * a2 * a + 39.5 * W * a + 100 * W -
                       71.0 / 16.0 * a2 * a2 - 35 * a2 * a - 132.25 * a2 - 300 * a - 400;
      const double c1 = 2 * N * N * a + 1.5 * N * W * a + 2.5 * N * a2 + 2 * N + 0.25 * W2 * a + 0.75 * W * a2 + W +
                        0.75 * a2 * a;
      const double c2 = N * N + 0.5 * N * W + 0.5 * N * a + W2 / 16 - a2 / 8 - 1.5;
      const double c3 = -(0.5 * N + W / 8 + a / 4);
      const Jet poly = (((t / 16.0 + c3) * t + c2) * t + c1) * t + c;
      const Jet inv = 1.0 / u;
      const Jet rational = W2 * a2 * (a2 - 4) / 16.0 / (t * t) + W * a * (4 * N * a2 + 2 * W * a2 - 4 * W + 3 * a2 * a) / 8.0 / t +
                           (((-8 * a2 * (W + a) * (W + a)) * inv + 6 * a * (W + a) * (W + 2 * a)) * inv - 4 * a * (W + a)) *
                               inv * inv -
                           2 * a * (N + a) * (W + a) * inv;
      return poly + rational;
    }
    case 1: {
      const Jet u2 = u * u;
      const Jet inner = ipow(t, 5) - 4.0 * ipow(t, 3) - 4.0 * N * t * u2 * u - W * u2 * u2 + 4 * W * a * t - 4 * W * t * t -
                        3 * a * a * a * a * t - 8 * a * a * a * t * t - 6 * a * a * ipow(t, 3) - 4 * a * a * t -
                        16 * a * t * t;
      return r * inner / (2.0 * u2);
    }
    case 2: return t * t * r * r;
    default: throw std::invalid_argument("laguerre_f: j must be in 0..2");
  }
}

}  // namespace xbl::detail
