// Semi-infinite banded matrices given by closed-form entry generators.
//
// A BandedOperator of half-bandwidth k represents the difference operator
//   (L h)_n = sum_{j=-k..k} L(n, n+j) h_{n+j},   n >= 0,
// with L(n, m) = 0 whenever n < 0 or m < 0. Entries are produced on demand, so
// operators carry no truncation size; finite blocks are materialized when
// needed.
#ifndef XBL_BANDED_HPP
#define XBL_BANDED_HPP

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "xbl/special_polys.hpp"

namespace xbl {

class BandedOperator {
 public:
  /// generator(n, j) is the (n, n+j) entry, called only for n >= 0,
  /// n + j >= 0 and |j| <= bandwidth.
  using Generator = std::function<double(long n, int j)>;

  BandedOperator(int bandwidth, Generator generator, bool symmetric);

  static BandedOperator identity();
  static BandedOperator diagonal(std::function<double(long n)> d);

  int bandwidth() const noexcept { return bandwidth_; }
  bool symmetric() const noexcept { return symmetric_; }

  /// The (n, n+j) entry; 0 outside the band or below index 0.
  double entry(long n, int j) const;
  /// The (row, col) entry.
  double operator()(long row, long col) const;

 private:
  int bandwidth_;
  std::shared_ptr<const Generator> gen_;
  bool symmetric_;
};

BandedOperator operator*(const BandedOperator& a, const BandedOperator& b);
BandedOperator operator+(const BandedOperator& a, const BandedOperator& b);
BandedOperator operator-(const BandedOperator& a, const BandedOperator& b);
BandedOperator operator*(double s, const BandedOperator& a);
/// AB + BA; symmetric whenever both factors are.
BandedOperator anticommutator(const BandedOperator& a, const BandedOperator& b);
/// A^p for p >= 0.
BandedOperator power(const BandedOperator& a, int p);

/// Dense top-left size x size block.
Eigen::MatrixXd finite_block(const BandedOperator& a, int size);

/// (A c)_n for n < c.size(); entries of c beyond its end are taken as 0.
std::vector<double> apply_to_coeffs(const BandedOperator& a, std::span<const double> c);

/// finite_block(a, size) with the rows and columns listed in `removed` deleted.
Eigen::MatrixXd compress_banded(const BandedOperator& a, std::span<const int> removed, int size);
Eigen::MatrixXd compress_banded(const BandedOperator& a, const PolyFamily& fam, int size);

/// The difference operator L_j paired with the differential operator D_j of
/// the family (j = 0..3 for XHermite, 0..2 for XLaguerre). Entries whose row
/// or column is an exceptional degree, or whose radicand is negative, are 0.
/// Throws std::invalid_argument for an unknown j.
BandedOperator builtin_L(const PolyFamily& fam, int j);

/// Number of builtin pairs of the family (4 or 3).
int builtin_count(const PolyFamily& fam);

/// Largest |i - j| over the top-left size x size block with
/// |A(i,j)| > rel_tol * max |A|. Can be smaller than the declared bandwidth
/// when a product's outer diagonals cancel.
int effective_bandwidth(const BandedOperator& a, int size, double rel_tol = 1e-12);

}  // namespace xbl

#endif  // XBL_BANDED_HPP
