// Coefficient transcriptions for the Perline combinations and the f_j.
#ifndef XBL_PERLINE_COEFFICIENTS_HPP
#define XBL_PERLINE_COEFFICIENTS_HPP

#include <array>

#include "xbl/jet.hpp"

namespace xbl::detail {

/// Coefficients of, in order,
///   D0^3, {D1,D0^2}, {D1^2,D0}, {D3,D0^3}, {D1,D0}, D0^2, D0, D1^2,
///   {D3,D0^2}, {D0,D3}, D1, D2, D3.
std::array<double, 13> hermite_perline_coefficients(double N, double omega);

/// Coefficients of, in order,
///   D1^2, {D0,D1}, D0^2, {D0,D2}, D1, D0, D2.
std::array<double, 7> laguerre_perline_coefficients(double N, double omega, double alpha);

Jet hermite_f(int j, double N, double omega, double x);
Jet laguerre_f(int j, double N, double omega, double alpha, double x);

}  // namespace xbl::detail

#endif  // XBL_PERLINE_COEFFICIENTS_HPP
