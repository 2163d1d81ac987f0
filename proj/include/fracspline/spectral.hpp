#ifndef FRACSPLINE_SPECTRAL_HPP
#define FRACSPLINE_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "fracspline/check_report.hpp"
#include "fracspline/grids.hpp"
#include "fracspline/order.hpp"
#include "fracspline/sequences.hpp"
#include "fracspline/splines.hpp"

namespace fracspline {

// In-place radix-2 FFT; size must be a power of two.
void fft(std::vector<std::complex<double>>& data, bool inverse);

// D^beta via the discrete spectrum: zero-pad by pad_factor, multiply by
// (i omega)^beta (Causal) or |omega|^beta (Symmetric), invert.  Only the
// interior of the result honors an accuracy contract; the caller owns the
// 10% boundary band.
std::vector<double> fractional_derivative_spectral(const std::vector<double>& samples,
                                                   const Grid1D& grid, double beta, SplineKind kind,
                                                   std::size_t pad_factor = 4);

struct SpectralSplineSamples {
  std::vector<double> values;
  double omega_max = 0.0;
  double period = 0.0;
};

// Samples of the spectrally defined symmetric spline: periodized inverse
// transform of the closed-form |.|^(alpha+1) symbol.  Grid must be symmetric
// about 0 and n_freq a power of two.  Matches the series definition up to a
// constant; estimate the constant with least_squares_scale.
SpectralSplineSamples eval_symmetric_spline_spectral(const Order& order, const Grid1D& grid,
                                                     std::size_t n_freq);

// argmin_s sum (a_i - s b_i)^2
double least_squares_scale(const std::vector<double>& a, const std::vector<double>& b);

// D^beta B+^alpha vs Delta+^beta B+^(alpha-beta) on the grid interior, after
// aligning the spectral route by Gamma(alpha+1)/Gamma(alpha-beta+1).
// Requires beta < alpha + 1.
CheckReport check_derivative_relation(const Order& alpha, double beta, const Grid1D& grid,
                                      const TruncationPolicy& trunc, double tol);

// max over the grid of |Bhat^(a1) Bhat^(a2) - Bhat^(a1+a2+1)| in closed form.
CheckReport convolution_identity_residual(const Order& a1, const Order& a2,
                                          const FrequencyGrid& grid, SplineKind kind, double tol);

// Time-domain side: midpoint-quadrature convolution of sampled splines vs the
// closed-order spline, aligned by Beta(a1+1, a2+1) (the series-definition
// constant).  x ranges over [0, x_max] on the step lattice.
CheckReport time_domain_convolution_check(const Order& a1, const Order& a2, double step,
                                          double x_max, double tol);

}  // namespace fracspline

#endif
