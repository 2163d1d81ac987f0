#ifndef FRACSPLINE_SPLINES_HPP
#define FRACSPLINE_SPLINES_HPP

#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "fracspline/grids.hpp"
#include "fracspline/order.hpp"

namespace fracspline {

enum class SplineKind { Causal, Symmetric };
enum class EvalStrategy { ExactFiniteSum, TruncatedSeries, SpectralGrid };

// x^alpha on [0, inf), 0 on (-inf, 0); right-continuous at 0 (value 1 for
// alpha = 0, +inf for alpha < 0).
double causal_monomial(const Order& order, double x);

// |x|^alpha for alpha not an even nonnegative integer, x^alpha log|x|
// otherwise.  Throws DomainError at (alpha = 0, x = 0).
double symmetric_monomial(const Order& order, double x);

// Forward binomial difference sum_{k>=0} (-1)^k binom(beta,k) f(x-k).
// Finite when beta is a nonnegative integer or when f vanishes left of
// f_support_left; otherwise truncated per the policy.
double forward_difference(double beta, const std::function<double(double)>& f, double x,
                          const TruncationPolicy& trunc,
                          double f_support_left = -std::numeric_limits<double>::infinity());

// Centered difference sum_k (-1)^k binom(beta, k+beta/2) f(x-k), summed in
// (k, -k) pairs.
double symmetric_difference(double beta, const std::function<double(double)>& f, double x,
                            const TruncationPolicy& trunc);

// B+^alpha(x) = sum_{k=0}^{floor(x)} (-1)^k binom(alpha+1,k) (x-k)^alpha.
// The sum is finite for every x, so the value is exact up to roundoff.
double eval_causal_spline(const Order& order, double x);

struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
  long window = 0;  // half-width actually summed
};

// Two-sided series sum_k (-1)^k binom(alpha+1, k+(alpha+1)/2) (x-k)^alpha_*.
// The partial sum over |k| <= K is completed with the analytic estimate of
// the remaining one-signed tail (see symmetric_series_tail); tail_bound
// bounds what is left after the completion.
TruncatedValue eval_symmetric_spline(const Order& order, double x, const TruncationPolicy& trunc);

// Smooth extension of the series coefficients: for k beyond the head,
// (-1)^k binom(alpha+1, k+(alpha+1)/2) = S * Gamma(k-q) / Gamma(k+q+1) with
// q = (alpha+1)/2 and S = sin(pi(alpha+3)/2) Gamma(alpha+2) / pi.
double symmetric_series_coeff_scale(const Order& order);

// sum_{|k| > K} of the series terms at the point y, evaluated from the
// asymptotic expansion of the smooth coefficient extension (zeta tails).
// Requires K >= |y| + a margin; pass the bound pointer to receive a bound on
// the expansion remainder.
double symmetric_series_tail(const Order& order, double y, long K, double* bound = nullptr);

// Samples of B*^alpha on a uniform lattice whose step divides 1, computed as
// a lattice convolution of the series coefficients with monomial samples,
// plus the analytic tail.  Shared by the reproduction sums, which would
// otherwise amplify any uncorrected series tail coherently.
class SymmetricSplineLattice {
 public:
  SymmetricSplineLattice(const Order& order, double start, double step, std::size_t count,
                         long half_terms);

  double start() const { return start_; }
  double step() const { return step_; }
  std::size_t count() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  double max_tail_bound() const { return max_tail_bound_; }

 private:
  double start_;
  double step_;
  std::vector<double> values_;
  double max_tail_bound_ = 0.0;
};

// ((1 - e^{-i omega}) / (i omega))^{alpha+1}, principal branch; 1 at omega=0.
std::complex<double> fourier_causal_spline(const Order& order, double omega);

// |(1 - e^{-i omega}) / omega|^{alpha+1}; 1 at omega=0.
double fourier_symmetric_spline(const Order& order, double omega);

// Series definitions vs spectral normalization: the continuous transform of
// the series-defined causal spline is Gamma(alpha+1) times the closed form.
double causal_spectral_constant(const Order& order);

struct FractionalSpline {
  SplineKind kind;
  Order order;
  EvalStrategy strategy;
  TruncationPolicy truncation;

  // Validates kind/strategy: ExactFiniteSum on the symmetric side only for
  // odd nonnegative integer orders (compact support).
  static FractionalSpline make(SplineKind kind, Order order, EvalStrategy strategy,
                               TruncationPolicy truncation);
};

double eval_spline(const FractionalSpline& spline, double x);

}  // namespace fracspline

#endif
