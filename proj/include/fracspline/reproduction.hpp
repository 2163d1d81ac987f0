#ifndef FRACSPLINE_REPRODUCTION_HPP
#define FRACSPLINE_REPRODUCTION_HPP

#include <utility>
#include <vector>

#include "fracspline/grids.hpp"
#include "fracspline/order.hpp"
#include "fracspline/sequences.hpp"
#include "fracspline/splines.hpp"

namespace fracspline {

struct ReproductionResult {
  std::vector<double> x;
  std::vector<double> target;
  std::vector<double> reconstruction;
  std::vector<double> abs_error;
  double max_interior_error = 0.0;
  std::vector<std::pair<double, double>> excluded_zones;  // kink neighborhoods skipped by the max
  long window_k_min = 0;
  long window_k_max = 0;
  double tail_bound = 0.0;  // 0 when the sum is exact
  bool exact = false;
};

// Reproduction coefficients used on the symmetric side: the closed form where
// it is valid; for odd positive integer orders, the redefined even-negative
// binomial sequence normalized so that btilde (*) p = delta holds exactly
// (the closed form alone is off by a constant; the delta identity pins it,
// and the truncated solver cross-checks it).  Throws for even nonnegative
// integer orders, which only the factorized route can reproduce.
CoefficientSequence symmetric_reproduction_sequence(const Order& order);

// sum_{k <= floor(x)} binom(k+alpha,k) B+^alpha(x-k) vs x^alpha, exact up to
// roundoff on any grid with start >= 0.
ReproductionResult reproduce_causal(const Order& order, const Grid1D& grid);

// Two-sided sum over |k - round(x)| <= half_width vs the symmetric monomial.
// Even nonnegative integer orders route through the factorized path.
ReproductionResult reproduce_symmetric(const Order& order, const Grid1D& grid, long half_width);

// sum_k (k + (alpha+1)/2) B+^alpha(x-k) / Gamma(alpha+1) vs x, over the shift
// window [k_min, k_max].  Classical normalization: the target is an ordinary
// polynomial with absolute scale.
ReproductionResult reproduce_linear_ordinary(const Order& order, const Grid1D& grid, long k_min,
                                             long k_max);

struct ConvergenceProbeRow {
  long window = 0;
  double pointwise_error = 0.0;  // at the fixed probe point
  double sup_error = 0.0;        // over [0, window/2]
  double domain_hi = 0.0;
};

// Measurement table for the linear-reproduction series: pointwise error at
// fixed_x and sup error over an expanding domain, per window size.  No
// pass/fail semantics.
std::vector<ConvergenceProbeRow> probe_nonuniform_convergence(const Order& order,
                                                              const std::vector<long>& windows,
                                                              double fixed_x, double domain_step);

// |sum_{k=-K..floor(x)} B+^alpha(x-k) / Gamma(alpha+1) - 1|
double partition_of_unity_error(const Order& order, double x, long K);

// x^alpha log|x| = (inverse difference of order beta1) applied to the
// (inverse difference of order beta2) of B*^alpha, for even nonnegative
// integer alpha with beta1 + beta2 = -(alpha+1) and neither beta an odd
// negative integer.  Inner sum materialized on a lattice extended by the
// outer reach; 1/grid.step must be an integer.
ReproductionResult reproduce_even_symmetric_factorized(const Order& order,
                                                       std::pair<double, double> split,
                                                       const Grid1D& grid, long half_width);

// sum_k p_k B(x-k) over the window, with p from the corresponding
// reproduction sequence; the causal path is the same loop reproduce_causal
// runs, re-exposed for operator composition.
std::vector<double> inverse_difference_apply(const Order& order, SplineKind kind, const Grid1D& grid,
                                             long k_min, long k_max);

// out[i] = sum_j coeffs[j] in[i + offset - (k_min+j)*stride]; the integer-shift
// operator on lattice samples.
std::vector<double> apply_sequence_to_samples(const std::vector<double>& coeffs, long k_min,
                                              const std::vector<double>& in, long stride,
                                              long offset, std::size_t out_count);

double eval_2d_spline(SplineKind kind, const Order& o1, const Order& o2, double x, double y,
                      const TruncationPolicy& trunc);

struct Reproduction2DResult {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> target;          // row-major over (x_i, y_j): index i*ny + j
  std::vector<double> reconstruction;
  std::vector<double> abs_error;
  double max_interior_error = 0.0;
  double tail_bound = 0.0;
  bool exact = false;
};

// Separable double sum: the 2D reconstruction is the outer product of the 1D
// reconstructions.  Causal on the first quadrant is exact.
Reproduction2DResult reproduce_2d(SplineKind kind, const Order& o1, const Order& o2,
                                  const Grid2D& grid, long half_width);

enum class QuadrantSignMode { Same, Opposite, Full };

struct Quadrant2DResult {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> reconstruction;  // row-major
  double mass_fraction_same_pair = 0.0;      // |.| mass in quadrants I and III
  double mass_fraction_opposite_pair = 0.0;  // quadrants II and IV
};

// Symmetric double sum restricted to k1 k2 >= 0 (Same) or k1 k2 <= 0
// (Opposite); Full keeps every index pair.
Quadrant2DResult reproduce_2d_quadrant(const Order& o1, const Order& o2, const Grid2D& grid,
                                       QuadrantSignMode mode, long half_width);

}  // namespace fracspline

#endif
