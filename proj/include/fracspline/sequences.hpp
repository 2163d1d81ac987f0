#ifndef FRACSPLINE_SEQUENCES_HPP
#define FRACSPLINE_SEQUENCES_HPP

#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "fracspline/check_report.hpp"
#include "fracspline/order.hpp"

namespace fracspline {

enum class Support { NonnegativeOnly, AllIntegers };

// Integer-indexed real sequence backed by a deterministic generator.
// coeff(k) is 0 outside the support; inside, repeated calls return
// bit-identical values.  A materialized window is kept behind a mutex so the
// hot loops (convolutions, reproduction sums) read contiguous doubles.
class CoefficientSequence {
 public:
  CoefficientSequence(Support support, std::function<double(long)> generator);

  static CoefficientSequence kronecker_delta();
  static CoefficientSequence from_values(Support support, long k_min, std::vector<double> values);

  Support support() const { return support_; }
  double coeff(long k) const;

  // Materialize [k_min, k_max] and return it as a dense vector.
  std::vector<double> window(long k_min, long k_max) const;
  std::pair<long, long> cached_window() const;

 private:
  struct Cache {
    std::mutex mu;
    long lo = 0;
    std::vector<double> values;  // empty means nothing cached
  };
  Support support_;
  std::function<double(long)> gen_;
  std::shared_ptr<Cache> cache_;
};

// Strictly increasing frequency samples in [0, 2*pi).
class FrequencyGrid {
 public:
  explicit FrequencyGrid(std::vector<double> samples);
  static FrequencyGrid uniform(std::size_t count);  // omega_j = 2*pi*j/count

  const std::vector<double>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }

 private:
  std::vector<double> samples_;
};

// ---- mask and coefficient families ------------------------------------

// a_k = 2^-(alpha+1) binom(alpha+1, k), k >= 0.
CoefficientSequence causal_mask(const Order& order);

// normalized: b_k = (-1)^k a_k.  Unnormalized: the 2^(alpha+1) rescale
// btilde_k = (-1)^k binom(alpha+1, k), for which btilde (*) p = delta exactly.
CoefficientSequence causal_detail_mask(const Order& order, bool normalized);

// a*_k = 2^-(alpha+1) binom(alpha+1, k + (alpha+1)/2), even in k.
CoefficientSequence symmetric_mask(const Order& order);

CoefficientSequence symmetric_detail_mask(const Order& order, bool normalized);

// p_k = binom(k+alpha, k), k >= 0 (p_0 = 1).
CoefficientSequence reproduction_coeffs_causal(const Order& order);

// p_k = (-1)^k binom(-alpha-1, k-(alpha+1)/2) with Zero poles mapped to 0.
// Throws ClosedFormUnavailable for odd positive integer and even nonnegative
// integer orders, whose degenerate paths are handled elsewhere.
CoefficientSequence reproduction_coeffs_symmetric(const Order& order);

// Default window K making the modelled coefficient tail C k^-(alpha+2) of
// binom(alpha+1, .) sequences fall below tol; exact support for integer
// alpha.  The causal masks have alternating tails (partial-sum error bounded
// by the first omitted coefficient); the symmetric families are one-signed
// and need the summed tail model.
long default_mask_window(const Order& order, double tol, bool alternating_tail);

// ---- transforms and solvers --------------------------------------------

// Truncated sum_{k=k_min..k_max} c_k e^{-i k omega} at one frequency.
std::complex<double> ddft_at(const CoefficientSequence& seq, double omega, long k_min, long k_max);

std::vector<std::complex<double>> ddft(const CoefficientSequence& seq, const FrequencyGrid& grid,
                                       long k_min, long k_max);

// (p (*) q)_n = sum_k p_{n-k} q_k for n in [n_min, n_max], inner index k
// restricted to [inner_min, inner_max] (and to the operand supports).
std::vector<double> discrete_convolution(const CoefficientSequence& p, const CoefficientSequence& q,
                                         long n_min, long n_max, long inner_min, long inner_max);

// Forward substitution on the lower-triangular Toeplitz system
// (b (*) p)_n = delta_n0, n < n_terms.  Requires NonnegativeOnly support.
// Throws SingularSystem when |b_0| < 1e-300.
std::vector<double> solve_weak_strang_fix_causal(const CoefficientSequence& b, std::size_t n_terms);

struct SymmetricSolveResult {
  std::vector<double> p;       // index k + half_width, even in k by construction
  long half_width = 0;
  double condition_estimate = 0.0;
  double residual_inf = 0.0;   // max |(T p - delta)_n| over interior rows |n| <= half_width/2
  bool ill_conditioned = false;

  double at(long k) const { return p[static_cast<std::size_t>(k + half_width)]; }
};

// Least-squares solve of the truncated two-sided Toeplitz system
// (b (*) p)_n = delta_n0, |n|,|k| <= half_width, Tikhonov-regularized and
// restricted to even p.  Ill-conditioning is reported, not thrown.
SymmetricSolveResult solve_weak_strang_fix_symmetric(const CoefficientSequence& b, long half_width,
                                                     double regularization = 1e-12);

// max_n |(b (*) p)_n - delta_n0| over n in [0, n_terms).
CheckReport check_delta(const CoefficientSequence& b, const CoefficientSequence& p,
                        std::size_t n_terms, double tol);

struct DetConditionResult {
  double min_abs_det = 0.0;
  double argmin_omega = 0.0;
  double det_at_zero = 0.0;  // |det| at omega = 0 when the grid contains it, else NaN
};

// min over the grid of |a^(w) b^(w+pi) - a^(w+pi) b^(w)| with windowed DDFTs.
DetConditionResult det_condition(const CoefficientSequence& a, const CoefficientSequence& b,
                                 const FrequencyGrid& grid, long k_min, long k_max);

}  // namespace fracspline

#endif
