#include "fracspline/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fracspline/binomial.hpp"
#include "fracspline/errors.hpp"

namespace fracspline {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

// ---- CoefficientSequence -------------------------------------------------

CoefficientSequence::CoefficientSequence(Support support, std::function<double(long)> generator)
    : support_(support), gen_(std::move(generator)), cache_(std::make_shared<Cache>()) {}

CoefficientSequence CoefficientSequence::kronecker_delta() {
  return CoefficientSequence(Support::NonnegativeOnly, [](long k) { return k == 0 ? 1.0 : 0.0; });
}

CoefficientSequence CoefficientSequence::from_values(Support support, long k_min,
                                                     std::vector<double> values) {
  auto data = std::make_shared<std::vector<double>>(std::move(values));
  return CoefficientSequence(support, [data, k_min](long k) {
    long i = k - k_min;
    if (i < 0 || i >= static_cast<long>(data->size())) return 0.0;
    return (*data)[static_cast<std::size_t>(i)];
  });
}

double CoefficientSequence::coeff(long k) const {
  if (support_ == Support::NonnegativeOnly && k < 0) return 0.0;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->values.empty() && k >= cache_->lo &&
        k < cache_->lo + static_cast<long>(cache_->values.size()))
      return cache_->values[static_cast<std::size_t>(k - cache_->lo)];
  }
  return gen_(k);
}

std::vector<double> CoefficientSequence::window(long k_min, long k_max) const {
  if (k_max < k_min) return {};
  std::lock_guard<std::mutex> lock(cache_->mu);
  long lo = k_min, hi = k_max;
  if (!cache_->values.empty()) {
    lo = std::min(lo, cache_->lo);
    hi = std::max(hi, cache_->lo + static_cast<long>(cache_->values.size()) - 1);
  }
  if (cache_->values.empty() || lo < cache_->lo ||
      hi >= cache_->lo + static_cast<long>(cache_->values.size())) {
    std::vector<double> fresh(static_cast<std::size_t>(hi - lo + 1));
    for (long k = lo; k <= hi; ++k) {
      long i = k - lo;
      if (!cache_->values.empty() && k >= cache_->lo &&
          k < cache_->lo + static_cast<long>(cache_->values.size()))
        fresh[static_cast<std::size_t>(i)] = cache_->values[static_cast<std::size_t>(k - cache_->lo)];
      else
        fresh[static_cast<std::size_t>(i)] =
            (support_ == Support::NonnegativeOnly && k < 0) ? 0.0 : gen_(k);
    }
    cache_->lo = lo;
    cache_->values = std::move(fresh);
  }
  std::vector<double> out(static_cast<std::size_t>(k_max - k_min + 1));
  for (long k = k_min; k <= k_max; ++k)
    out[static_cast<std::size_t>(k - k_min)] = cache_->values[static_cast<std::size_t>(k - cache_->lo)];
  return out;
}

std::pair<long, long> CoefficientSequence::cached_window() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->values.empty()) return {0, -1};
  return {cache_->lo, cache_->lo + static_cast<long>(cache_->values.size()) - 1};
}

// ---- FrequencyGrid --------------------------------------------------------

FrequencyGrid::FrequencyGrid(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw DomainError("FrequencyGrid: empty");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (samples_[i] < 0.0 || samples_[i] >= kTwoPi)
      throw DomainError("FrequencyGrid: samples must lie in [0, 2*pi)");
    if (i > 0 && samples_[i] <= samples_[i - 1])
      throw DomainError("FrequencyGrid: samples must be strictly increasing");
  }
}

FrequencyGrid FrequencyGrid::uniform(std::size_t count) {
  if (count == 0) throw DomainError("FrequencyGrid: count must be positive");
  std::vector<double> w(count);
  for (std::size_t j = 0; j < count; ++j)
    w[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(count);
  return FrequencyGrid(std::move(w));
}

// ---- mask and coefficient families ----------------------------------------

CoefficientSequence causal_mask(const Order& order) {
  const double a1 = order.alpha() + 1.0;
  const double scale = std::exp2(-a1);
  return CoefficientSequence(Support::NonnegativeOnly,
                             [a1, scale](long k) { return scale * binomial_integer_k(a1, k); });
}

CoefficientSequence causal_detail_mask(const Order& order, bool normalized) {
  const double a1 = order.alpha() + 1.0;
  const double scale = normalized ? std::exp2(-a1) : 1.0;
  return CoefficientSequence(Support::NonnegativeOnly, [a1, scale](long k) {
    double v = scale * binomial_integer_k(a1, k);
    return (k % 2) ? -v : v;
  });
}

namespace {

double symmetric_mask_coeff(double a1, long k) {
  BinomialValue b = symmetric_binomial(a1, k);
  if (b.is_infinite())
    throw InfiniteCoefficient("symmetric mask coefficient infinite at k = " + std::to_string(k));
  return b.value();
}

}  // namespace

CoefficientSequence symmetric_mask(const Order& order) {
  const double a1 = order.alpha() + 1.0;
  const double scale = std::exp2(-a1);
  return CoefficientSequence(Support::AllIntegers,
                             [a1, scale](long k) { return scale * symmetric_mask_coeff(a1, k); });
}

CoefficientSequence symmetric_detail_mask(const Order& order, bool normalized) {
  const double a1 = order.alpha() + 1.0;
  const double scale = normalized ? std::exp2(-a1) : 1.0;
  return CoefficientSequence(Support::AllIntegers, [a1, scale](long k) {
    double v = scale * symmetric_mask_coeff(a1, k);
    return (std::labs(k) % 2) ? -v : v;
  });
}

CoefficientSequence reproduction_coeffs_causal(const Order& order) {
  const double alpha = order.alpha();
  return CoefficientSequence(Support::NonnegativeOnly, [alpha](long k) {
    if (k < 0) return 0.0;
    // binom(k+alpha, k) = prod_{i=1..k} (alpha+i)/i
    long double acc = 1.0L;
    for (long i = 1; i <= k; ++i)
      acc *= (static_cast<long double>(alpha) + i) / static_cast<long double>(i);
    return static_cast<double>(acc);
  });
}

CoefficientSequence reproduction_coeffs_symmetric(const Order& order) {
  if (order.is_odd_nonneg() && order.alpha() > 0.0)
    throw ClosedFormUnavailable("symmetric reproduction closed form degenerates for odd integer order");
  if (order.is_even_nonneg())
    throw ClosedFormUnavailable("symmetric reproduction closed form degenerates for even integer order");
  const double alpha = order.alpha();
  return CoefficientSequence(Support::AllIntegers, [alpha](long k) {
    BinomialValue b = gen_binomial(-alpha - 1.0, static_cast<double>(k) - (alpha + 1.0) / 2.0);
    if (b.is_infinite())
      throw InfiniteCoefficient("symmetric reproduction coefficient infinite at k = " + std::to_string(k));
    double v = b.value();
    return (std::labs(k) % 2) ? -v : v;
  });
}

long default_mask_window(const Order& order, double tol, bool alternating_tail) {
  if (order.is_integer()) return static_cast<long>(order.alpha()) + 2;
  const double a1 = order.alpha() + 1.0;
  // |binom(alpha+1, k)| ~ k^-(alpha+2) / |Gamma(-alpha-1)|
  double c = 2.0 * std::exp2(-a1) / std::exp(log_gamma(-a1).log_abs);
  c = std::max(c, 1e-3);
  double k = alternating_tail ? std::pow(c / tol, 1.0 / (a1 + 1.0))
                              : std::pow(c / (a1 * tol), 1.0 / a1);
  long K = static_cast<long>(std::ceil(k)) + 16;
  return std::clamp<long>(K, 16, 1L << 21);
}

// ---- transforms ------------------------------------------------------------

std::complex<double> ddft_at(const CoefficientSequence& seq, double omega, long k_min, long k_max) {
  std::vector<double> c = seq.window(k_min, k_max);
  long double re = 0.0L, im = 0.0L;
  for (long k = k_min; k <= k_max; ++k) {
    double v = c[static_cast<std::size_t>(k - k_min)];
    if (v == 0.0) continue;
    double phase = -static_cast<double>(k) * omega;
    re += static_cast<long double>(v) * std::cos(phase);
    im += static_cast<long double>(v) * std::sin(phase);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::vector<std::complex<double>> ddft(const CoefficientSequence& seq, const FrequencyGrid& grid,
                                       long k_min, long k_max) {
  std::vector<std::complex<double>> out;
  out.reserve(grid.size());
  for (double w : grid.samples()) out.push_back(ddft_at(seq, w, k_min, k_max));
  return out;
}

std::vector<double> discrete_convolution(const CoefficientSequence& p, const CoefficientSequence& q,
                                         long n_min, long n_max, long inner_min, long inner_max) {
  if (n_max < n_min) return {};
  long qlo = inner_min, qhi = inner_max;
  if (q.support() == Support::NonnegativeOnly) qlo = std::max(qlo, 0L);
  std::vector<double> qv = q.window(qlo, qhi);
  // p is needed on [n_min - qhi, n_max - qlo]
  long plo = n_min - qhi, phi = n_max - qlo;
  if (p.support() == Support::NonnegativeOnly) plo = std::max(plo, 0L);
  std::vector<double> pv = phi >= plo ? p.window(plo, phi) : std::vector<double>{};

  std::vector<double> out(static_cast<std::size_t>(n_max - n_min + 1), 0.0);
  for (long n = n_min; n <= n_max; ++n) {
    long double acc = 0.0L;
    for (long k = qlo; k <= qhi; ++k) {
      long j = n - k;
      if (j < plo || j > phi) continue;
      double pj = pv[static_cast<std::size_t>(j - plo)];
      double qk = qv[static_cast<std::size_t>(k - qlo)];
      if (pj == 0.0 || qk == 0.0) continue;
      acc += static_cast<long double>(pj) * static_cast<long double>(qk);
    }
    out[static_cast<std::size_t>(n - n_min)] = static_cast<double>(acc);
  }
  return out;
}

// ---- solvers ----------------------------------------------------------------

std::vector<double> solve_weak_strang_fix_causal(const CoefficientSequence& b, std::size_t n_terms) {
  if (b.support() != Support::NonnegativeOnly)
    throw PreconditionViolated("causal solver requires NonnegativeOnly support");
  if (n_terms == 0) return {};
  std::vector<double> bv = b.window(0, static_cast<long>(n_terms) - 1);
  if (std::abs(bv[0]) < 1e-300) throw SingularSystem("b_0 is numerically zero");
  std::vector<double> p(n_terms, 0.0);
  p[0] = 1.0 / bv[0];
  for (std::size_t n = 1; n < n_terms; ++n) {
    long double acc = 0.0L;
    for (std::size_t k = 1; k <= n; ++k)
      acc += static_cast<long double>(bv[k]) * static_cast<long double>(p[n - k]);
    p[n] = static_cast<double>(-acc / bv[0]);
  }
  return p;
}

SymmetricSolveResult solve_weak_strang_fix_symmetric(const CoefficientSequence& b, long half_width,
                                                     double regularization) {
  if (b.support() != Support::AllIntegers)
    throw PreconditionViolated("symmetric solver requires AllIntegers support");
  if (half_width < 0) throw PreconditionViolated("half_width must be >= 0");
  const long H = half_width;
  const long rows = 2 * H + 1;     // n in [-H, H]
  const long cols = H + 1;         // unknowns q_j = p_j = p_-j, j in [0, H]
  std::vector<double> bv = b.window(-2 * H, 2 * H);
  auto bval = [&](long k) { return bv[static_cast<std::size_t>(k + 2 * H)]; };

  // M[n][j] = b_{n-j} + (j > 0) b_{n+j}
  std::vector<double> M(static_cast<std::size_t>(rows * cols));
  for (long n = -H; n <= H; ++n)
    for (long j = 0; j <= H; ++j)
      M[static_cast<std::size_t>((n + H) * cols + j)] = bval(n - j) + (j > 0 ? bval(n + j) : 0.0);

  // Normal equations A = M^T M + lambda I, rhs = M^T delta (delta at row n=0).
  std::vector<double> A(static_cast<std::size_t>(cols * cols), 0.0);
  std::vector<double> rhs(static_cast<std::size_t>(cols), 0.0);
  for (long i = 0; i < cols; ++i) {
    rhs[static_cast<std::size_t>(i)] = M[static_cast<std::size_t>(H * cols + i)];
    for (long j = i; j < cols; ++j) {
      long double acc = 0.0L;
      for (long n = 0; n < rows; ++n)
        acc += static_cast<long double>(M[static_cast<std::size_t>(n * cols + i)]) *
               static_cast<long double>(M[static_cast<std::size_t>(n * cols + j)]);
      A[static_cast<std::size_t>(i * cols + j)] = static_cast<double>(acc);
      A[static_cast<std::size_t>(j * cols + i)] = static_cast<double>(acc);
    }
  }
  for (long i = 0; i < cols; ++i) A[static_cast<std::size_t>(i * cols + i)] += regularization;

  // Cholesky A = L L^T
  std::vector<double> L(static_cast<std::size_t>(cols * cols), 0.0);
  double diag_max = 0.0, diag_min = std::numeric_limits<double>::infinity();
  for (long i = 0; i < cols; ++i) {
    for (long j = 0; j <= i; ++j) {
      long double acc = A[static_cast<std::size_t>(i * cols + j)];
      for (long k = 0; k < j; ++k)
        acc -= static_cast<long double>(L[static_cast<std::size_t>(i * cols + k)]) *
               static_cast<long double>(L[static_cast<std::size_t>(j * cols + k)]);
      if (i == j) {
        double d = static_cast<double>(acc);
        if (d <= 0.0) d = regularization;
        double l = std::sqrt(d);
        L[static_cast<std::size_t>(i * cols + i)] = l;
        diag_max = std::max(diag_max, d);
        diag_min = std::min(diag_min, d);
      } else {
        L[static_cast<std::size_t>(i * cols + j)] =
            static_cast<double>(acc) / L[static_cast<std::size_t>(j * cols + j)];
      }
    }
  }
  // forward/back substitution
  std::vector<double> y(static_cast<std::size_t>(cols));
  for (long i = 0; i < cols; ++i) {
    long double acc = rhs[static_cast<std::size_t>(i)];
    for (long k = 0; k < i; ++k)
      acc -= static_cast<long double>(L[static_cast<std::size_t>(i * cols + k)]) *
             static_cast<long double>(y[static_cast<std::size_t>(k)]);
    y[static_cast<std::size_t>(i)] = static_cast<double>(acc) / L[static_cast<std::size_t>(i * cols + i)];
  }
  std::vector<double> q(static_cast<std::size_t>(cols));
  for (long i = cols - 1; i >= 0; --i) {
    long double acc = y[static_cast<std::size_t>(i)];
    for (long k = i + 1; k < cols; ++k)
      acc -= static_cast<long double>(L[static_cast<std::size_t>(k * cols + i)]) *
             static_cast<long double>(q[static_cast<std::size_t>(k)]);
    q[static_cast<std::size_t>(i)] = static_cast<double>(acc) / L[static_cast<std::size_t>(i * cols + i)];
  }

  SymmetricSolveResult result;
  result.half_width = H;
  result.p.assign(static_cast<std::size_t>(rows), 0.0);
  for (long k = -H; k <= H; ++k)
    result.p[static_cast<std::size_t>(k + H)] = q[static_cast<std::size_t>(std::labs(k))];
  result.condition_estimate = diag_min > 0.0 ? diag_max / diag_min : std::numeric_limits<double>::infinity();
  result.ill_conditioned = !(result.condition_estimate < 1e12);

  // residual over interior rows |n| <= H/2
  double rmax = 0.0;
  for (long n = -H / 2; n <= H / 2; ++n) {
    long double acc = 0.0L;
    for (long j = 0; j < cols; ++j)
      acc += static_cast<long double>(M[static_cast<std::size_t>((n + H) * cols + j)]) *
             static_cast<long double>(q[static_cast<std::size_t>(j)]);
    double r = std::abs(static_cast<double>(acc) - (n == 0 ? 1.0 : 0.0));
    rmax = std::max(rmax, r);
  }
  result.residual_inf = rmax;
  return result;
}

CheckReport check_delta(const CoefficientSequence& b, const CoefficientSequence& p,
                        std::size_t n_terms, double tol) {
  const long N = static_cast<long>(n_terms);
  const bool causal = b.support() == Support::NonnegativeOnly && p.support() == Support::NonnegativeOnly;
  const long inner_lo = causal ? 0 : -(N + 64);
  const long inner_hi = causal ? N - 1 : N + 64;
  std::vector<double> conv = discrete_convolution(b, p, 0, N - 1, inner_lo, inner_hi);

  CheckReport report;
  report.name = "delta";
  report.tolerance = tol;
  report.window = N;
  double rmax = 0.0;
  long arg = 0;
  for (long n = 0; n < N; ++n) {
    double r = std::abs(conv[static_cast<std::size_t>(n)] - (n == 0 ? 1.0 : 0.0));
    if (r > rmax) {
      rmax = r;
      arg = n;
    }
  }
  report.residual = rmax;
  report.location = static_cast<double>(arg);
  report.passed = rmax <= tol;
  {
    std::ostringstream os;
    os << "(b*p)_0 = " << conv[0];
    report.note = os.str();
  }
  return report;
}

namespace {

bool is_uniform_even_grid(const FrequencyGrid& grid) {
  const std::size_t n = grid.size();
  if (n < 2 || n % 2 != 0) return false;
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(grid.samples()[j] - kTwoPi * static_cast<double>(j) / static_cast<double>(n)) > 1e-12)
      return false;
  return true;
}

}  // namespace

DetConditionResult det_condition(const CoefficientSequence& a, const CoefficientSequence& b,
                                 const FrequencyGrid& grid, long k_min, long k_max) {
  DetConditionResult out;
  out.min_abs_det = std::numeric_limits<double>::infinity();
  out.det_at_zero = std::numeric_limits<double>::quiet_NaN();
  const std::size_t n = grid.size();

  std::vector<std::complex<double>> ahat(n), ahat_pi(n), bhat(n), bhat_pi(n);
  if (is_uniform_even_grid(grid)) {
    // omega_j and omega_j + pi both lie on the grid: one root-of-unity table
    // serves every windowed sum.
    const long N = static_cast<long>(n);
    std::vector<std::complex<double>> root(n);
    for (long r = 0; r < N; ++r) {
      double ph = -kTwoPi * static_cast<double>(r) / static_cast<double>(N);
      root[static_cast<std::size_t>(r)] = {std::cos(ph), std::sin(ph)};
    }
    std::vector<double> av = a.window(k_min, k_max);
    std::vector<double> bv = b.window(k_min, k_max);
    auto sweep = [&](const std::vector<double>& cv, std::vector<std::complex<double>>& outv) {
      for (long j = 0; j < N; ++j) {
        long double re = 0.0L, im = 0.0L;
        for (long k = k_min; k <= k_max; ++k) {
          double c = cv[static_cast<std::size_t>(k - k_min)];
          if (c == 0.0) continue;
          long r = ((k % N) * j) % N;
          if (r < 0) r += N;
          const std::complex<double>& z = root[static_cast<std::size_t>(r)];
          re += static_cast<long double>(c) * z.real();
          im += static_cast<long double>(c) * z.imag();
        }
        outv[static_cast<std::size_t>(j)] = {static_cast<double>(re), static_cast<double>(im)};
      }
    };
    sweep(av, ahat);
    sweep(bv, bhat);
    const std::size_t half = n / 2;
    for (std::size_t j = 0; j < n; ++j) {
      ahat_pi[j] = ahat[(j + half) % n];
      bhat_pi[j] = bhat[(j + half) % n];
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      double w = grid.samples()[j];
      ahat[j] = ddft_at(a, w, k_min, k_max);
      ahat_pi[j] = ddft_at(a, w + kPi, k_min, k_max);
      bhat[j] = ddft_at(b, w, k_min, k_max);
      bhat_pi[j] = ddft_at(b, w + kPi, k_min, k_max);
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    double det = std::abs(ahat[j] * bhat_pi[j] - ahat_pi[j] * bhat[j]);
    double w = grid.samples()[j];
    if (det < out.min_abs_det) {
      out.min_abs_det = det;
      out.argmin_omega = w;
    }
    if (w == 0.0) out.det_at_zero = det;
  }
  return out;
}

}  // namespace fracspline
