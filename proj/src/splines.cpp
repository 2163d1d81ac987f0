#include "fracspline/splines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracspline/binomial.hpp"
#include "fracspline/errors.hpp"

namespace fracspline {

namespace {

constexpr double kPi = std::numbers::pi;

// symmetric monomial that signals the alpha=0 log singularity with -inf
// instead of throwing; series evaluators consume the infinity.
double symmetric_monomial_raw(double alpha, bool log_branch, double x) {
  double ax = std::abs(x);
  if (log_branch) {
    if (ax == 0.0)
      return alpha == 0.0 ? -std::numeric_limits<double>::infinity() : 0.0;
    return std::pow(x, alpha) * std::log(ax);
  }
  if (ax == 0.0) return alpha > 0.0 ? 0.0 : (alpha == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
  return std::pow(ax, alpha);
}

// Tail sums Z(s,K) = sum_{j>K} j^-s and ZL(s,K) = sum_{j>K} j^-s ln j,
// from the Euler-Maclaurin expansion at K (valid for K >> s).
double zeta_tail(double s, double K) {
  double lnK = std::log(K);
  double Ks = std::exp(-s * lnK);  // K^-s
  return K * Ks / (s - 1.0) - Ks / 2.0 + s * Ks / (12.0 * K) -
         s * (s + 1.0) * (s + 2.0) * Ks / (720.0 * K * K * K);
}

double zeta_log_tail(double s, double K) {
  double lnK = std::log(K);
  double Ks = std::exp(-s * lnK);
  double t1 = K * Ks * (lnK / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
  double t2 = -lnK * Ks / 2.0;
  double t3 = (s * lnK - 1.0) * Ks / (12.0 * K);
  double t4 = ((3.0 * s * s + 6.0 * s + 2.0) - s * (s + 1.0) * (s + 2.0) * lnK) * Ks /
              (720.0 * K * K * K);
  return t1 + t2 + t3 + t4;
}

// coefficient of w^(2i) in (1+w)^a ln(1+w) + (1-w)^a ln(1-w)
double log_branch_phi(double a, int two_i) {
  double acc = 0.0;
  for (int m = 1; m <= two_i; ++m) {
    double term = binomial_integer_k(a, two_i - m) / static_cast<double>(m);
    acc += (m % 2) ? term : -term;
  }
  return 2.0 * acc;
}

struct SeriesShape {
  double alpha;
  double q;          // (alpha+1)/2
  bool log_branch;   // even nonnegative integer alpha
  bool compact;      // odd nonnegative integer alpha
  double S;          // smooth-tail scale
  double C2;         // Gamma-ratio t^-2 correction
};

SeriesShape series_shape(const Order& order) {
  SeriesShape sh;
  sh.alpha = order.alpha();
  sh.q = (sh.alpha + 1.0) / 2.0;
  sh.log_branch = order.is_even_nonneg();
  sh.compact = order.is_odd_nonneg();
  if (sh.compact) {
    sh.S = 0.0;
  } else {
    double r = std::remainder((sh.alpha + 3.0) / 2.0, 2.0);
    sh.S = std::sin(kPi * r) * std::exp(std::lgamma(sh.alpha + 2.0)) / kPi;
  }
  sh.C2 = sh.q * (sh.q + 1.0) * (sh.q + 0.5) / 3.0;
  return sh;
}

double series_coeff(const SeriesShape& sh, long k) {
  BinomialValue b = symmetric_binomial(sh.alpha + 1.0, k);
  double v = b.value();
  return (std::labs(k) % 2) ? -v : v;
}

double tail_impl(const SeriesShape& sh, double y, long K, double* bound) {
  if (bound) *bound = 0.0;
  if (sh.S == 0.0) return 0.0;
  const double a = sh.alpha;
  const double Kd = static_cast<double>(K);
  const double y2 = y * y, y4 = y2 * y2, y6 = y4 * y2;
  const double b2 = binomial_integer_k(a, 2);
  const double b4 = binomial_integer_k(a, 4);
  const double b6 = binomial_integer_k(a, 6);
  const double Z2 = zeta_tail(2.0, Kd);
  const double Z4 = zeta_tail(4.0, Kd);
  const double Z6 = zeta_tail(6.0, Kd);
  const double Z8 = zeta_tail(8.0, Kd);
  double tail;
  if (!sh.log_branch) {
    tail = 2.0 * sh.S *
           (Z2 + (sh.C2 + b2 * y2) * Z4 + (b4 * y4 + sh.C2 * b2 * y2) * Z6 +
            (b6 * y6 + sh.C2 * b4 * y4) * Z8);
  } else {
    const double L2 = zeta_log_tail(2.0, Kd);
    const double L4 = zeta_log_tail(4.0, Kd);
    const double L6 = zeta_log_tail(6.0, Kd);
    const double p2 = log_branch_phi(a, 2);
    const double p4 = log_branch_phi(a, 4);
    const double p6 = log_branch_phi(a, 6);
    tail = 2.0 * sh.S * (L2 + (sh.C2 + b2 * y2) * L4 + (b4 * y4 + sh.C2 * b2 * y2) * L6) +
           sh.S * (p2 * y2 * Z4 + (p4 * y4 + sh.C2 * p2 * y2) * Z6 +
                   (p6 * y6 + sh.C2 * p4 * y4) * Z8);
  }
  if (bound) {
    // next orders: w^8 of the monomial expansion and t^-4 of the Gamma ratio
    double w = std::abs(y) / Kd;
    double w8 = w * w * w * w;
    w8 *= w8;
    double lnK = sh.log_branch ? std::log(Kd) + 1.0 : 1.0;
    *bound = 10.0 * std::abs(sh.S) * lnK *
             (w8 / Kd + (sh.C2 * sh.C2 + 1.0) / (Kd * Kd * Kd * Kd * Kd));
  }
  return tail;
}

long tail_safe_window(const SeriesShape& sh, double y, const TruncationPolicy& trunc) {
  long K = std::max<long>(256, 4 * static_cast<long>(std::ceil(std::abs(y))) + 64);
  if (sh.compact) K = static_cast<long>(sh.q) + 2;
  return std::min<long>(K, static_cast<long>(trunc.max_terms));
}

}  // namespace

double causal_monomial(const Order& order, double x) {
  const double a = order.alpha();
  if (x < 0.0) return 0.0;
  if (x == 0.0) return a > 0.0 ? 0.0 : (a == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
  return std::pow(x, a);
}

double symmetric_monomial(const Order& order, double x) {
  if (order.alpha() == 0.0 && x == 0.0)
    throw DomainError("symmetric monomial log|x| is singular at x = 0");
  return symmetric_monomial_raw(order.alpha(), order.is_even_nonneg(), x);
}

double forward_difference(double beta, const std::function<double(double)>& f, double x,
                          const TruncationPolicy& trunc, double f_support_left) {
  long k_stop = static_cast<long>(trunc.max_terms);
  if (beta >= 0.0 && beta == std::rint(beta))
    k_stop = std::min(k_stop, static_cast<long>(beta) + 1);
  if (std::isfinite(f_support_left))
    k_stop = std::min(k_stop, static_cast<long>(std::floor(x - f_support_left)) + 1);
  const bool truncated = k_stop == static_cast<long>(trunc.max_terms);
  long double acc = 0.0L;
  long double coeff = 1.0L;  // (-1)^k binom(beta,k), updated multiplicatively
  for (long k = 0; k < k_stop; ++k) {
    if (k > 0) coeff *= -(static_cast<long double>(beta) - (k - 1)) / static_cast<long double>(k);
    if (coeff == 0.0L) break;
    acc += coeff * static_cast<long double>(f(x - static_cast<double>(k)));
    // coefficient decay |binom(beta,k)| ~ k^-(beta+1) bounds the tail
    if (truncated && k > 2 * std::abs(beta) + 8 &&
        std::abs(static_cast<double>(coeff)) < trunc.tail_tolerance)
      break;
  }
  return static_cast<double>(acc);
}

double symmetric_difference(double beta, const std::function<double(double)>& f, double x,
                            const TruncationPolicy& trunc) {
  long K = static_cast<long>(trunc.max_terms);
  if (beta >= 0.0 && beta == std::rint(beta)) {
    // compact stencil: binom(beta, k + beta/2) vanishes for |k| > beta/2 + 1
    K = static_cast<long>(std::ceil(beta / 2.0)) + 1;
  }
  long double acc = 0.0L;
  {
    BinomialValue c0 = symmetric_binomial(beta, 0);
    acc += static_cast<long double>(c0.value()) * static_cast<long double>(f(x));
  }
  for (long k = 1; k <= K; ++k) {
    BinomialValue bk = symmetric_binomial(beta, k);
    double c = bk.value();
    if (k % 2) c = -c;
    long double pair = static_cast<long double>(c) *
                       (static_cast<long double>(f(x - k)) + static_cast<long double>(f(x + k)));
    acc += pair;
    if (k > 2 * std::abs(beta) + 8 && std::abs(static_cast<double>(pair)) < trunc.tail_tolerance)
      break;
  }
  return static_cast<double>(acc);
}

double eval_causal_spline(const Order& order, double x) {
  if (x < 0.0) return 0.0;
  const double a1 = order.alpha() + 1.0;
  const long kmax = static_cast<long>(std::floor(x));
  long double acc = 0.0L;
  long double coeff = 1.0L;  // (-1)^k binom(alpha+1, k)
  for (long k = 0; k <= kmax; ++k) {
    if (k > 0) coeff *= -(static_cast<long double>(a1) - (k - 1)) / static_cast<long double>(k);
    acc += coeff * static_cast<long double>(causal_monomial(order, x - static_cast<double>(k)));
  }
  return static_cast<double>(acc);
}

double symmetric_series_coeff_scale(const Order& order) { return series_shape(order).S; }

double symmetric_series_tail(const Order& order, double y, long K, double* bound) {
  return tail_impl(series_shape(order), y, K, bound);
}

TruncatedValue eval_symmetric_spline(const Order& order, double x, const TruncationPolicy& trunc) {
  const SeriesShape sh = series_shape(order);
  const long K = tail_safe_window(sh, x, trunc);
  long double acc = static_cast<long double>(series_coeff(sh, 0)) *
                    static_cast<long double>(symmetric_monomial_raw(sh.alpha, sh.log_branch, x));
  for (long k = 1; k <= K; ++k) {
    double c = series_coeff(sh, k);  // equal at -k: coefficients are even in k
    if (c == 0.0) continue;
    acc += static_cast<long double>(c) *
           (static_cast<long double>(symmetric_monomial_raw(sh.alpha, sh.log_branch, x - k)) +
            static_cast<long double>(symmetric_monomial_raw(sh.alpha, sh.log_branch, x + k)));
  }
  TruncatedValue out;
  out.window = K;
  double bound = 0.0;
  double tail = 0.0;
  if (!sh.compact) {
    if (K >= std::abs(x) + 32) {
      tail = tail_impl(sh, x, K, &bound);
    } else {
      // window too small for the tail expansion; report the raw tail model
      bound = 2.0 * std::abs(sh.S) / std::max(1.0, static_cast<double>(K));
    }
  }
  out.value = static_cast<double>(acc) + tail;
  out.tail_bound = bound;
  return out;
}

SymmetricSplineLattice::SymmetricSplineLattice(const Order& order, double start, double step,
                                               std::size_t count, long half_terms)
    : start_(start), step_(step) {
  const SeriesShape sh = series_shape(order);
  const long stride = static_cast<long>(std::llrint(1.0 / step));
  if (!(stride >= 1) || std::abs(stride * step - 1.0) > 1e-9)
    throw DomainError("SymmetricSplineLattice: 1/step must be an integer");
  long K = sh.compact ? static_cast<long>(sh.q) + 2 : half_terms;
  K = std::max<long>(K, static_cast<long>(sh.q) + 2);

  // monomial samples on the superlattice covering every x_i -+ k
  const long n = static_cast<long>(count);
  const long m_lo = -K * stride;
  const long m_hi = (n - 1) + K * stride;
  std::vector<double> mono(static_cast<std::size_t>(m_hi - m_lo + 1));
  for (long u = m_lo; u <= m_hi; ++u)
    mono[static_cast<std::size_t>(u - m_lo)] =
        symmetric_monomial_raw(sh.alpha, sh.log_branch, start + static_cast<double>(u) * step);

  std::vector<double> coeffs(static_cast<std::size_t>(K + 1));
  for (long k = 0; k <= K; ++k) coeffs[static_cast<std::size_t>(k)] = series_coeff(sh, k);

  values_.resize(count);
  for (long i = 0; i < n; ++i) {
    long double acc = static_cast<long double>(coeffs[0]) *
                      static_cast<long double>(mono[static_cast<std::size_t>(i - m_lo)]);
    for (long k = 1; k <= K; ++k) {
      double c = coeffs[static_cast<std::size_t>(k)];
      if (c == 0.0) continue;
      acc += static_cast<long double>(c) *
             (static_cast<long double>(mono[static_cast<std::size_t>(i - k * stride - m_lo)]) +
              static_cast<long double>(mono[static_cast<std::size_t>(i + k * stride - m_lo)]));
    }
    double bound = 0.0;
    double tail = sh.compact ? 0.0 : tail_impl(sh, start + static_cast<double>(i) * step, K, &bound);
    values_[static_cast<std::size_t>(i)] = static_cast<double>(acc) + tail;
    max_tail_bound_ = std::max(max_tail_bound_, bound);
  }
}

std::complex<double> fourier_causal_spline(const Order& order, double omega) {
  if (omega == 0.0) return {1.0, 0.0};
  double r = 2.0 * std::sin(omega / 2.0) / omega;
  std::complex<double> h = r * std::complex<double>(std::cos(omega / 2.0), -std::sin(omega / 2.0));
  return std::pow(h, order.alpha() + 1.0);
}

double fourier_symmetric_spline(const Order& order, double omega) {
  if (omega == 0.0) return 1.0;
  double r = std::abs(2.0 * std::sin(omega / 2.0) / omega);
  return std::pow(r, order.alpha() + 1.0);
}

double causal_spectral_constant(const Order& order) { return std::exp(std::lgamma(order.alpha() + 1.0)); }

FractionalSpline FractionalSpline::make(SplineKind kind, Order order, EvalStrategy strategy,
                                        TruncationPolicy truncation) {
  if (kind == SplineKind::Symmetric && strategy == EvalStrategy::ExactFiniteSum &&
      !order.is_odd_nonneg())
    throw PreconditionViolated(
        "symmetric splines admit ExactFiniteSum only for odd nonnegative integer orders");
  return FractionalSpline{kind, order, strategy, truncation};
}

double eval_spline(const FractionalSpline& spline, double x) {
  if (spline.kind == SplineKind::Causal) return eval_causal_spline(spline.order, x);
  return eval_symmetric_spline(spline.order, x, spline.truncation).value;
}

}  // namespace fracspline
