#include "fracspline/binomial.hpp"

#include <cmath>
#include <numbers>

namespace fracspline {

namespace {

constexpr double kPoleTol = 1e-9;  // arguments this close to a non-positive integer are the pole
constexpr double kPi = std::numbers::pi;

bool is_gamma_pole(double x) {
  double r = std::rint(x);
  return r <= 0.5 && std::abs(x - r) <= kPoleTol;
}

// sin(pi x) with reduction to [-1/2, 1/2]; exact zeros at integers.
double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // [-1, 1]
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  return std::sin(kPi * r);
}

}  // namespace

LogGamma log_gamma(double x) {
  if (std::isnan(x)) throw DomainError("log_gamma: NaN argument");
  if (is_gamma_pole(x))
    throw PoleError("log_gamma: pole at x = " + std::to_string(x));
  if (x > 0.0) return {std::lgamma(x), 1};
  // Gamma(x) = pi / (sin(pi x) Gamma(1-x)); Gamma(1-x) > 0 here.
  double s = sin_pi(x);
  double log_abs = std::log(kPi) - std::log(std::abs(s)) - std::lgamma(1.0 - x);
  return {log_abs, s > 0.0 ? 1 : -1};
}

BinomialValue gen_binomial(double m, double n) {
  const double a = m + 1.0;      // numerator argument
  const double b = n + 1.0;      // denominator, fixed under the m-limit
  const double c = m - n + 1.0;  // denominator, moves with m

  const bool pa = is_gamma_pole(a);
  const bool pb = is_gamma_pole(b);
  const bool pc = is_gamma_pole(c);

  if (!pa) {
    if (pb || pc) return BinomialValue::zero();
    LogGamma la = log_gamma(a), lb = log_gamma(b), lc = log_gamma(c);
    double v = std::exp(la.log_abs - lb.log_abs - lc.log_abs);
    int s = la.sign * lb.sign * lc.sign;
    return BinomialValue::finite(s * v);
  }

  // Numerator pole at a = -j.
  const long j = static_cast<long>(std::llrint(-a));
  if (pb && pc) return BinomialValue::zero();
  if (pb) return BinomialValue::zero();  // integer n < 0: coefficient vanishes
  if (pc) {
    // Gamma(a+eps)/Gamma(c+eps) -> (-1)^(j+l) l!/j! as eps -> 0.
    const long l = static_cast<long>(std::llrint(-c));
    LogGamma lb = log_gamma(b);
    double v = std::exp(std::lgamma(static_cast<double>(l) + 1.0) -
                        std::lgamma(static_cast<double>(j) + 1.0) - lb.log_abs);
    int s = (((j + l) % 2) ? -1 : 1) * lb.sign;
    return BinomialValue::finite(s * v);
  }
  // Uncancelled numerator pole; sign from the eps -> 0+ residue of Gamma(-j+eps).
  LogGamma lb = log_gamma(b), lc = log_gamma(c);
  int s = ((j % 2) ? -1 : 1) * lb.sign * lc.sign;
  return BinomialValue::infinite(s);
}

BinomialValue symmetric_binomial(double alpha, long k) {
  const double half = alpha / 2.0;
  if (alpha == std::rint(alpha) && alpha < 0.0) {
    long ai = static_cast<long>(std::llrint(alpha));
    if (ai % 2 != 0) {
      // odd negative order: the whole sequence degenerates to +-infinity
      BinomialValue probe = gen_binomial(alpha, static_cast<double>(k) + half);
      return BinomialValue::infinite(probe.is_infinite() ? probe.sign() : 1);
    }
    return gen_binomial(alpha, static_cast<double>(std::labs(k)) + half);
  }
  return gen_binomial(alpha, static_cast<double>(k) + half);
}

double binomial_integer_k(double m, long k) {
  if (k < 0) return 0.0;
  long double acc = 1.0L;
  for (long i = 1; i <= k; ++i)
    acc *= (static_cast<long double>(m) - static_cast<long double>(i - 1)) / static_cast<long double>(i);
  return static_cast<double>(acc);
}

}  // namespace fracspline
