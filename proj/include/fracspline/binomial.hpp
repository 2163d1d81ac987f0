#ifndef FRACSPLINE_BINOMIAL_HPP
#define FRACSPLINE_BINOMIAL_HPP

#include <utility>

#include "fracspline/errors.hpp"

namespace fracspline {

// sign * exp(log_abs) = Gamma(x)
struct LogGamma {
  double log_abs;
  int sign;  // +1 or -1
};

// Natural log of |Gamma(x)| with explicit sign. Negative non-integer
// arguments go through the reflection identity Gamma(x)Gamma(1-x) = pi/sin(pi x).
// Throws PoleError when x is within 1e-9 of a non-positive integer.
LogGamma log_gamma(double x);

// Generalized binomial coefficient Gamma(m+1) / (Gamma(n+1) Gamma(m-n+1))
// with the Gamma poles folded into a three-way value instead of an error:
// coefficient sequences legitimately contain exact zeros and infinities.
class BinomialValue {
 public:
  enum class Kind { Finite, Zero, Infinite };

  static BinomialValue finite(double v) { return BinomialValue(Kind::Finite, v, v < 0 ? -1 : 1); }
  static BinomialValue zero() { return BinomialValue(Kind::Zero, 0.0, 1); }
  static BinomialValue infinite(int sign) { return BinomialValue(Kind::Infinite, 0.0, sign); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ != Kind::Infinite; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }

  // Finite -> the value, Zero -> 0.0.  Throws on Infinite.
  double value() const {
    if (kind_ == Kind::Infinite) throw InfiniteCoefficient("binomial coefficient is infinite");
    return kind_ == Kind::Zero ? 0.0 : value_;
  }

  int sign() const { return sign_; }

 private:
  BinomialValue(Kind k, double v, int s) : kind_(k), value_(v), sign_(s) {}
  Kind kind_;
  double value_;
  int sign_;
};

// binom(m, n) for arbitrary reals.  Pole bookkeeping (arguments within 1e-9 of
// a non-positive integer count as poles; limits taken by perturbing m):
//   - pole in a denominator Gamma only        -> Zero
//   - numerator pole, no denominator pole     -> Infinite
//   - numerator and Gamma(m-n+1) poles cancel -> Finite (residue ratio)
//   - numerator pole vs two denominator poles -> Zero
BinomialValue gen_binomial(double m, double n);

// binom(alpha, k + alpha/2), the coefficient of the two-sided binomial series,
// even in k.  For even negative alpha the plain formula is one-sided and k is
// replaced by |k| to restore evenness; for odd negative alpha every
// coefficient is infinite.
BinomialValue symmetric_binomial(double alpha, long k);

// binom(m, k) for integer k >= 0 via the running product
// m (m-1) ... (m-k+1) / k!, accumulated in long double.  Returns 0 for k < 0.
// Preferred over the Gamma route inside sequence generators: the errors of
// successive coefficients stay coherent, which the telescoping delta
// identities need.
double binomial_integer_k(double m, long k);

}  // namespace fracspline

#endif
