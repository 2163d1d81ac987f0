#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracspline/binomial.hpp"
#include "fracspline/splines.hpp"

using namespace fracspline;

namespace {
constexpr double kPi = std::numbers::pi;

// classical B-spline of order n via the standard recurrence; independent of
// the series evaluation path
double classical_bspline(int n, double x) {
  if (n == 0) return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
  return (x * classical_bspline(n - 1, x) +
          (static_cast<double>(n) + 1.0 - x) * classical_bspline(n - 1, x - 1.0)) /
         static_cast<double>(n);
}

// direct two-sided partial sum of the symmetric spline series (oracle)
double sym_partial(double alpha, double x, long K) {
  bool log_branch = alpha >= 0.0 && alpha == std::rint(alpha) && std::fmod(alpha, 2.0) == 0.0;
  auto mono = [&](double u) {
    double au = std::abs(u);
    if (log_branch) return au == 0.0 ? 0.0 : std::pow(u, alpha) * std::log(au);
    return au == 0.0 ? 0.0 : std::pow(au, alpha);
  };
  auto coeff = [&](long k) {
    double v = symmetric_binomial(alpha + 1.0, k).value();
    return (std::labs(k) % 2) ? -v : v;
  };
  long double acc = static_cast<long double>(coeff(0)) * static_cast<long double>(mono(x));
  for (long k = 1; k <= K; ++k) {
    double c = coeff(k);
    if (c == 0.0) continue;
    acc += static_cast<long double>(c) *
           (static_cast<long double>(mono(x - k)) + static_cast<long double>(mono(x + k)));
  }
  return static_cast<double>(acc);
}

// two-step Richardson extrapolation of the 1/K partial-sum tail
double sym_richardson(double alpha, double x, long K) {
  double a = sym_partial(alpha, x, K);
  double b = sym_partial(alpha, x, 2 * K);
  double c = sym_partial(alpha, x, 4 * K);
  double r1 = 2.0 * b - a;
  double r2 = 2.0 * c - b;
  return (4.0 * r2 - r1) / 3.0;
}

// log-branch partial sums have (a ln K + b)/K tails; 4C - 4B + A cancels
// both coefficients exactly
double sym_richardson_log(double alpha, double x, long K) {
  double a = sym_partial(alpha, x, K);
  double b = sym_partial(alpha, x, 2 * K);
  double c = sym_partial(alpha, x, 4 * K);
  return 4.0 * c - 4.0 * b + a;
}
}  // namespace

TEST_CASE("causal monomial") {
  CHECK(causal_monomial(Order(0.5), 4.0) == doctest::Approx(2.0));
  CHECK(causal_monomial(Order(0.5), -1.0) == 0.0);
  CHECK(causal_monomial(Order(0.0), 0.0) == 1.0);
  CHECK(causal_monomial(Order(2.0), 0.0) == 0.0);
  CHECK(causal_monomial(Order(-0.5), 0.0) == std::numeric_limits<double>::infinity());
}

TEST_CASE("symmetric monomial") {
  CHECK(symmetric_monomial(Order(1.5), -4.0) == doctest::Approx(8.0));
  CHECK(symmetric_monomial(Order(2.0), std::exp(1.0)) ==
        doctest::Approx(std::exp(2.0)).epsilon(1e-14));
  CHECK(symmetric_monomial(Order(2.0), -1.0) == 0.0);
  CHECK(symmetric_monomial(Order(2.0), 0.0) == 0.0);
  CHECK_THROWS_AS(symmetric_monomial(Order(0.0), 0.0), DomainError);
}

TEST_CASE("forward difference") {
  TruncationPolicy trunc;
  auto square = [](double t) { return t * t; };
  CHECK(forward_difference(1.0, square, 3.0, trunc) == doctest::Approx(5.0).epsilon(1e-14));

  auto ident = [](double t) { return t; };
  for (double x : {2.0, 5.5, 9.0})
    CHECK(forward_difference(2.0, ident, x, trunc) == doctest::Approx(0.0));

  // beta = 3/2 on the causal half monomial at x = 1: only k = 0 survives
  Order half(0.5);
  auto f = [&](double t) { return causal_monomial(half, t); };
  CHECK(forward_difference(1.5, f, 1.0, trunc, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("symmetric difference") {
  TruncationPolicy trunc;
  auto absf = [](double t) { return std::abs(t); };
  CHECK(symmetric_difference(2.0, absf, 0.0, trunc) == doctest::Approx(-2.0).epsilon(1e-14));

  auto constf = [](double) { return 3.25; };
  CHECK(symmetric_difference(2.0, constf, 1.7, trunc) == doctest::Approx(0.0).epsilon(1e-14));

  auto even_poly = [](double t) { return t * t + 1.0; };
  for (double x : {0.5, 1.25}) {
    double a = symmetric_difference(2.0, even_poly, x, trunc);
    double b = symmetric_difference(2.0, even_poly, -x, trunc);
    CHECK(a == doctest::Approx(b).epsilon(1e-14));
  }
}

TEST_CASE("causal spline evaluation") {
  CHECK(eval_causal_spline(Order(0.0), 0.5) == 1.0);
  CHECK(eval_causal_spline(Order(0.0), 0.0) == 1.0);
  CHECK(eval_causal_spline(Order(0.0), 1.0) == 0.0);
  CHECK(eval_causal_spline(Order(1.0), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eval_causal_spline(Order(0.5), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eval_causal_spline(Order(0.5), -2.0) == 0.0);
}

TEST_CASE("integer orders match the classical recurrence") {
  for (int n = 0; n <= 3; ++n) {
    Order order(static_cast<double>(n));
    double fact = std::tgamma(static_cast<double>(n) + 1.0);
    for (double x = 0.0; x <= n + 2.0 + 1e-12; x += 1.0 / 32.0) {
      double got = eval_causal_spline(order, x) / fact;
      double want = classical_bspline(n, x);
      CHECK(std::abs(got - want) <= 1e-12);
    }
  }
}

TEST_CASE("compact support of integer orders") {
  for (int n = 0; n <= 3; ++n) {
    Order order(static_cast<double>(n));
    for (double x : {-0.5, static_cast<double>(n) + 1.0, static_cast<double>(n) + 1.5,
                     static_cast<double>(n) + 7.0})
      CHECK(std::abs(eval_causal_spline(order, x)) <= 1e-12);
  }
}

TEST_CASE("symmetric spline: odd order is compact and exact") {
  TruncationPolicy trunc;
  TruncatedValue v0 = eval_symmetric_spline(Order(1.0), 0.0, trunc);
  CHECK(v0.value == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(v0.tail_bound == 0.0);
  CHECK(eval_symmetric_spline(Order(1.0), 2.0, trunc).value == doctest::Approx(0.0));
  CHECK(eval_symmetric_spline(Order(1.0), 0.5, trunc).value == doctest::Approx(-1.0).epsilon(1e-14));
  // support [-1, 1]
  for (double x : {1.0, 1.25, 3.0, -1.5})
    CHECK(std::abs(eval_symmetric_spline(Order(1.0), x, trunc).value) <= 1e-14);
}

TEST_CASE("symmetric spline evenness") {
  TruncationPolicy trunc;
  for (double x : {0.25, 1.5}) {
    double a = eval_symmetric_spline(Order(0.5), x, trunc).value;
    double b = eval_symmetric_spline(Order(0.5), -x, trunc).value;
    CHECK(a == b);
  }
}

TEST_CASE("symmetric spline matches the Richardson-extrapolated series") {
  for (double alpha : {0.5, 1.5, 2.75}) {
    Order order(alpha);
    TruncationPolicy trunc;
    for (double x : {0.0, 0.3, 1.6, 3.2, 7.5}) {
      double got = eval_symmetric_spline(order, x, trunc).value;
      double want = sym_richardson(alpha, x, 1500);
      CHECK(std::abs(got - want) <= 1e-8);
    }
  }
  // log branch (reference residual is (ln K)/K^2-sized)
  {
    TruncationPolicy trunc;
    for (double x : {0.4, 1.5, 2.5}) {
      double got = eval_symmetric_spline(Order(2.0), x, trunc).value;
      double want = sym_richardson_log(2.0, x, 2000);
      CHECK(std::abs(got - want) <= 2e-5);
    }
  }
}

TEST_CASE("analytic tail is consistent with the direct series segment") {
  for (double alpha : {0.5, 1.5, 2.0, 2.75}) {
    Order order(alpha);
    bool log_branch = order.is_even_nonneg();
    auto mono = [&](double u) {
      double au = std::abs(u);
      if (log_branch) return au == 0.0 ? 0.0 : std::pow(u, alpha) * std::log(au);
      return std::pow(au, alpha);
    };
    for (double y : {0.3, 3.7}) {
      long K1 = 300, K2 = 900;
      double t1 = symmetric_series_tail(order, y, K1);
      double t2 = symmetric_series_tail(order, y, K2);
      long double seg = 0.0L;
      for (long k = K1 + 1; k <= K2; ++k) {
        double v = symmetric_binomial(alpha + 1.0, k).value();
        double c = (k % 2) ? -v : v;
        seg += static_cast<long double>(c) *
               (static_cast<long double>(mono(y - static_cast<double>(k))) +
                static_cast<long double>(mono(y + static_cast<double>(k))));
      }
      // the expansion drops the t^-4 Gamma-ratio correction; at K = 300 that
      // leaves a few-times-1e-10 relative mismatch
      double scale = std::max(std::abs(t1), 1e-6);
      CHECK(std::abs((t1 - t2) - static_cast<double>(seg)) <= 3e-9 * scale);
    }
  }
  // compact orders have no tail at all
  CHECK(symmetric_series_tail(Order(1.0), 0.5, 64) == 0.0);
  CHECK(symmetric_series_coeff_scale(Order(3.0)) == 0.0);
}

TEST_CASE("symmetric spline lattice equals pointwise evaluation") {
  Order order(0.5);
  SymmetricSplineLattice lat(order, -3.0, 0.25, 25, 600);
  for (std::size_t i = 0; i < lat.count(); ++i) {
    double x = -3.0 + 0.25 * static_cast<double>(i);
    double direct = sym_richardson(0.5, x, 1500);
    CHECK(std::abs(lat[i] - direct) <= 1e-8);
  }
  CHECK_THROWS_AS(SymmetricSplineLattice(order, 0.0, 0.3, 4, 64), DomainError);
}

TEST_CASE("fourier transforms of the splines") {
  Order zero(0.0);
  CHECK(std::abs(fourier_causal_spline(zero, 0.0) - 1.0) == 0.0);
  // (1 - e^{-i pi}) / (i pi) = 2 / (i pi) = -2i/pi
  std::complex<double> fpi = fourier_causal_spline(zero, kPi);
  CHECK(fpi.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(fpi.imag() == doctest::Approx(-2.0 / kPi).epsilon(1e-14));

  // modulus identity |1 - e^{-iw}| = 2 |sin(w/2)|
  Order half(0.5);
  double want = std::pow(std::abs(2.0 * std::sin(kPi / 4.0) / (kPi / 2.0)), 1.5);
  CHECK(std::abs(fourier_causal_spline(half, kPi / 2.0)) == doctest::Approx(want).epsilon(1e-14));

  CHECK(fourier_symmetric_spline(Order(1.0), 0.0) == 1.0);
  CHECK(fourier_symmetric_spline(Order(1.0), kPi) ==
        doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-14));
  for (double alpha : {0.25, 1.2, 2.9})
    for (double w : {0.1, 1.0, 2.5, 5.0, 11.0})
      CHECK(fourier_symmetric_spline(Order(alpha), w) >= 0.0);
}

TEST_CASE("spectral constant is Gamma(alpha+1)") {
  CHECK(causal_spectral_constant(Order(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(causal_spectral_constant(Order(3.0)) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(causal_spectral_constant(Order(0.5)) ==
        doctest::Approx(std::exp(std::lgamma(1.5))).epsilon(1e-15));
}

TEST_CASE("spline kind/strategy validation") {
  TruncationPolicy trunc;
  CHECK_THROWS_AS(FractionalSpline::make(SplineKind::Symmetric, Order(0.5),
                                         EvalStrategy::ExactFiniteSum, trunc),
                  PreconditionViolated);
  FractionalSpline hat =
      FractionalSpline::make(SplineKind::Symmetric, Order(1.0), EvalStrategy::ExactFiniteSum, trunc);
  CHECK(eval_spline(hat, 0.0) == doctest::Approx(-2.0));
  FractionalSpline causal =
      FractionalSpline::make(SplineKind::Causal, Order(0.5), EvalStrategy::ExactFiniteSum, trunc);
  CHECK(eval_spline(causal, 1.0) == doctest::Approx(1.0));
}
