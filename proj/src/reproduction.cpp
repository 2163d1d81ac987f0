#include "fracspline/reproduction.hpp"

#include <algorithm>
#include <cmath>

#include "fracspline/binomial.hpp"
#include "fracspline/errors.hpp"

namespace fracspline {

namespace {

long lattice_stride(double step) {
  long s = static_cast<long>(std::llrint(1.0 / step));
  if (s < 1 || std::abs(static_cast<double>(s) * step - 1.0) > 1e-9)
    throw DomainError("grid step must divide 1 for lattice reproduction sums");
  return s;
}

double gamma_pos(double x) { return std::exp(std::lgamma(x)); }

// coefficients of the symmetric difference of order beta:
// (-1)^k binom(beta, k + beta/2), materialized over |k| <= H
std::vector<double> symmetric_difference_coeffs(double beta, long H) {
  std::vector<double> c(static_cast<std::size_t>(2 * H + 1));
  for (long k = -H; k <= H; ++k) {
    double v = symmetric_binomial(beta, k).value();
    c[static_cast<std::size_t>(k + H)] = (std::labs(k) % 2) ? -v : v;
  }
  return c;
}

}  // namespace

CoefficientSequence symmetric_reproduction_sequence(const Order& order) {
  if (order.is_even_nonneg())
    throw ClosedFormUnavailable(
        "even integer orders have no single reproduction sequence; use the factorized path");
  if (order.is_odd_nonneg()) {
    const double alpha = order.alpha();
    // Redefined even-negative binomials, pinned by (btilde (*) s)_0 = C.
    auto s_at = [alpha](long k) {
      double v = symmetric_binomial(-alpha - 1.0, k).value();
      return (std::labs(k) % 2) ? -v : v;
    };
    const long reach = static_cast<long>(alpha + 1.0) / 2 + 1;
    CoefficientSequence btilde = symmetric_detail_mask(order, /*normalized=*/false);
    long double c0 = 0.0L;
    for (long j = -reach; j <= reach; ++j)
      c0 += static_cast<long double>(btilde.coeff(j)) * static_cast<long double>(s_at(-j));
    const double C = static_cast<double>(c0);
    if (std::abs(C) < 1e-300) throw SingularSystem("degenerate delta normalization");
    return CoefficientSequence(Support::AllIntegers, [s_at, C](long k) { return s_at(k) / C; });
  }
  return reproduction_coeffs_symmetric(order);
}

std::vector<double> inverse_difference_apply(const Order& order, SplineKind kind, const Grid1D& grid,
                                             long k_min, long k_max) {
  std::vector<double> out(grid.count, 0.0);
  if (kind == SplineKind::Causal) {
    CoefficientSequence p = reproduction_coeffs_causal(order);
    long lo = std::max<long>(k_min, 0);
    std::vector<double> pv = k_max >= lo ? p.window(lo, k_max) : std::vector<double>{};
    for (std::size_t i = 0; i < grid.count; ++i) {
      double x = grid.point(i);
      long double acc = 0.0L;
      for (long k = lo; k <= k_max; ++k)
        acc += static_cast<long double>(pv[static_cast<std::size_t>(k - lo)]) *
               static_cast<long double>(eval_causal_spline(order, x - static_cast<double>(k)));
      out[i] = static_cast<double>(acc);
    }
    return out;
  }
  CoefficientSequence p = symmetric_reproduction_sequence(order);
  std::vector<double> pv = p.window(k_min, k_max);
  TruncationPolicy trunc;
  for (std::size_t i = 0; i < grid.count; ++i) {
    double x = grid.point(i);
    long double acc = 0.0L;
    for (long k = k_min; k <= k_max; ++k)
      acc += static_cast<long double>(pv[static_cast<std::size_t>(k - k_min)]) *
             static_cast<long double>(eval_symmetric_spline(order, x - static_cast<double>(k), trunc).value);
    out[i] = static_cast<double>(acc);
  }
  return out;
}

ReproductionResult reproduce_causal(const Order& order, const Grid1D& grid) {
  if (grid.start < 0.0) throw PreconditionViolated("causal reproduction requires grid.start >= 0");
  const long k_max = static_cast<long>(std::floor(grid.back()));
  ReproductionResult res;
  res.x = grid.points();
  res.window_k_min = 0;
  res.window_k_max = k_max;
  res.exact = true;
  res.tail_bound = 0.0;
  res.reconstruction = inverse_difference_apply(order, SplineKind::Causal, grid, 0, k_max);
  res.target.resize(grid.count);
  res.abs_error.resize(grid.count);
  if (!order.is_integer() && order.alpha() < 1.0)
    res.excluded_zones.push_back({-grid.step, grid.step});
  double m = 0.0;
  for (std::size_t i = 0; i < grid.count; ++i) {
    res.target[i] = causal_monomial(order, res.x[i]);
    res.abs_error[i] = std::abs(res.reconstruction[i] - res.target[i]);
    bool excluded = false;
    for (auto& z : res.excluded_zones)
      if (res.x[i] > z.first && res.x[i] < z.second) excluded = true;
    if (!excluded) m = std::max(m, res.abs_error[i]);
  }
  res.max_interior_error = m;
  return res;
}

ReproductionResult reproduce_symmetric(const Order& order, const Grid1D& grid, long half_width) {
  if (order.is_even_nonneg()) {
    double b = -(order.alpha() + 1.0) / 2.0;
    return reproduce_even_symmetric_factorized(order, {b, b}, grid, half_width);
  }
  const long H = half_width;
  CoefficientSequence p = symmetric_reproduction_sequence(order);
  const long kc_lo = std::lround(grid.start);
  const long kc_hi = std::lround(grid.back());
  std::vector<double> pv = p.window(kc_lo - H, kc_hi + H);
  auto pval = [&](long k) { return pv[static_cast<std::size_t>(k - (kc_lo - H))]; };

  ReproductionResult res;
  res.x = grid.points();
  res.window_k_min = kc_lo - H;
  res.window_k_max = kc_hi + H;
  res.reconstruction.assign(grid.count, 0.0);
  res.target.resize(grid.count);
  res.abs_error.resize(grid.count);

  const long stride = lattice_stride(grid.step);
  // B*^alpha on the lattice covering every x - k
  const long lat_lo = 0 - (kc_hi + H) * stride;
  const long lat_hi = static_cast<long>(grid.count) - 1 - (kc_lo - H) * stride;
  const double max_arg = std::max(std::abs(grid.start + static_cast<double>(lat_lo) * grid.step),
                                  std::abs(grid.start + static_cast<double>(lat_hi) * grid.step));
  const long K = std::max<long>(512, 4 * static_cast<long>(std::ceil(max_arg)) + 64);
  SymmetricSplineLattice lattice(order, grid.start + static_cast<double>(lat_lo) * grid.step,
                                 grid.step, static_cast<std::size_t>(lat_hi - lat_lo + 1), K);

  for (std::size_t i = 0; i < grid.count; ++i) {
    const double x = res.x[i];
    const long kc = std::lround(x);
    long double acc = 0.0L;
    for (long k = kc - H; k <= kc + H; ++k) {
      long u = static_cast<long>(i) - k * stride - lat_lo;
      acc += static_cast<long double>(pval(k)) * static_cast<long double>(lattice[static_cast<std::size_t>(u)]);
    }
    res.reconstruction[i] = static_cast<double>(acc);
    res.target[i] = symmetric_monomial(order, x);
    res.abs_error[i] = std::abs(res.reconstruction[i] - res.target[i]);
  }
  double m = 0.0;
  for (std::size_t i = 0; i < grid.count; ++i) m = std::max(m, res.abs_error[i]);
  res.max_interior_error = m;
  // shift-truncation model c/H plus whatever the lattice tail completion left
  res.tail_bound = 4.0 * std::abs(symmetric_series_coeff_scale(order)) /
                       (gamma_pos(order.alpha() + 1.0) * static_cast<double>(std::max<long>(H, 1))) +
                   lattice.max_tail_bound();
  res.exact = order.is_odd_nonneg();
  return res;
}

ReproductionResult reproduce_linear_ordinary(const Order& order, const Grid1D& grid, long k_min,
                                             long k_max) {
  const double alpha = order.alpha();
  const double shift = (alpha + 1.0) / 2.0;
  const double scale = 1.0 / gamma_pos(alpha + 1.0);
  // coefficients (-1)^k binom(alpha+1, k) shared across spline evaluations
  const long max_terms = static_cast<long>(std::floor(grid.back() - static_cast<double>(k_min))) + 2;
  std::vector<double> bc(static_cast<std::size_t>(std::max<long>(max_terms, 1)));
  {
    long double c = 1.0L;
    for (long k = 0; k < max_terms; ++k) {
      if (k > 0) c *= -(static_cast<long double>(alpha + 1.0) - (k - 1)) / static_cast<long double>(k);
      bc[static_cast<std::size_t>(k)] = static_cast<double>(c);
    }
  }
  auto spline_at = [&](double y) {
    if (y < 0.0) return 0.0;
    long km = static_cast<long>(std::floor(y));
    long double acc = 0.0L;
    for (long k = 0; k <= km; ++k)
      acc += static_cast<long double>(bc[static_cast<std::size_t>(k)]) *
             static_cast<long double>(causal_monomial(order, y - static_cast<double>(k)));
    return static_cast<double>(acc);
  };

  ReproductionResult res;
  res.x = grid.points();
  res.window_k_min = k_min;
  res.window_k_max = k_max;
  res.reconstruction.assign(grid.count, 0.0);
  res.target.resize(grid.count);
  res.abs_error.resize(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    double x = res.x[i];
    long hi = std::min(k_max, static_cast<long>(std::floor(x)));
    long double acc = 0.0L;
    for (long k = k_min; k <= hi; ++k)
      acc += static_cast<long double>((static_cast<double>(k) + shift)) *
             static_cast<long double>(spline_at(x - static_cast<double>(k)));
    res.reconstruction[i] = static_cast<double>(acc) * scale;
    res.target[i] = x;
    res.abs_error[i] = std::abs(res.reconstruction[i] - res.target[i]);
  }
  double m = 0.0;
  for (double e : res.abs_error) m = std::max(m, e);
  res.max_interior_error = m;
  res.exact = false;
  return res;
}

std::vector<ConvergenceProbeRow> probe_nonuniform_convergence(const Order& order,
                                                              const std::vector<long>& windows,
                                                              double fixed_x, double domain_step) {
  std::vector<ConvergenceProbeRow> rows;
  rows.reserve(windows.size());
  for (long W : windows) {
    ConvergenceProbeRow row;
    row.window = W;
    row.domain_hi = static_cast<double>(W) / 2.0;
    {
      Grid1D pt(fixed_x, 1.0, 1);
      row.pointwise_error = reproduce_linear_ordinary(order, pt, -W, W).abs_error[0];
    }
    {
      Grid1D dom = Grid1D::from_range(0.0, row.domain_hi, domain_step);
      row.sup_error = reproduce_linear_ordinary(order, dom, -W, W).max_interior_error;
    }
    rows.push_back(row);
  }
  return rows;
}

double partition_of_unity_error(const Order& order, double x, long K) {
  long double acc = 0.0L;
  for (long k = -K; k <= static_cast<long>(std::floor(x)); ++k)
    acc += static_cast<long double>(eval_causal_spline(order, x - static_cast<double>(k)));
  return std::abs(static_cast<double>(acc) / gamma_pos(order.alpha() + 1.0) - 1.0);
}

std::vector<double> apply_sequence_to_samples(const std::vector<double>& coeffs, long k_min,
                                              const std::vector<double>& in, long stride,
                                              long offset, std::size_t out_count) {
  std::vector<double> out(out_count, 0.0);
  for (std::size_t i = 0; i < out_count; ++i) {
    long double acc = 0.0L;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      long u = static_cast<long>(i) + offset - (k_min + static_cast<long>(j)) * stride;
      acc += static_cast<long double>(coeffs[j]) * static_cast<long double>(in[static_cast<std::size_t>(u)]);
    }
    out[i] = static_cast<double>(acc);
  }
  return out;
}

ReproductionResult reproduce_even_symmetric_factorized(const Order& order,
                                                       std::pair<double, double> split,
                                                       const Grid1D& grid, long half_width) {
  if (!order.is_even_nonneg())
    throw PreconditionViolated("factorized path applies to even nonnegative integer orders");
  const double b1 = split.first, b2 = split.second;
  if (std::abs(b1 + b2 + order.alpha() + 1.0) > 1e-12)
    throw InvalidSplit("split orders must sum to -(alpha+1)");
  for (double b : {b1, b2}) {
    if (b == std::rint(b) && b < 0.0 && static_cast<long>(std::llrint(b)) % 2 != 0)
      throw InvalidSplit("split order " + std::to_string(b) + " is an odd negative integer");
  }
  const long H = half_width;
  const long stride = lattice_stride(grid.step);
  const long n = static_cast<long>(grid.count);

  // inner result on the grid extended by the outer reach, spline samples on
  // the lattice extended once more
  const long mid_lo = -H * stride, mid_hi = (n - 1) + H * stride;
  const long lat_lo = mid_lo - H * stride, lat_hi = mid_hi + H * stride;
  const double max_arg = std::max(std::abs(grid.start + static_cast<double>(lat_lo) * grid.step),
                                  std::abs(grid.start + static_cast<double>(lat_hi) * grid.step));
  const long K = std::max<long>(512, 4 * static_cast<long>(std::ceil(max_arg)) + 64);
  SymmetricSplineLattice lattice(order, grid.start + static_cast<double>(lat_lo) * grid.step,
                                 grid.step, static_cast<std::size_t>(lat_hi - lat_lo + 1), K);

  std::vector<double> c1 = symmetric_difference_coeffs(b1, H);
  std::vector<double> c2 = symmetric_difference_coeffs(b2, H);

  // paired (k, -k) summation: these series converge conditionally
  auto paired_apply = [&](const std::vector<double>& c, const std::vector<double>& in, long in_lo,
                          long out_lo, long out_hi) {
    std::vector<double> out(static_cast<std::size_t>(out_hi - out_lo + 1), 0.0);
    for (long i = out_lo; i <= out_hi; ++i) {
      long double acc = static_cast<long double>(c[static_cast<std::size_t>(H)]) *
                        static_cast<long double>(in[static_cast<std::size_t>(i - in_lo)]);
      for (long k = 1; k <= H; ++k) {
        long double left = static_cast<long double>(c[static_cast<std::size_t>(H + k)]) *
                           static_cast<long double>(in[static_cast<std::size_t>(i - k * stride - in_lo)]);
        long double right = static_cast<long double>(c[static_cast<std::size_t>(H - k)]) *
                            static_cast<long double>(in[static_cast<std::size_t>(i + k * stride - in_lo)]);
        acc += left + right;
      }
      out[static_cast<std::size_t>(i - out_lo)] = static_cast<double>(acc);
    }
    return out;
  };

  std::vector<double> inner = paired_apply(c2, lattice.values(), lat_lo, mid_lo, mid_hi);
  std::vector<double> outer = paired_apply(c1, inner, mid_lo, 0, n - 1);

  ReproductionResult res;
  res.x = grid.points();
  res.window_k_min = -H;
  res.window_k_max = H;
  res.reconstruction = std::move(outer);
  res.target.resize(grid.count);
  res.abs_error.resize(grid.count);
  double m = 0.0;
  for (std::size_t i = 0; i < grid.count; ++i) {
    res.target[i] = symmetric_monomial(order, res.x[i]);
    res.abs_error[i] = std::abs(res.reconstruction[i] - res.target[i]);
    m = std::max(m, res.abs_error[i]);
  }
  res.max_interior_error = m;
  res.exact = false;
  // documented slow convergence of the double series
  res.tail_bound = 1.0 / std::sqrt(static_cast<double>(std::max<long>(H, 1)));
  return res;
}

double eval_2d_spline(SplineKind kind, const Order& o1, const Order& o2, double x, double y,
                      const TruncationPolicy& trunc) {
  if (kind == SplineKind::Causal) return eval_causal_spline(o1, x) * eval_causal_spline(o2, y);
  return eval_symmetric_spline(o1, x, trunc).value * eval_symmetric_spline(o2, y, trunc).value;
}

Reproduction2DResult reproduce_2d(SplineKind kind, const Order& o1, const Order& o2,
                                  const Grid2D& grid, long half_width) {
  ReproductionResult rx, ry;
  if (kind == SplineKind::Causal) {
    rx = reproduce_causal(o1, grid.x);
    ry = reproduce_causal(o2, grid.y);
  } else {
    rx = reproduce_symmetric(o1, grid.x, half_width);
    ry = reproduce_symmetric(o2, grid.y, half_width);
  }
  Reproduction2DResult res;
  res.x = rx.x;
  res.y = ry.x;
  const std::size_t nx = res.x.size(), ny = res.y.size();
  res.target.resize(nx * ny);
  res.reconstruction.resize(nx * ny);
  res.abs_error.resize(nx * ny);
  double m = 0.0;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      std::size_t idx = i * ny + j;
      res.reconstruction[idx] = rx.reconstruction[i] * ry.reconstruction[j];
      res.target[idx] = rx.target[i] * ry.target[j];
      res.abs_error[idx] = std::abs(res.reconstruction[idx] - res.target[idx]);
      m = std::max(m, res.abs_error[idx]);
    }
  res.max_interior_error = m;
  res.exact = rx.exact && ry.exact;
  res.tail_bound = rx.tail_bound + ry.tail_bound;
  return res;
}

Quadrant2DResult reproduce_2d_quadrant(const Order& o1, const Order& o2, const Grid2D& grid,
                                       QuadrantSignMode mode, long half_width) {
  const long H = half_width;
  struct AxisSums {
    std::vector<double> plus, minus, zero;
  };
  auto axis_sums = [H](const Order& order, const Grid1D& g) {
    CoefficientSequence p = symmetric_reproduction_sequence(order);
    std::vector<double> pv = p.window(-H, H);
    const long stride = lattice_stride(g.step);
    const long n = static_cast<long>(g.count);
    const long lat_lo = -H * stride, lat_hi = (n - 1) + H * stride;
    const double max_arg = std::max(std::abs(g.start + static_cast<double>(lat_lo) * g.step),
                                    std::abs(g.start + static_cast<double>(lat_hi) * g.step));
    const long K = std::max<long>(512, 4 * static_cast<long>(std::ceil(max_arg)) + 64);
    SymmetricSplineLattice lattice(order, g.start + static_cast<double>(lat_lo) * g.step, g.step,
                                   static_cast<std::size_t>(lat_hi - lat_lo + 1), K);
    AxisSums s;
    s.plus.assign(g.count, 0.0);
    s.minus.assign(g.count, 0.0);
    s.zero.assign(g.count, 0.0);
    for (long i = 0; i < n; ++i) {
      long double accp = 0.0L, accm = 0.0L;
      for (long k = 0; k <= H; ++k) {
        double pk = pv[static_cast<std::size_t>(k + H)];
        accp += static_cast<long double>(pk) *
                static_cast<long double>(lattice[static_cast<std::size_t>(i - k * stride - lat_lo)]);
        double pmk = pv[static_cast<std::size_t>(-k + H)];
        accm += static_cast<long double>(pmk) *
                static_cast<long double>(lattice[static_cast<std::size_t>(i + k * stride - lat_lo)]);
      }
      s.plus[static_cast<std::size_t>(i)] = static_cast<double>(accp);
      s.minus[static_cast<std::size_t>(i)] = static_cast<double>(accm);
      s.zero[static_cast<std::size_t>(i)] =
          pv[static_cast<std::size_t>(H)] *
          lattice[static_cast<std::size_t>(i - lat_lo)];
    }
    return s;
  };

  AxisSums sx = axis_sums(o1, grid.x);
  AxisSums sy = axis_sums(o2, grid.y);

  Quadrant2DResult res;
  res.x = grid.x.points();
  res.y = grid.y.points();
  const std::size_t nx = res.x.size(), ny = res.y.size();
  res.reconstruction.resize(nx * ny);
  double mass_same = 0.0, mass_opp = 0.0, mass_total = 0.0;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      double v;
      switch (mode) {
        case QuadrantSignMode::Same:
          v = sx.plus[i] * sy.plus[j] + sx.minus[i] * sy.minus[j] - sx.zero[i] * sy.zero[j];
          break;
        case QuadrantSignMode::Opposite:
          v = sx.plus[i] * sy.minus[j] + sx.minus[i] * sy.plus[j] - sx.zero[i] * sy.zero[j];
          break;
        default: {
          double fx = sx.plus[i] + sx.minus[i] - sx.zero[i];
          double fy = sy.plus[j] + sy.minus[j] - sy.zero[j];
          v = fx * fy;
        }
      }
      res.reconstruction[i * ny + j] = v;
      double prod = res.x[i] * res.y[j];
      mass_total += std::abs(v);
      if (prod > 0.0)
        mass_same += std::abs(v);
      else if (prod < 0.0)
        mass_opp += std::abs(v);
    }
  if (mass_total > 0.0) {
    res.mass_fraction_same_pair = mass_same / mass_total;
    res.mass_fraction_opposite_pair = mass_opp / mass_total;
  }
  return res;
}

}  // namespace fracspline
