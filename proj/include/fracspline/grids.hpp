#ifndef FRACSPLINE_GRIDS_HPP
#define FRACSPLINE_GRIDS_HPP

#include <cstddef>
#include <vector>

#include "fracspline/errors.hpp"

namespace fracspline {

// Uniform sampling grid start + i*step, i = 0..count-1.
struct Grid1D {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 1;

  Grid1D() = default;
  Grid1D(double start_, double step_, std::size_t count_) : start(start_), step(step_), count(count_) {
    if (!(step > 0.0)) throw DomainError("Grid1D: step must be > 0");
    if (count < 1) throw DomainError("Grid1D: count must be >= 1");
  }

  static Grid1D from_range(double x0, double x1, double step) {
    if (!(step > 0.0)) throw DomainError("Grid1D: step must be > 0");
    if (!(x1 >= x0)) throw DomainError("Grid1D: x1 must be >= x0");
    auto n = static_cast<std::size_t>((x1 - x0) / step + 0.5) + 1;
    return Grid1D(x0, step, n);
  }

  double point(std::size_t i) const { return start + static_cast<double>(i) * step; }
  double back() const { return point(count - 1); }

  std::vector<double> points() const {
    std::vector<double> xs(count);
    for (std::size_t i = 0; i < count; ++i) xs[i] = point(i);
    return xs;
  }
};

struct Grid2D {
  Grid1D x;
  Grid1D y;
};

// Cap and tolerance for truncating the infinite series.
struct TruncationPolicy {
  std::size_t max_terms = 1u << 20;
  double tail_tolerance = 1e-10;

  TruncationPolicy() = default;
  TruncationPolicy(std::size_t max_terms_, double tail_tolerance_)
      : max_terms(max_terms_), tail_tolerance(tail_tolerance_) {
    if (max_terms < 1) throw DomainError("TruncationPolicy: max_terms must be >= 1");
    if (!(tail_tolerance > 0.0)) throw DomainError("TruncationPolicy: tail_tolerance must be > 0");
  }
};

}  // namespace fracspline

#endif
