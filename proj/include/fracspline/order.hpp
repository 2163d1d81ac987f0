#ifndef FRACSPLINE_ORDER_HPP
#define FRACSPLINE_ORDER_HPP

#include <cmath>

#include "fracspline/errors.hpp"

namespace fracspline {

// Spline/monomial order alpha, restricted to alpha > -1.
class Order {
 public:
  explicit Order(double alpha) : alpha_(alpha) {
    if (!(alpha > -1.0))
      throw DomainError("order must satisfy alpha > -1, got " + std::to_string(alpha));
  }

  double alpha() const { return alpha_; }

  bool is_integer() const { return alpha_ == std::rint(alpha_); }

  bool is_even_nonneg() const {
    if (!is_integer() || alpha_ < 0.0) return false;
    return std::fmod(alpha_, 2.0) == 0.0;
  }

  bool is_odd_nonneg() const { return is_integer() && alpha_ >= 0.0 && !is_even_nonneg(); }

  // smallest integer >= alpha
  int ceil_order() const { return static_cast<int>(std::ceil(alpha_)); }

 private:
  double alpha_;
};

}  // namespace fracspline

#endif
