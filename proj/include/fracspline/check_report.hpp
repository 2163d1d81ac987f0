#ifndef FRACSPLINE_CHECK_REPORT_HPP
#define FRACSPLINE_CHECK_REPORT_HPP

#include <string>

namespace fracspline {

// Outcome of one identity check: residual against a tolerance, plus the
// truncation window and (when meaningful) the location of the worst residual.
struct CheckReport {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double location = 0.0;   // omega or x of the max residual, when applicable
  long window = 0;         // truncation window used (terms or half-width)
  std::string note;

  std::string to_line() const;
};

}  // namespace fracspline

#endif
