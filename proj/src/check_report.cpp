#include "fracspline/check_report.hpp"

#include <sstream>

namespace fracspline {

std::string CheckReport::to_line() const {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << name << ": residual=" << residual << " tol=" << tolerance
     << (passed ? " PASS" : " FAIL");
  if (!note.empty()) os << " (" << note << ")";
  return os.str();
}

}  // namespace fracspline
