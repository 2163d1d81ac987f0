#ifndef FRACSPLINE_ERRORS_HPP
#define FRACSPLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracspline {

// Gamma evaluated at a non-positive integer.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& msg) : std::domain_error(msg) {}
};

class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Leading coefficient of a triangular system is (numerically) zero.
class SingularSystem : public std::runtime_error {
 public:
  explicit SingularSystem(const std::string& msg) : std::runtime_error(msg) {}
};

// The closed-form coefficient sequence degenerates for this order.
class ClosedFormUnavailable : public std::runtime_error {
 public:
  explicit ClosedFormUnavailable(const std::string& msg) : std::runtime_error(msg) {}
};

class InfiniteCoefficient : public std::runtime_error {
 public:
  explicit InfiniteCoefficient(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidSplit : public std::invalid_argument {
 public:
  explicit InvalidSplit(const std::string& msg) : std::invalid_argument(msg) {}
};

class PreconditionViolated : public std::invalid_argument {
 public:
  explicit PreconditionViolated(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace fracspline

#endif
