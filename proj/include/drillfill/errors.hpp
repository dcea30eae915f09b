#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace drillfill {

// A stated hypothesis of one of the bound formulas failed (R outside (0,1),
// ell <= 2*pi, ...). Carries the violated condition so callers can name it.
class HypothesisError : public std::invalid_argument {
 public:
  HypothesisError(std::string condition, const std::string& detail)
      : std::invalid_argument(detail), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

// Adaptive quadrature exhausted its panel budget. The partial estimate and
// the accumulated error bound are kept so the caller can decide what to do.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double partial, double error_bound)
      : std::runtime_error(what), partial_(partial), error_bound_(error_bound) {}

  double partial() const noexcept { return partial_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double partial_;
  double error_bound_;
};

}  // namespace drillfill
