#include "modrel/types.hpp"

#include <cmath>
#include <stdexcept>

namespace modrel {

void EvalConfig::validate() const {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw std::domain_error("EvalConfig: abs_tol must be positive and finite");
  }
  if (series_cutoff && *series_cutoff < 50) {
    throw std::domain_error("EvalConfig: series_cutoff must be >= 50");
  }
  if (tail_order < 1 || tail_order > 3) {
    throw std::domain_error("EvalConfig: tail_order must lie in [1, 3]");
  }
  if (defect_max_N < 1) {
    throw std::domain_error("EvalConfig: defect_max_N must be positive");
  }
  if (extrapolation_order < 1 || extrapolation_order > 6) {
    throw std::domain_error("EvalConfig: extrapolation_order must lie in [1, 6]");
  }
}

}  // namespace modrel
