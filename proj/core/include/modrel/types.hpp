#pragma once

#include <complex>
#include <cstdint>
#include <optional>

namespace modrel {

using cplx = std::complex<double>;

// Universal return type of the numerical operations: a value, an error
// estimate, and work counters.
struct Approximation {
  cplx value{0.0, 0.0};
  double err_estimate = 0.0;
  std::int64_t terms_used = 0;
  std::int64_t nodes_used = 0;
  double seconds = 0.0;

  double real() const { return value.real(); }
  bool is_real() const { return value.imag() == 0.0; }
};

// Evaluation knobs: tolerances, truncation indices, extrapolation depth.
// series_cutoff left unset means "pick per alpha" (max(50, ceil(40/alpha))).
struct EvalConfig {
  double abs_tol = 1e-12;
  std::optional<int> series_cutoff{};
  int tail_order = 3;
  int defect_max_N = 8000;
  int extrapolation_order = 3;

  void validate() const;  // throws std::domain_error on bad settings
};

}  // namespace modrel
