#pragma once

#include <array>

namespace modrel {

// Shared constants, stored as 20-digit literals so nothing is derived at
// runtime.  euler_gamma is cross-checked against quadrature in the tests.
struct Constants {
  static constexpr double pi = 3.14159265358979323846;
  static constexpr double euler_gamma = 0.57721566490153286061;
  static constexpr double log_two_pi = 1.83787706640934548356;
};

// Coefficients of z^-2, z^-4, ... in  psi(z) - log z + 1/(2z).
// The pattern is -B_{2k}/(2k); six terms carry the expansion through z^-12.
struct TailCoefficients {
  static constexpr std::array<double, 6> values = {
      -1.0 / 12.0,  1.0 / 120.0,  -1.0 / 252.0,
      1.0 / 240.0,  -1.0 / 132.0, 691.0 / 32760.0,
  };
};

}  // namespace modrel
