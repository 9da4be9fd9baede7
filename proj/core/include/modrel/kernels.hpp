#pragma once

#include <cmath>

namespace modrel {

// 1/(e^x - 1) - 1/x.  The two poles at 0 cancel; below |x| = 1/8 the direct
// form loses ~3 digits, so a Bernoulli series (x/12 - x^3/720 + ...) is used.
inline double exp_kernel(double x) {
  if (std::abs(x) < 0.125) {
    const double x2 = x * x;
    const double q =
        x * (1.0 / 12.0 +
             x2 * (-1.0 / 720.0 +
                   x2 * (1.0 / 30240.0 +
                         x2 * (-1.0 / 1209600.0 + x2 * (1.0 / 47900160.0)))));
    return q - 0.5;
  }
  return 1.0 / std::expm1(x) - 1.0 / x;
}

// exp_kernel + 1/2; vanishes at 0 and tends to 1/2 at +infinity.
inline double exp_kernel_half(double x) {
  if (std::abs(x) < 0.125) {
    const double x2 = x * x;
    return x * (1.0 / 12.0 +
                x2 * (-1.0 / 720.0 +
                      x2 * (1.0 / 30240.0 +
                            x2 * (-1.0 / 1209600.0 + x2 * (1.0 / 47900160.0)))));
  }
  return 1.0 / std::expm1(x) - 1.0 / x + 0.5;
}

}  // namespace modrel
