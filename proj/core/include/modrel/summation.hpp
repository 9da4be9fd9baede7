#pragma once

#include <cmath>

#include "modrel/types.hpp"

namespace modrel {

// Neumaier-compensated accumulator; deterministic for a fixed add order.
struct NeumaierSum {
  double s = 0.0;
  double c = 0.0;

  void add(double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }
  double get() const { return s + c; }
};

struct NeumaierSumComplex {
  NeumaierSum re;
  NeumaierSum im;

  void add(cplx z) {
    re.add(z.real());
    im.add(z.imag());
  }
  cplx get() const { return {re.get(), im.get()}; }
};

}  // namespace modrel
