#pragma once

#include <functional>

#include "modrel/types.hpp"

namespace modrel::quad {

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::int64_t nodes_used = 0;
  std::int64_t intervals = 0;
};

// Truncation envelope for semi-infinite integrands: either ~ C e^{-rate x}
// or ~ C x^{-rate}.
struct DecayHint {
  enum class Kind { Exponential, Algebraic };
  Kind kind = Kind::Exponential;
  double rate = 1.0;

  static DecayHint exponential(double r) { return {Kind::Exponential, r}; }
  static DecayHint algebraic(double p) { return {Kind::Algebraic, p}; }
};

// envelope(x) * cos(angular_frequency * x) integrated over [start, inf).
struct OscillatorySpec {
  std::function<double(double)> envelope;
  double angular_frequency = 0.0;
  double start = 0.0;
};

// Adaptive Gauss-Kronrod 7/15 on a finite interval.  Integrable endpoint
// singularities are handled by refinement (nodes stay interior).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tol);

// Dyadic panels [2^k, 2^{k+1}] with an envelope-driven stop; works for both
// exponential kernels and algebraic (1/x^p, p > 1) tails.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double tol, DecayHint hint);

// Head panel plus half-period panels between cosine zeros, accelerated by
// iterated averaging; converges for envelopes decaying as slowly as 1/x.
QuadratureResult integrate_oscillatory_cos(const OscillatorySpec& spec,
                                           double tol);

// int_0^inf xi_weight(t) cos(frequency*t) dt, fixed-panel Gauss-Kronrod up
// to t = 60 where the weight is below 1e-40.
Approximation xi_cosine_integral(double frequency, const EvalConfig& cfg = {});

// -pi^{-3/2} * xi_cosine_integral(|log(alpha)|/2); invariant under
// alpha <-> 1/alpha by construction.
Approximation xi_integral(double alpha, const EvalConfig& cfg = {});

// int_0^inf (1/(e^{x e^n}-1) - 1/(x e^n)) (1/(e^{x e^-n}-1) - 1/(x e^-n)) dx,
// even in n; the 1/x^2 tail beyond the truncation point is added in closed
// form.
Approximation ramanujan_x_integral(double n, const EvalConfig& cfg = {});

// F(a,t) = int_0^inf {(1/(e^u-1) - 1/u + 1/2) e^{-tu}/u
//                     + (e^{-ua} - e^{-tu})/(2u)} du   (a > 0, t > 0),
// which equals log Gamma(t) - (t-1/2) log t + t - log(2 pi)/2 + log(t/a)/2.
double binet_F(double a, double t);

}  // namespace modrel::quad
