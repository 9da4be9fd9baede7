#pragma once

#include <cstdint>

#include "modrel/types.hpp"

namespace modrel::series {

// Modular parameter pair: beta is stored as 1/alpha so alpha*beta = 1 to
// the last ulp.
struct ModulusPair {
  double alpha;
  double beta;

  explicit ModulusPair(double a);
};

// Default truncation index for sum_phi: max(50, ceil(40/alpha)) keeps the
// first dropped tail term below 1e-13 after the three-term tail correction.
std::int64_t default_series_cutoff(double alpha);

// sum_{n>N} n^{-s} by Euler-Maclaurin (s > 1).
double em_zeta_tail(double s, std::int64_t N);

// sum_{n>=1} phi(n*alpha): direct sum to the cutoff plus an asymptotic tail
// built from TailCoefficients and em_zeta_tail.
Approximation sum_phi(double alpha, const EvalConfig& cfg = {});

// L(alpha) = sqrt(alpha) { (gamma - log(2 pi alpha))/(2 alpha)
//                          + sum_{n>=1} phi(n alpha) }.
Approximation left_side(double alpha, const EvalConfig& cfg = {});

// S(z) = sum_{n>=1} (psi(nz) - log nz + 1/(2nz)) + (gamma - log 2 pi z)/(2z)
// for |arg z| <= pi/2 - 0.05; satisfies S(z) = (1/z) S(1/z).
Approximation guinand_side(cplx z, const EvalConfig& cfg = {});

// The summation-formula pair: f(x) = psi(xz+1) - log(xz) and its cosine
// transform g(x) = (1/z)(psi(x/z+1) - log(x/z)).
enum class DefectSide { Function, Transform };

// sum_{n<=N} h(n) - int_0^N h(t) dt for h = f or g; the integral is the
// closed-form antiderivative (1/z) log Gamma(Nz+1) - N log(Nz) + N,
// evaluated through log-gamma so large Nz cannot overflow.
double poisson_defect(double z, std::int64_t N, DefectSide side);

// lim_N poisson_defect, by endpoint-corrected sampling at N, 2N, 4N, ...
// and Richardson extrapolation.
Approximation poisson_defect_limit(double z, DefectSide side,
                                   const EvalConfig& cfg = {});

// lim_N ( sum_{n<=N} 1/(2nz) - int_0^N (psi(tz+1) - log tz) dt )
//   = (gamma - log 2 pi z) / (2z), same extrapolation scheme.
Approximation defect_limit(double z, const EvalConfig& cfg = {});

// | sum_{n>=1} 1/(t^2 + 4 n^2 pi^2)
//   - (1/(2t)) (1/(e^t - 1) - 1/t + 1/2) |,  t != 0.
double cot_identity_gap(double t);

// sum_{n<=N} (phi(n alpha) - gamma); diverges like -gamma N, kept as the
// negative test for the uncorrected variant of phi.
double divergent_variant_partial(double alpha, std::int64_t N);

}  // namespace modrel::series
