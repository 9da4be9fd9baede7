#pragma once

#include "modrel/types.hpp"

namespace modrel::specfun {

// Scalar special-function kernels.  All functions are pure; the complex
// overloads accept |arg z| <= 3*pi/4 with the non-positive real axis
// excluded, and evaluate by recurrence shifts into Re z >= 10 followed by
// the Bernoulli asymptotic series.

// psi(z) = Gamma'(z)/Gamma(z); absolute error <= 1e-13 for |z| >= 1e-3.
cplx digamma(cplx z);
double digamma(double x);

// psi'(z) = sum_{n>=0} 1/(z+n)^2.
cplx trigamma(cplx z);
double trigamma(double x);

// Principal log Gamma, continuous along the recurrence path and real on the
// positive real axis.
cplx log_gamma(cplx z);
double log_gamma(double x);

// phi(x) = psi(x) + 1/(2x) - log x.  Strictly negative for x > 0; evaluated
// from the asymptotic tail coefficients for x >= 10 to dodge the three-way
// cancellation.
double phi(double x);
cplx phi(cplx z);

// psi(1+x) - log x, the self-reciprocal function of the cosine transform.
// Rewritten through phi(1+x) so the log cancellation never surfaces.
double self_reciprocal(double x);

// zeta(1/2 + it) for |t| <= 100, via the Chebyshev-accelerated alternating
// eta series.
cplx zeta_critical(double t);

// xi(1/2 + it/2) as a complex composition; imaginary part is a rounding
// residual on the critical line.
cplx xi_composition(double t);

// Xi(t/2) = xi(1/2 + it/2), real and even in t; |t| <= 120.
double xi_on_line(double t);

// |Xi(t/2) Gamma((-1+it)/4)|^2 / (1+t^2), the nonnegative even weight of the
// cosine-transform integral.
double xi_weight(double t);

}  // namespace modrel::specfun
