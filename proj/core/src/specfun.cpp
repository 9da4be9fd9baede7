#include "modrel/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "modrel/constants.hpp"
#include "modrel/errors.hpp"

namespace modrel::specfun {

namespace {

// B_{2k} for the trigamma expansion 1/z + 1/(2z^2) + sum B_{2k} z^{-2k-1}.
constexpr double kBernoulli[6] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0,
};

// B_{2k}/((2k)(2k-1)) for the Stirling correction sum b_k z^{-(2k-1)}.
constexpr double kBinet[6] = {
    1.0 / 12.0,   -1.0 / 360.0, 1.0 / 1260.0,
    -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360360.0,
};

constexpr double kSectorMax = 0.75 * Constants::pi;

void require_sector(cplx z, const char* who) {
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    throw std::domain_error(std::string(who) +
                            ": non-positive real argument");
  }
  const double theta = std::atan2(std::abs(z.imag()), z.real());
  if (theta > kSectorMax * (1.0 + 8.0 * 2.220446049250313e-16)) {
    throw std::domain_error(std::string(who) + ": |arg z| exceeds 3*pi/4");
  }
}

// psi(z) for Re z >= 10: log z - 1/(2z) + sum c_k z^{-2k}.
cplx digamma_asymptotic(cplx z) {
  const cplx w = 1.0 / z;
  const cplx w2 = w * w;
  cplx r = std::log(z) - 0.5 * w;
  cplx p = w2;
  for (double c : TailCoefficients::values) {
    r += c * p;
    p *= w2;
  }
  return r;
}

double digamma_asymptotic(double x) {
  const double w = 1.0 / x;
  const double w2 = w * w;
  double r = std::log(x) - 0.5 * w;
  double p = w2;
  for (double c : TailCoefficients::values) {
    r += c * p;
    p *= w2;
  }
  return r;
}

}  // namespace

cplx digamma(cplx z) {
  require_sector(z, "digamma");
  cplx shift{0.0, 0.0};
  while (z.real() < 10.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  return digamma_asymptotic(z) - shift;
}

double digamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("digamma: non-positive real argument");
  }
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  return digamma_asymptotic(x) - shift;
}

cplx trigamma(cplx z) {
  require_sector(z, "trigamma");
  cplx shift{0.0, 0.0};
  while (z.real() < 10.0) {
    shift += 1.0 / (z * z);
    z += 1.0;
  }
  const cplx w = 1.0 / z;
  const cplx w2 = w * w;
  cplx r = w + 0.5 * w2;
  cplx p = w * w2;
  for (double b : kBernoulli) {
    r += b * p;
    p *= w2;
  }
  return r + shift;
}

double trigamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("trigamma: non-positive real argument");
  }
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  const double w = 1.0 / x;
  const double w2 = w * w;
  double r = w + 0.5 * w2;
  double p = w * w2;
  for (double b : kBernoulli) {
    r += b * p;
    p *= w2;
  }
  return r + shift;
}

cplx log_gamma(cplx z) {
  require_sector(z, "log_gamma");
  // Continuity off the real axis comes from subtracting principal logs
  // along the shift path.
  cplx shift{0.0, 0.0};
  while (z.real() < 10.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const cplx w = 1.0 / z;
  const cplx w2 = w * w;
  cplx r = (z - 0.5) * std::log(z) - z + 0.5 * Constants::log_two_pi;
  cplx p = w;
  for (double b : kBinet) {
    r += b * p;
    p *= w2;
  }
  return r - shift;
}

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: non-positive real argument");
  }
  double shift = 0.0;
  while (x < 10.0) {
    shift += std::log(x);
    x += 1.0;
  }
  const double w = 1.0 / x;
  const double w2 = w * w;
  double r = (x - 0.5) * std::log(x) - x + 0.5 * Constants::log_two_pi;
  double p = w;
  for (double b : kBinet) {
    r += b * p;
    p *= w2;
  }
  return r - shift;
}

double phi(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("phi: requires x > 0");
  }
  if (x >= 10.0) {
    // psi + 1/(2x) - log x cancels to O(x^-2); sum the tail series instead.
    const double y = 1.0 / (x * x);
    const auto& c = TailCoefficients::values;
    double r = c[5];
    for (int k = 4; k >= 0; --k) {
      r = c[k] + y * r;
    }
    return y * r;
  }
  return digamma(x) + 0.5 / x - std::log(x);
}

cplx phi(cplx z) {
  require_sector(z, "phi");
  if (std::abs(z) >= 10.0 && z.real() > 0.0) {
    const cplx y = 1.0 / (z * z);
    const auto& c = TailCoefficients::values;
    cplx r = c[5];
    for (int k = 4; k >= 0; --k) {
      r = c[k] + y * r;
    }
    return y * r;
  }
  return digamma(z) + 0.5 / z - std::log(z);
}

double self_reciprocal(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("self_reciprocal: requires x > 0");
  }
  // psi(1+x) - log x = log1p(1/x) - 1/(2(1+x)) + phi(1+x)
  return std::log1p(1.0 / x) - 0.5 / (1.0 + x) + phi(1.0 + x);
}

cplx zeta_critical(double t) {
  if (!(std::abs(t) <= 100.0)) {
    throw std::domain_error("zeta_critical: requires |t| <= 100");
  }
  const cplx s{0.5, t};
  // Chebyshev-weighted alternating eta series (Cohen-Rodriguez Villegas-
  // Zagier, Exp. Math. 9).  The error constant grows like e^{pi|t|/2}, so
  // the term count budgets 15 digits plus that inflation.
  const double need = 15.0 * 2.302585092994046 +
                      0.5 * Constants::pi * std::abs(t);
  const int n = static_cast<int>(std::ceil(need / 1.7627471740390861)) + 5;

  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  cplx acc{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    c = b - c;
    acc += c * std::exp(-s * std::log(static_cast<double>(k + 1)));
    b = (k + static_cast<double>(n)) * (k - static_cast<double>(n)) * b /
        ((k + 0.5) * (k + 1.0));
  }
  const cplx eta = acc / d;
  const cplx denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  return eta / denom;
}

cplx xi_composition(double t) {
  if (!(std::abs(t) <= 120.0)) {
    throw std::domain_error("xi_on_line: requires |t| <= 120");
  }
  const cplx s{0.5, 0.5 * t};
  const double log_pi = std::log(Constants::pi);
  return (s - 1.0) * std::exp(-0.5 * s * log_pi + log_gamma(1.0 + 0.5 * s)) *
         zeta_critical(0.5 * t);
}

double xi_on_line(double t) {
  const cplx v = xi_composition(t);
  if (!(std::abs(v.imag()) < 1e-10)) {
    throw NumericsError("xi_on_line: composition drifted off the real line");
  }
  return v.real();
}

double xi_weight(double t) {
  const double xi_val = xi_on_line(t);
  // |Gamma((-1+it)/4)|^2 = 16 |Gamma((3+it)/4)|^2 / (1+t^2), which keeps the
  // gamma evaluation inside the supported sector for every t.
  const double lg_re = log_gamma(cplx{0.75, 0.25 * t}).real();
  const double one_t2 = 1.0 + t * t;
  return xi_val * xi_val * 16.0 * std::exp(2.0 * lg_re) / (one_t2 * one_t2);
}

}  // namespace modrel::specfun
