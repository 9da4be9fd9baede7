// Test-side oracles: brute-force and independently-derived reference
// computations.  Nothing here reuses the library's summation/quadrature
// engines beyond the scalar kernels under test.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "modrel/constants.hpp"
#include "modrel/specfun.hpp"
#include "modrel/summation.hpp"

namespace oracles {

using modrel::Constants;
using modrel::NeumaierSum;
using cplx = std::complex<double>;

// psi(x) from the series definition -gamma - sum_k (1/(k+x) - 1/(k+1)),
// partial sums plus an integral-comparison tail.
inline double digamma_series(double x, long terms = 1000000) {
  NeumaierSum s;
  for (long k = 0; k < terms; ++k) {
    const double kk = static_cast<double>(k);
    s.add((1.0 - x) / ((kk + x) * (kk + 1.0)));
  }
  const double K = static_cast<double>(terms);
  const double tail_int = -std::log((K + x) / (K + 1.0));
  const double half_term = 0.5 * (1.0 - x) / ((K + x) * (K + 1.0));
  return -Constants::euler_gamma - (s.get() + tail_int + half_term);
}

// psi'(x) = sum 1/(x+n)^2, partial sums plus the integral tail.
inline double trigamma_series(double x, long terms = 1000000) {
  NeumaierSum s;
  for (long n = 0; n < terms; ++n) {
    const double d = x + static_cast<double>(n);
    s.add(1.0 / (d * d));
  }
  const double a = x + static_cast<double>(terms);
  return s.get() + 1.0 / a + 0.5 / (a * a) + 1.0 / (6.0 * a * a * a);
}

// eta(s) by Euler transformation: iterated averaging of the partial sums of
// the alternating series.
inline cplx eta_euler(cplx s, int terms = 1000) {
  std::vector<cplx> partial(static_cast<std::size_t>(terms));
  cplx acc = 0.0;
  for (int n = 1; n <= terms; ++n) {
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    acc += sign * std::exp(-s * std::log(static_cast<double>(n)));
    partial[static_cast<std::size_t>(n - 1)] = acc;
  }
  while (partial.size() > 1) {
    for (std::size_t i = 0; i + 1 < partial.size(); ++i) {
      partial[i] = 0.5 * (partial[i] + partial[i + 1]);
    }
    partial.pop_back();
  }
  return partial[0];
}

inline cplx zeta_euler(double t, int terms = 1000) {
  const cplx s{0.5, t};
  return eta_euler(s, terms) / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

// zeta(s) by direct Euler-Maclaurin: partial sum to M plus endpoint and
// Bernoulli corrections.  Independent of the accelerated eta route.
inline cplx zeta_em(cplx s) {
  const int M = 60 + static_cast<int>(2.0 * std::abs(s.imag()));
  cplx acc = 0.0;
  for (int n = 1; n < M; ++n) {
    acc += std::exp(-s * std::log(static_cast<double>(n)));
  }
  const double Md = static_cast<double>(M);
  const cplx Ms = std::exp(-s * std::log(Md));
  acc += 0.5 * Ms + Md * Ms / (s - 1.0);
  static const double b2k[] = {1.0 / 6.0,  -1.0 / 30.0,     1.0 / 42.0,
                               -1.0 / 30.0, 5.0 / 66.0,     -691.0 / 2730.0,
                               7.0 / 6.0,  -3617.0 / 510.0};
  double fact = 1.0;
  for (int k = 1; k <= 8; ++k) {
    cplx poch = 1.0;
    for (int j = 0; j <= 2 * k - 2; ++j) {
      poch *= s + static_cast<double>(j);
    }
    fact *= (2.0 * k) * (2.0 * k - 1.0);
    acc += b2k[k - 1] / fact * poch *
           std::exp(-(s + cplx(2.0 * k - 1.0, 0.0)) * std::log(Md));
  }
  return acc;
}

// Brute sum of phi(n alpha) to `terms` plus the leading -1/(12 n^2) tail.
inline double brute_phi_sum(double alpha, long terms = 10000000) {
  NeumaierSum s;
  for (long n = 1; n <= terms; ++n) {
    s.add(modrel::specfun::phi(static_cast<double>(n) * alpha));
  }
  return s.get() - 1.0 / (12.0 * alpha * alpha * static_cast<double>(terms));
}

// Brute half-period panel summation of int_0^inf cos x/(1+x^2) dx:
// composite Simpson per panel, then the mean of the last two partial sums.
inline double brute_cos_over_one_plus_x2(int panels = 10000) {
  auto g = [](double x) { return std::cos(x) / (1.0 + x * x); };
  NeumaierSum sum;
  double prev_partial = 0.0;
  double a = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double b = (0.5 + static_cast<double>(k)) * Constants::pi;
    const int m = (a < 20.0) ? 1024 : 128;
    const double h = (b - a) / m;
    double acc = g(a) + g(b);
    for (int i = 1; i < m; ++i) {
      acc += g(a + i * h) * ((i % 2) ? 4.0 : 2.0);
    }
    prev_partial = sum.get();
    sum.add(acc * h / 3.0);
    a = b;
  }
  return 0.5 * (sum.get() + prev_partial);
}

// First zero of the Xi composition, by bisection of xi_on_line(2u).
inline double bisect_xi_zero(double lo = 14.0, double hi = 14.3) {
  auto f = [](double u) { return modrel::specfun::xi_on_line(2.0 * u); };
  double flo = f(lo);
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (flo * fmid <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

// Deterministic sample of the supported sector, away from the cut.
inline std::vector<cplx> sector_sample(int per_axis = 10) {
  std::vector<cplx> pts;
  pts.reserve(static_cast<std::size_t>(per_axis * per_axis));
  for (int i = 0; i < per_axis; ++i) {
    const double u = static_cast<double>(i) / (per_axis - 1);
    const double r = 0.05 * std::pow(30.0 / 0.05, u);
    for (int j = 0; j < per_axis; ++j) {
      const double v = static_cast<double>(j) / (per_axis - 1);
      const double theta = -2.35 + 4.70 * v;
      pts.emplace_back(r * std::cos(theta), r * std::sin(theta));
    }
  }
  return pts;
}

}  // namespace oracles
