#include "modrel/series.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "modrel/constants.hpp"
#include "modrel/errors.hpp"
#include "modrel/kernels.hpp"
#include "modrel/specfun.hpp"
#include "modrel/summation.hpp"

namespace modrel::series {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Stirling correction mu(x) = log Gamma(x) - (x-1/2) log x + x - log(2pi)/2,
// for x >= 10.
double binet_mu(double x) {
  constexpr double kBinet[6] = {
      1.0 / 12.0,   -1.0 / 360.0, 1.0 / 1260.0,
      -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360360.0,
  };
  const double w = 1.0 / x;
  const double w2 = w * w;
  double r = 0.0;
  double p = w;
  for (double b : kBinet) {
    r += b * p;
    p *= w2;
  }
  return r;
}

// log Gamma(x+1) - x log x + x, stable for large x.
double lgamma_norm(double x) {
  if (x >= 10.0) {
    return 0.5 * std::log(x) + 0.5 * Constants::log_two_pi + binet_mu(x);
  }
  return specfun::log_gamma(x + 1.0) - x * std::log(x) + x;
}

// Closed-form integral of the defect integrand:
//   int_0^N (psi(tz+1) - log tz) dt = (1/z)(log Gamma(Nz+1) - Nz log Nz + Nz).
double defect_integral(double z, double n) {
  return lgamma_norm(n * z) / z;
}

// Richardson elimination of N^-1, N^-2, ... from samples at N0*2^j.
// Returns the limit and the magnitude of the last correction.
std::pair<double, double> richardson(std::vector<double> v) {
  double prev = v.back();
  double last = v.back();
  std::size_t m = v.size();
  double pow2 = 1.0;
  for (std::size_t level = 1; level < m; ++level) {
    pow2 *= 2.0;
    for (std::size_t j = 0; j + level < m; ++j) {
      v[j] = (pow2 * v[j + 1] - v[j]) / (pow2 - 1.0);
    }
    prev = last;
    last = v[m - 1 - level];
  }
  return {last, std::abs(last - prev)};
}

void check_defect_cfg(const EvalConfig& cfg) {
  cfg.validate();
  const int steps = cfg.extrapolation_order;
  if ((cfg.defect_max_N >> steps) < 64) {
    throw std::domain_error(
        "defect extrapolation: defect_max_N too small for the requested "
        "extrapolation order");
  }
}

}  // namespace

ModulusPair::ModulusPair(double a) : alpha(a), beta(1.0 / a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::domain_error("ModulusPair: requires alpha > 0");
  }
}

std::int64_t default_series_cutoff(double alpha) {
  const double n = std::ceil(40.0 / alpha);
  return std::max<std::int64_t>(50, static_cast<std::int64_t>(n));
}

double em_zeta_tail(double s, std::int64_t N) {
  if (!(s > 1.0) || N < 1) {
    throw std::domain_error("em_zeta_tail: requires s > 1 and N >= 1");
  }
  const double x = static_cast<double>(N);
  const double xs = std::pow(x, -s);
  // int_N^inf t^-s dt - f(N)/2 - f'(N)/12 + f'''(N)/720 - f^(5)(N)/30240
  double tail = x * xs / (s - 1.0) - 0.5 * xs + (s / 12.0) * xs / x;
  const double s3 = s * (s + 1.0) * (s + 2.0);
  tail -= s3 / 720.0 * xs / (x * x * x);
  const double s5 = s3 * (s + 3.0) * (s + 4.0);
  tail += s5 / 30240.0 * xs / (x * x * x * x * x);
  return tail;
}

Approximation sum_phi(double alpha, const EvalConfig& cfg) {
  cfg.validate();
  if (!(alpha > 0.0)) {
    throw std::domain_error("sum_phi: requires alpha > 0");
  }
  const auto t0 = Clock::now();
  const std::int64_t n_cut = cfg.series_cutoff
                                 ? static_cast<std::int64_t>(*cfg.series_cutoff)
                                 : default_series_cutoff(alpha);
  if (n_cut > 4'000'000) {
    throw ToleranceError("sum_phi: series cutoff beyond supported cap", 0.0,
                         std::numeric_limits<double>::infinity());
  }

  NeumaierSum head;
  double abs_sum = 0.0;
  for (std::int64_t n = 1; n <= n_cut; ++n) {
    const double term = specfun::phi(static_cast<double>(n) * alpha);
    head.add(term);
    abs_sum += std::abs(term);
  }

  const auto& c = TailCoefficients::values;
  const int order = cfg.tail_order;
  double tail = 0.0;
  double a2k = 1.0;
  for (int k = 1; k <= order; ++k) {
    a2k /= alpha * alpha;
    tail += c[k - 1] * a2k * em_zeta_tail(2.0 * k, n_cut);
  }
  const double dropped = std::abs(c[order]) * a2k / (alpha * alpha) *
                         em_zeta_tail(2.0 * order + 2.0, n_cut);

  Approximation out;
  out.value = head.get() + tail;
  out.err_estimate = dropped + 3e-16 * abs_sum;
  out.terms_used = n_cut + order;
  out.seconds = elapsed(t0);
  if (out.err_estimate > cfg.abs_tol) {
    throw ToleranceError("sum_phi: tail bound exceeds abs_tol at the cutoff",
                         out.value.real(), out.err_estimate);
  }
  return out;
}

Approximation left_side(double alpha, const EvalConfig& cfg) {
  const auto t0 = Clock::now();
  Approximation sp = sum_phi(alpha, cfg);
  const double root = std::sqrt(alpha);
  const double lead =
      (Constants::euler_gamma - Constants::log_two_pi - std::log(alpha)) /
      (2.0 * alpha);
  Approximation out;
  out.value = root * (lead + sp.value.real());
  out.err_estimate = root * sp.err_estimate + 4e-16 * std::abs(lead) * root;
  out.terms_used = sp.terms_used;
  out.nodes_used = sp.nodes_used;
  out.seconds = elapsed(t0);
  return out;
}

Approximation guinand_side(cplx z, const EvalConfig& cfg) {
  cfg.validate();
  const double mag = std::abs(z);
  if (!(mag > 0.0) ||
      std::atan2(std::abs(z.imag()), z.real()) >
          0.5 * Constants::pi - 0.05) {
    throw std::domain_error(
        "guinand_side: requires |arg z| <= pi/2 - 0.05 and z != 0");
  }
  const auto t0 = Clock::now();
  const std::int64_t n_cut =
      cfg.series_cutoff ? static_cast<std::int64_t>(*cfg.series_cutoff)
                        : default_series_cutoff(mag);

  NeumaierSumComplex head;
  double abs_sum = 0.0;
  for (std::int64_t n = 1; n <= n_cut; ++n) {
    const cplx term = specfun::phi(static_cast<double>(n) * z);
    head.add(term);
    abs_sum += std::abs(term);
  }

  const auto& c = TailCoefficients::values;
  const cplx z2 = z * z;
  cplx tail{0.0, 0.0};
  cplx zpow{1.0, 0.0};
  for (int k = 1; k <= cfg.tail_order; ++k) {
    zpow /= z2;
    tail += c[k - 1] * zpow * em_zeta_tail(2.0 * k, n_cut);
  }
  const double dropped = std::abs(c[cfg.tail_order]) * std::abs(zpow / z2) *
                         em_zeta_tail(2.0 * cfg.tail_order + 2.0, n_cut) * 2.0;

  const cplx lead = (Constants::euler_gamma -
                     std::log(2.0 * Constants::pi * z)) /
                    (2.0 * z);

  Approximation out;
  out.value = head.get() + tail + lead;
  out.err_estimate = dropped + 3e-16 * (abs_sum + std::abs(lead));
  out.terms_used = n_cut + cfg.tail_order;
  out.seconds = elapsed(t0);
  return out;
}

double poisson_defect(double z, std::int64_t N, DefectSide side) {
  if (!(z > 0.0)) {
    throw std::domain_error("poisson_defect: requires z > 0");
  }
  if (N < 1) {
    throw std::domain_error("poisson_defect: requires N >= 1");
  }
  if (side == DefectSide::Transform) {
    return poisson_defect(1.0 / z, N, DefectSide::Function) / z;
  }
  NeumaierSum sum;
  for (std::int64_t n = 1; n <= N; ++n) {
    sum.add(specfun::self_reciprocal(static_cast<double>(n) * z));
  }
  return sum.get() - defect_integral(z, static_cast<double>(N));
}

Approximation poisson_defect_limit(double z, DefectSide side,
                                   const EvalConfig& cfg) {
  if (!(z > 0.0)) {
    throw std::domain_error("poisson_defect_limit: requires z > 0");
  }
  check_defect_cfg(cfg);
  if (side == DefectSide::Transform) {
    Approximation inner = poisson_defect_limit(1.0 / z, DefectSide::Function, cfg);
    inner.value /= z;
    inner.err_estimate /= z;
    return inner;
  }
  const auto t0 = Clock::now();
  const int steps = cfg.extrapolation_order;
  const std::int64_t base = cfg.defect_max_N >> steps;

  std::vector<double> samples;
  NeumaierSum sum;
  std::int64_t next = base;
  for (std::int64_t n = 1; n <= cfg.defect_max_N; ++n) {
    const double fn = specfun::self_reciprocal(static_cast<double>(n) * z);
    sum.add(fn);
    if (n == next) {
      // Trapezoid endpoint correction knocks the defect down to O(N^-2).
      samples.push_back(sum.get() - 0.5 * fn -
                        defect_integral(z, static_cast<double>(n)));
      next *= 2;
    }
  }
  const auto [limit, resid] = richardson(samples);

  Approximation out;
  out.value = limit;
  out.err_estimate = 2.0 * resid + 1e-13;
  out.terms_used = cfg.defect_max_N;
  out.seconds = elapsed(t0);
  return out;
}

Approximation defect_limit(double z, const EvalConfig& cfg) {
  if (!(z > 0.0)) {
    throw std::domain_error("defect_limit: requires z > 0");
  }
  check_defect_cfg(cfg);
  const auto t0 = Clock::now();
  const int steps = cfg.extrapolation_order;
  const std::int64_t base = cfg.defect_max_N >> steps;

  std::vector<double> samples;
  NeumaierSum harmonic;
  std::int64_t next = base;
  for (std::int64_t n = 1; n <= cfg.defect_max_N; ++n) {
    const double hn = 1.0 / (2.0 * static_cast<double>(n) * z);
    harmonic.add(hn);
    if (n == next) {
      samples.push_back(harmonic.get() - 0.5 * hn -
                        defect_integral(z, static_cast<double>(n)));
      next *= 2;
    }
  }
  const auto [limit, resid] = richardson(samples);

  Approximation out;
  out.value = limit;
  out.err_estimate = 2.0 * resid + 1e-13;
  out.terms_used = cfg.defect_max_N;
  out.seconds = elapsed(t0);
  if (out.err_estimate > std::max(cfg.abs_tol, 1e-10)) {
    throw ToleranceError("defect_limit: extrapolation did not settle",
                         limit, out.err_estimate);
  }
  return out;
}

double cot_identity_gap(double t) {
  if (t == 0.0 || !std::isfinite(t)) {
    throw std::domain_error("cot_identity_gap: requires finite t != 0");
  }
  // Left side: sum_{n>=1} 1/(t^2 + 4 pi^2 n^2), direct to N plus an
  // Euler-Maclaurin tail for g(x) = 1/(x^2 + c^2), c = |t|/(2 pi).
  constexpr std::int64_t kTerms = 2000;
  const double four_pi2 = 4.0 * Constants::pi * Constants::pi;
  const double t2 = t * t;
  NeumaierSum lhs;
  for (std::int64_t n = 1; n <= kTerms; ++n) {
    const double dn = static_cast<double>(n);
    lhs.add(1.0 / (t2 + four_pi2 * dn * dn));
  }
  const double c = std::abs(t) / (2.0 * Constants::pi);
  const double a = static_cast<double>(kTerms) + 1.0;
  const double a2c2 = a * a + c * c;
  double tail = (c > 0.0) ? std::atan2(c, a) / c : 1.0 / a;
  tail += 0.5 / a2c2;
  tail += (2.0 * a / (a2c2 * a2c2)) / 12.0;
  lhs.add(tail / four_pi2);

  // Right side: (1/(2t)) (1/(e^t-1) - 1/t + 1/2); the series branch of the
  // kernel covers the small-t cancellation.
  const double rhs = exp_kernel_half(t) / (2.0 * t);
  return std::abs(lhs.get() - rhs);
}

double divergent_variant_partial(double alpha, std::int64_t N) {
  if (!(alpha > 0.0) || N < 1) {
    throw std::domain_error(
        "divergent_variant_partial: requires alpha > 0 and N >= 1");
  }
  NeumaierSum sum;
  for (std::int64_t n = 1; n <= N; ++n) {
    sum.add(specfun::phi(static_cast<double>(n) * alpha));
  }
  return sum.get() - Constants::euler_gamma * static_cast<double>(N);
}

}  // namespace modrel::series
