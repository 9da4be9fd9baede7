#include "modrel/quad.hpp"

#include <algorithm>
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

namespace modrel::quad {

namespace {

using Fn = std::function<double(double)>;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUflow = std::numeric_limits<double>::min();

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 layout: Gauss nodes
// sit at the odd indices and the centre).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double value;
  double abserr;
};

PanelResult qk15(const Fn& f, double a, double b, std::int64_t& nodes) {
  const double centre = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double dhlgth = std::abs(hlgth);

  double fv1[7];
  double fv2[7];
  const double fc = f(centre);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = hlgth * kXgk[jtw];
    const double f1 = f(centre - absc);
    const double f2 = f(centre + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[jtw] * (f1 + f2);
    resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * kXgk[jtwm1];
    const double f1 = f(centre - absc);
    const double f2 = f(centre + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += kWgk[jtwm1] * (f1 + f2);
    resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  const double result = resk * hlgth;
  resabs *= dhlgth;
  resasc *= dhlgth;
  double abserr = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && abserr != 0.0) {
    abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
  }
  if (resabs > kUflow / (50.0 * kEps)) {
    abserr = std::max(kEps * 50.0 * resabs, abserr);
  }
  nodes += 15;
  return {result, abserr};
}

struct Interval {
  double a;
  double b;
  double value;
  double err;
};

}  // namespace

QuadratureResult integrate_adaptive(const Fn& f, double a, double b,
                                    double tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::domain_error("integrate_adaptive: requires finite a < b");
  }
  if (!(tol > 0.0)) {
    throw std::domain_error("integrate_adaptive: requires tol > 0");
  }

  constexpr int kMaxIntervals = 4096;
  std::int64_t nodes = 0;
  std::vector<Interval> ivs;
  ivs.reserve(128);
  {
    const PanelResult r = qk15(f, a, b, nodes);
    ivs.push_back({a, b, r.value, r.abserr});
  }
  auto by_err = [](const Interval& x, const Interval& y) {
    return x.err < y.err;
  };
  std::make_heap(ivs.begin(), ivs.end(), by_err);

  double total_val = ivs.front().value;
  double total_err = ivs.front().err;
  bool stalled = false;

  while (total_err > std::max(tol, 50.0 * kEps * std::abs(total_val)) &&
         static_cast<int>(ivs.size()) < kMaxIntervals) {
    std::pop_heap(ivs.begin(), ivs.end(), by_err);
    const Interval worst = ivs.back();
    const double width_limit =
        1024.0 * kEps * std::max({std::abs(worst.a), std::abs(worst.b), 1.0});
    if (worst.b - worst.a < width_limit) {
      std::push_heap(ivs.begin(), ivs.end(), by_err);
      stalled = true;
      break;
    }
    ivs.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    const PanelResult left = qk15(f, worst.a, mid, nodes);
    const PanelResult right = qk15(f, mid, worst.b, nodes);
    total_val += left.value + right.value - worst.value;
    total_err += left.abserr + right.abserr - worst.err;
    ivs.push_back({worst.a, mid, left.value, left.abserr});
    std::push_heap(ivs.begin(), ivs.end(), by_err);
    ivs.push_back({mid, worst.b, right.value, right.abserr});
    std::push_heap(ivs.begin(), ivs.end(), by_err);
  }

  // Deterministic final accumulation, independent of heap order.
  std::sort(ivs.begin(), ivs.end(),
            [](const Interval& x, const Interval& y) { return x.a < y.a; });
  NeumaierSum val;
  NeumaierSum err;
  for (const Interval& iv : ivs) {
    val.add(iv.value);
    err.add(iv.err);
  }

  QuadratureResult out;
  out.value = val.get();
  out.err_estimate = err.get();
  out.nodes_used = nodes;
  out.intervals = static_cast<std::int64_t>(ivs.size());

  const bool exhausted =
      stalled || static_cast<int>(ivs.size()) >= kMaxIntervals;
  if (exhausted && out.err_estimate > 100.0 * tol) {
    throw DepthExhaustedError("integrate_adaptive: interval budget exhausted",
                              out.value, out.err_estimate);
  }
  return out;
}

QuadratureResult integrate_semi_infinite(const Fn& f, double tol,
                                         DecayHint hint) {
  if (!(tol > 0.0)) {
    throw std::domain_error("integrate_semi_infinite: requires tol > 0");
  }
  constexpr int kMaxPanels = 64;

  QuadratureResult out;
  NeumaierSum val;
  double err_sum = 0.0;
  double prev_mag = -1.0;
  double prev_prev_mag = -1.0;
  int rises = 0;
  bool converged = false;
  double tail_bound = 0.0;

  for (int k = 0; k < kMaxPanels; ++k) {
    const double lo = (k == 0) ? 0.0 : std::ldexp(1.0, k - 1);
    const double hi = std::ldexp(1.0, k);
    const double panel_tol = tol / (4.0 * (k + 1) * (k + 2));
    const QuadratureResult p = integrate_adaptive(f, lo, hi, panel_tol);
    val.add(p.value);
    err_sum += p.err_estimate;
    out.nodes_used += p.nodes_used;
    out.intervals += p.intervals;

    const double mag = std::abs(p.value);
    if (prev_mag >= 0.0) {
      rises = (mag > prev_mag) ? rises + 1 : 0;
      if (rises >= 5 && k >= 16) {
        throw HintViolationError(
            "integrate_semi_infinite: panel values rise where the hint "
            "promises decay");
      }
    }

    if (mag < kUflow * 1e8 && k >= 2) {
      converged = true;
      break;
    }

    // Envelope projection of the remaining tail from the hint, plus a
    // measured geometric projection from the last panel ratios.
    double env_tail = std::numeric_limits<double>::infinity();
    const double fu = std::abs(f(hi));
    if (hint.kind == DecayHint::Kind::Exponential && hint.rate > 0.0) {
      env_tail = fu / hint.rate;
    } else if (hint.kind == DecayHint::Kind::Algebraic && hint.rate > 1.0) {
      env_tail = fu * hi / (hint.rate - 1.0);
    }
    double meas_tail = std::numeric_limits<double>::infinity();
    if (prev_mag > 0.0 && mag <= prev_mag) {
      double rho = mag / prev_mag;
      if (prev_prev_mag > 0.0 && prev_mag <= prev_prev_mag) {
        rho = std::max(rho, prev_mag / prev_prev_mag);
      }
      rho = std::min(rho, 0.97);
      meas_tail = mag * rho / (1.0 - rho);
    }
    const double proj = std::min(env_tail, meas_tail);
    if (k >= 2 && proj <= tol / 10.0 && mag <= tol / 4.0) {
      tail_bound = proj;
      converged = true;
      break;
    }

    prev_prev_mag = prev_mag;
    prev_mag = mag;
  }

  if (!converged) {
    throw HintViolationError(
        "integrate_semi_infinite: tail did not fall below tolerance within "
        "the panel budget");
  }
  out.value = val.get();
  out.err_estimate = err_sum + tail_bound;
  return out;
}

QuadratureResult integrate_oscillatory_cos(const OscillatorySpec& spec,
                                           double tol) {
  if (!(spec.angular_frequency >= 0.0) || !(spec.start >= 0.0)) {
    throw std::domain_error(
        "integrate_oscillatory_cos: requires angular_frequency >= 0 and "
        "start >= 0");
  }
  if (!(tol > 0.0)) {
    throw std::domain_error("integrate_oscillatory_cos: requires tol > 0");
  }
  const double w = spec.angular_frequency;
  if (w == 0.0) {
    const double s = spec.start;
    const auto& env = spec.envelope;
    if (s == 0.0) {
      return integrate_semi_infinite(env, tol, DecayHint::algebraic(2.0));
    }
    return integrate_semi_infinite([&env, s](double x) { return env(x + s); },
                                   tol, DecayHint::algebraic(2.0));
  }

  const auto& env = spec.envelope;
  auto g = [&env, w](double x) { return env(x) * std::cos(w * x); };

  // Cosine zeros at x_j = (j + 1/2) pi / w.  The head runs through two full
  // periods past start before the half-period panels begin.
  const double period = 2.0 * Constants::pi / w;
  auto zero_at = [w](std::int64_t j) {
    return (static_cast<double>(j) + 0.5) * Constants::pi / w;
  };
  std::int64_t j0 = static_cast<std::int64_t>(
      std::ceil((spec.start + 2.0 * period) * w / Constants::pi - 0.5));
  while (zero_at(j0) <= spec.start) {
    ++j0;
  }

  QuadratureResult out;
  const QuadratureResult head =
      integrate_adaptive(g, spec.start, zero_at(j0), tol / 4.0);
  out.nodes_used = head.nodes_used;
  out.intervals = head.intervals;
  double err_sum = head.err_estimate;

  constexpr int kPanels = 44;
  constexpr int kAvgDepth = 12;
  std::vector<double> panels;
  panels.reserve(kPanels);
  double max_panel_err = 0.0;
  bool below_floor = false;
  for (int i = 0; i < kPanels; ++i) {
    const QuadratureResult p =
        integrate_adaptive(g, zero_at(j0 + i), zero_at(j0 + i + 1), tol / 16.0);
    out.nodes_used += p.nodes_used;
    out.intervals += p.intervals;
    max_panel_err = std::max(max_panel_err, p.err_estimate);
    panels.push_back(p.value);
    if (i >= 4 && std::abs(p.value) < std::max(1e-300, 1e-4 * tol)) {
      below_floor = true;
      break;
    }
    if (i >= 3) {
      if (panels[i] * panels[i - 1] > 0.0 && std::abs(p.value) > 10.0 * tol) {
        throw NonAlternatingError(
            "integrate_oscillatory_cos: half-period panel signs stopped "
            "alternating");
      }
      if (std::abs(panels[i]) > 4.0 * std::abs(panels[i - 3]) &&
          std::abs(p.value) > 10.0 * tol) {
        throw NonAlternatingError(
            "integrate_oscillatory_cos: half-period panels are growing");
      }
    }
  }

  double tail;
  double tail_err;
  if (below_floor) {
    NeumaierSum s;
    for (double p : panels) {
      s.add(p);
    }
    tail = s.get();
    tail_err = std::abs(panels.back());
  } else {
    // Partial sums, then iterated averaging (Euler transformation).
    std::vector<double> avg(panels.size());
    NeumaierSum s;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      s.add(panels[i]);
      avg[i] = s.get();
    }
    const int depth =
        std::min<int>(kAvgDepth, static_cast<int>(avg.size()) - 2);
    double prev_back = avg.back();
    for (int pass = 0; pass < depth; ++pass) {
      prev_back = avg.back();
      for (std::size_t i = 0; i + 1 < avg.size(); ++i) {
        avg[i] = 0.5 * (avg[i] + avg[i + 1]);
      }
      avg.pop_back();
    }
    tail = avg.back();
    tail_err = std::abs(avg.back() - prev_back);
  }

  out.value = head.value + tail;
  out.err_estimate = err_sum + max_panel_err + tail_err;
  return out;
}

namespace {

// Composite adaptive integration of [0, X] on dyadic panels.
QuadratureResult dyadic_finite(const Fn& f, double upper, double tol,
                               std::int64_t* nodes, std::int64_t* intervals) {
  NeumaierSum val;
  double err = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  int k = 0;
  while (lo < upper) {
    const double top = std::min(hi, upper);
    const double panel_tol = tol / (4.0 * (k + 1) * (k + 2));
    const QuadratureResult p = integrate_adaptive(f, lo, top, panel_tol);
    val.add(p.value);
    err += p.err_estimate;
    *nodes += p.nodes_used;
    *intervals += p.intervals;
    lo = top;
    hi *= 2.0;
    ++k;
  }
  QuadratureResult out;
  out.value = val.get();
  out.err_estimate = err;
  return out;
}

double weight_envelope_scale() {
  // C in w(t) <= C e^{-pi t/2}, fitted once over t in [10, 30].  The zeta
  // factor fluctuates, so a single-point fit would not bound the weight.
  static const double c = [] {
    double best = 0.0;
    for (int t = 10; t <= 30; ++t) {
      best = std::max(best, specfun::xi_weight(t) *
                                std::exp(0.5 * Constants::pi * t));
    }
    return best;
  }();
  return c;
}

}  // namespace

Approximation xi_cosine_integral(double frequency, const EvalConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();

  const double freq = std::abs(frequency);
  constexpr double kCutoff = 60.0;
  const double width = 1.0 / std::max(1.0, freq / 3.0);
  const auto n_panels =
      static_cast<std::int64_t>(std::ceil(kCutoff / width));

  // Fixed panels keep the node set independent of the frequency sign and of
  // adaptive tie-breaks, so alpha <-> 1/alpha agree to rounding.
  Approximation out;
  NeumaierSum val;
  double err_sum = 0.0;
  double abs_sum = 0.0;
  std::int64_t nodes = 0;
  auto f = [freq](double t) {
    return specfun::xi_weight(t) * std::cos(freq * t);
  };
  for (std::int64_t i = 0; i < n_panels; ++i) {
    const double a = width * static_cast<double>(i);
    const double b = std::min(kCutoff, width * static_cast<double>(i + 1));
    const PanelResult p = qk15(f, a, b, nodes);
    val.add(p.value);
    err_sum += p.abserr;
    abs_sum += std::abs(p.value);
  }
  const double tail_bound = weight_envelope_scale() * (2.0 / Constants::pi) *
                            std::exp(-0.5 * Constants::pi * kCutoff);
  out.value = val.get();
  // The weight itself carries the zeta/log-gamma accuracy floor.
  out.err_estimate = err_sum + tail_bound + 3e-14 * abs_sum;
  out.nodes_used = nodes;
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

Approximation xi_integral(double alpha, const EvalConfig& cfg) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("xi_integral: requires alpha > 0");
  }
  const double freq = std::abs(0.5 * std::log(alpha));
  Approximation r = xi_cosine_integral(freq, cfg);
  const double scale = -std::pow(Constants::pi, -1.5);
  r.value *= scale;
  r.err_estimate *= -scale;
  return r;
}

Approximation ramanujan_x_integral(double n, const EvalConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(n)) {
    throw std::domain_error("ramanujan_x_integral: requires finite n");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const double a = std::exp(n);
  const double b = std::exp(-n);
  const double slow = std::min(a, b);
  const double upper = 45.0 / slow;

  auto f = [a, b](double x) { return exp_kernel(a * x) * exp_kernel(b * x); };

  Approximation out;
  std::int64_t nodes = 0;
  std::int64_t intervals = 0;
  const double tol = std::max(cfg.abs_tol / 4.0, 1e-13);
  const QuadratureResult head = dyadic_finite(f, upper, tol, &nodes, &intervals);

  // Past the truncation point the integrand is 1/x^2 up to exponentially
  // small corrections, so the tail is added in closed form.
  out.value = head.value + 1.0 / upper;
  out.err_estimate = head.err_estimate + 3.0 * std::exp(-44.0);
  out.nodes_used = nodes;
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

double binet_F(double a, double t) {
  if (!(a > 0.0) || !(t > 0.0)) {
    throw std::domain_error("binet_F: requires a > 0 and t > 0");
  }
  const double d = t - a;
  auto f = [a, t, d](double u) {
    const double first = exp_kernel_half(u) * std::exp(-t * u) / u;
    // (e^{-ua} - e^{-ut})/(2u) without overflow for either sign of t - a.
    const double m = std::min(a, t);
    const double e = (d >= 0.0) ? -std::expm1(-u * d) : std::expm1(u * d);
    return first + std::exp(-m * u) * e / (2.0 * u);
  };
  const double rate = std::min(a, t);
  const DecayHint hint = (rate < 0.05) ? DecayHint::algebraic(2.0)
                                       : DecayHint::exponential(rate);
  return integrate_semi_infinite(f, 1e-12, hint).value;
}

}  // namespace modrel::quad
