#include "modrel/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "modrel/constants.hpp"
#include "modrel/errors.hpp"
#include "modrel/kernels.hpp"
#include "modrel/quad.hpp"
#include "modrel/series.hpp"
#include "modrel/specfun.hpp"
#include "modrel/summation.hpp"

namespace modrel::identities {

namespace {

constexpr double kPi = Constants::pi;
constexpr double kGamma = Constants::euler_gamma;
constexpr double kLog2Pi = Constants::log_two_pi;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_value(cplx v) {
  if (v.imag() == 0.0) {
    return fmt17(v.real());
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", v.real(), v.imag());
  return buf;
}

Approximation exact(double v) {
  Approximation a;
  a.value = v;
  a.err_estimate = 4.0 * std::abs(v) * 2.220446049250313e-16;
  return a;
}

Approximation from_quad(const quad::QuadratureResult& r) {
  Approximation a;
  a.value = r.value;
  a.err_estimate = r.err_estimate;
  a.nodes_used = r.nodes_used;
  return a;
}

EvalConfig scaled_cfg(const EvalConfig& cfg, double tol) {
  EvalConfig c = cfg;
  c.abs_tol = std::max(cfg.abs_tol, tol);
  return c;
}

const AlphaParam& as_alpha(const IdentityParams& p, const char* id) {
  if (const auto* a = std::get_if<AlphaParam>(&p)) {
    return *a;
  }
  throw std::domain_error(std::string(id) + ": expected an alpha parameter");
}

const ZParam& as_z(const IdentityParams& p, const char* id) {
  if (const auto* z = std::get_if<ZParam>(&p)) {
    return *z;
  }
  throw std::domain_error(std::string(id) + ": expected a z parameter");
}

const FreqParam& as_freq(const IdentityParams& p, const char* id) {
  if (const auto* n = std::get_if<FreqParam>(&p)) {
    return *n;
  }
  throw std::domain_error(std::string(id) + ": expected an n parameter");
}

const ScaleParam& as_scale(const IdentityParams& p, const char* id) {
  if (const auto* a = std::get_if<ScaleParam>(&p)) {
    return *a;
  }
  throw std::domain_error(std::string(id) + ": expected an a parameter");
}

const PointParam& as_point(const IdentityParams& p, const char* id) {
  if (const auto* t = std::get_if<PointParam>(&p)) {
    return *t;
  }
  throw std::domain_error(std::string(id) + ": expected a t parameter");
}

const PairParam& as_pair(const IdentityParams& p, const char* id) {
  if (const auto* mn = std::get_if<PairParam>(&p)) {
    return *mn;
  }
  throw std::domain_error(std::string(id) + ": expected a mu/nu pair");
}

void need_positive(double v, const char* id, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::domain_error(std::string(id) + ": parameter " + name +
                            " must be positive and finite");
  }
}

// ---- catalog ----------------------------------------------------------

std::vector<IdentityDescriptor> build_catalog() {
  std::vector<IdentityDescriptor> cat;

  // I1: the three-expression modular relation.
  {
    IdentityDescriptor d;
    d.id = "I1";
    d.side_count = 3;
    d.kind = ParamKind::Alpha;
    d.param_domain = "alpha > 0";
    d.default_tol = 1e-8;
    d.anchor =
        "sqrt(a){(g-log(2pi a))/(2a) + sum phi(na)} = same at 1/a = "
        "-pi^{-3/2} Int |Xi(t/2)Gamma((-1+it)/4)|^2 cos(t log(a)/2)/(1+t^2)";
    d.canonical = {AlphaParam{0.5}, AlphaParam{2.0}, AlphaParam{3.0}};
    d.validate = [](const IdentityParams& p) {
      need_positive(as_alpha(p, "I1").alpha, "I1", "alpha");
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const double alpha = as_alpha(p, "I1").alpha;
      const series::ModulusPair mp(alpha);
      switch (side) {
        case 0:
          return series::left_side(mp.alpha, cfg);
        case 1:
          return series::left_side(mp.beta, cfg);
        default:
          return quad::xi_integral(alpha, cfg);
      }
    };
    cat.push_back(std::move(d));
  }

  // I2: S(z) = (1/z) S(1/z).
  {
    IdentityDescriptor d;
    d.id = "I2";
    d.side_count = 2;
    d.kind = ParamKind::Z;
    d.param_domain = "|arg z| <= pi/2 - 0.05, z != 0";
    d.default_tol = 1e-9;
    d.anchor =
        "sum(psi(nz) - log nz + 1/(2nz)) + (g - log 2pi z)/(2z) = (1/z) "
        "same at 1/z";
    d.canonical = {ZParam{cplx{2.0, 0.0}}, ZParam{cplx{0.5, 0.0}},
                   ZParam{cplx{1.5, 0.8}}};
    d.validate = [](const IdentityParams& p) {
      const cplx z = as_z(p, "I2").z;
      if (!(std::abs(z) > 0.0) ||
          std::atan2(std::abs(z.imag()), z.real()) > 0.5 * kPi - 0.05) {
        throw std::domain_error("I2: z outside the supported sector");
      }
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const cplx z = as_z(p, "I2").z;
      if (side == 0) {
        return series::guinand_side(z, cfg);
      }
      Approximation s = series::guinand_side(1.0 / z, cfg);
      s.value /= z;
      s.err_estimate /= std::abs(z);
      return s;
    };
    cat.push_back(std::move(d));
  }

  // I3: the self-reciprocal cosine transform.
  {
    IdentityDescriptor d;
    d.id = "I3";
    d.side_count = 2;
    d.kind = ParamKind::Freq;
    d.param_domain = "n > 0";
    d.default_tol = 1e-7;
    d.anchor =
        "Int_0^inf (psi(1+x) - log x) cos(2 pi n x) dx = "
        "(psi(1+n) - log n)/2";
    d.canonical = {FreqParam{1.0}, FreqParam{2.0}, FreqParam{5.0}};
    d.validate = [](const IdentityParams& p) {
      need_positive(as_freq(p, "I3").n, "I3", "n");
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const double n = as_freq(p, "I3").n;
      if (side == 1) {
        return exact(0.5 * (specfun::digamma(1.0 + n) - std::log(n)));
      }
      quad::OscillatorySpec spec;
      spec.envelope = [](double x) { return specfun::self_reciprocal(x); };
      spec.angular_frequency = 2.0 * kPi * n;
      spec.start = 0.0;
      const double tol = std::max(1e-13, std::min(1e-7 / 5.0, cfg.abs_tol));
      return from_quad(quad::integrate_oscillatory_cos(spec, tol));
    };
    cat.push_back(std::move(d));
  }

  // I4: the exponential-kernel companion transform.
  {
    IdentityDescriptor d;
    d.id = "I4";
    d.side_count = 2;
    d.kind = ParamKind::Freq;
    d.param_domain = "n > 0";
    d.default_tol = 1e-10;
    d.anchor =
        "Int_0^inf (1/(e^{2pi x}-1) - 1/(2pi x)) e^{-2pi n x} dx = "
        "(log n - psi(1+n))/(2pi)";
    d.canonical = {FreqParam{1.0}, FreqParam{3.0}};
    d.validate = [](const IdentityParams& p) {
      need_positive(as_freq(p, "I4").n, "I4", "n");
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const double n = as_freq(p, "I4").n;
      if (side == 1) {
        return exact((std::log(n) - specfun::digamma(1.0 + n)) /
                     (2.0 * kPi));
      }
      auto f = [n](double x) {
        return exp_kernel(2.0 * kPi * x) * std::exp(-2.0 * kPi * n * x);
      };
      const double tol = std::max(1e-13, std::min(2e-11, cfg.abs_tol));
      return from_quad(quad::integrate_semi_infinite(
          f, tol, quad::DecayHint::exponential(2.0 * kPi * n)));
    };
    cat.push_back(std::move(d));
  }

  // I5: the partial-fraction identity.
  {
    IdentityDescriptor d;
    d.id = "I5";
    d.side_count = 2;
    d.kind = ParamKind::Point;
    d.param_domain = "t != 0";
    d.default_tol = 1e-12;
    d.anchor =
        "sum 1/(t^2 + 4 n^2 pi^2) = (1/(2t))(1/(e^t-1) - 1/t + 1/2)";
    d.canonical = {PointParam{0.5}, PointParam{2.0 * kPi}, PointParam{15.0}};
    d.validate = [](const IdentityParams& p) {
      const double t = as_point(p, "I5").t;
      if (t == 0.0 || !std::isfinite(t)) {
        throw std::domain_error("I5: requires finite t != 0");
      }
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig&) {
      const double t = as_point(p, "I5").t;
      if (side == 1) {
        return exact(exp_kernel_half(t) / (2.0 * t));
      }
      // Direct sum plus Euler-Maclaurin tail, as in cot_identity_gap.
      constexpr std::int64_t kTerms = 2000;
      const double four_pi2 = 4.0 * kPi * kPi;
      NeumaierSum lhs;
      for (std::int64_t n = 1; n <= kTerms; ++n) {
        const double dn = static_cast<double>(n);
        lhs.add(1.0 / (t * t + four_pi2 * dn * dn));
      }
      const double c = std::abs(t) / (2.0 * kPi);
      const double a = static_cast<double>(kTerms) + 1.0;
      const double a2c2 = a * a + c * c;
      double tail = std::atan2(c, a) / c + 0.5 / a2c2 +
                    (2.0 * a / (a2c2 * a2c2)) / 12.0;
      lhs.add(tail / four_pi2);
      Approximation out;
      out.value = lhs.get();
      out.err_estimate = 1e-15 / (1.0 + t * t);
      out.terms_used = kTerms;
      return out;
    };
    cat.push_back(std::move(d));
  }

  // I6: integral representation of phi.
  {
    IdentityDescriptor d;
    d.id = "I6";
    d.side_count = 2;
    d.kind = ParamKind::Alpha;
    d.param_domain = "x > 0 (passed as alpha)";
    d.default_tol = 1e-10;
    d.anchor = "phi(x) = -2 Int_0^inf t /((t^2+x^2)(e^{2pi t}-1)) dt";
    d.canonical = {AlphaParam{0.5}, AlphaParam{1.0}, AlphaParam{3.7},
                   AlphaParam{10.0}};
    d.validate = [](const IdentityParams& p) {
      need_positive(as_alpha(p, "I6").alpha, "I6", "x");
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const double x = as_alpha(p, "I6").alpha;
      if (side == 0) {
        return exact(specfun::phi(x));
      }
      auto f = [x](double t) {
        return -2.0 * t / ((t * t + x * x) * std::expm1(2.0 * kPi * t));
      };
      const double tol = std::max(1e-13, std::min(2e-11, cfg.abs_tol));
      return from_quad(quad::integrate_semi_infinite(
          f, tol, quad::DecayHint::exponential(2.0 * kPi)));
    };
    cat.push_back(std::move(d));
  }

  // I7: Binet's integral for log Gamma.
  {
    IdentityDescriptor d;
    d.id = "I7";
    d.side_count = 2;
    d.kind = ParamKind::Z;
    d.param_domain = "real z > 0";
    d.default_tol = 1e-10;
    d.anchor =
        "log Gamma(z) = (z-1/2) log z - z + log(2pi)/2 + "
        "Int_0^inf (1/2 - 1/t + 1/(e^t-1)) e^{-zt}/t dt";
    d.canonical = {ZParam{cplx{1.0, 0.0}}, ZParam{cplx{2.5, 0.0}},
                   ZParam{cplx{10.0, 0.0}}};
    d.validate = [](const IdentityParams& p) {
      const cplx z = as_z(p, "I7").z;
      if (z.imag() != 0.0 || !(z.real() > 0.0)) {
        throw std::domain_error("I7: requires real z > 0");
      }
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const double z = as_z(p, "I7").z.real();
      if (side == 0) {
        return exact(specfun::log_gamma(z));
      }
      auto f = [z](double t) {
        return exp_kernel_half(t) * std::exp(-z * t) / t;
      };
      const double tol = std::max(1e-13, std::min(2e-11, cfg.abs_tol));
      const quad::QuadratureResult r = quad::integrate_semi_infinite(
          f, tol, quad::DecayHint::exponential(std::min(1.0, z)));
      Approximation out = from_quad(r);
      out.value += (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi;
      return out;
    };
    cat.push_back(std::move(d));
  }

  // I8: the Euler-constant integral.
  {
    IdentityDescriptor d;
    d.id = "I8";
    d.side_count = 2;
    d.kind = ParamKind::None;
    d.param_domain = "no parameters";
    d.default_tol = 1e-10;
    d.anchor = "Int_0^inf (1/(1-e^{-x}) - 1/x) e^{-x} dx = gamma";
    d.canonical = {NoParam{}};
    d.validate = [](const IdentityParams&) {};
    d.side = [](int side, const IdentityParams&, const EvalConfig& cfg) {
      if (side == 1) {
        return exact(kGamma);
      }
      auto f = [](double x) {
        return (1.0 + exp_kernel(x)) * std::exp(-x);
      };
      const double tol = std::max(1e-13, std::min(2e-11, cfg.abs_tol));
      return from_quad(quad::integrate_semi_infinite(
          f, tol, quad::DecayHint::exponential(1.0)));
    };
    cat.push_back(std::move(d));
  }

  // I9: Frullani's integral.
  {
    IdentityDescriptor d;
    d.id = "I9";
    d.side_count = 2;
    d.kind = ParamKind::Pair;
    d.param_domain = "mu > 0, nu > 0";
    d.default_tol = 1e-11;
    d.anchor = "Int_0^inf (e^{-mu x} - e^{-nu x})/x dx = log(nu/mu)";
    d.canonical = {PairParam{1.0, 2.0}, PairParam{0.5, 3.0},
                   PairParam{2.0 * kPi, 1.0}};
    d.validate = [](const IdentityParams& p) {
      const PairParam& mn = as_pair(p, "I9");
      need_positive(mn.mu, "I9", "mu");
      need_positive(mn.nu, "I9", "nu");
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const PairParam& mn = as_pair(p, "I9");
      if (side == 1) {
        return exact(std::log(mn.nu / mn.mu));
      }
      const double mu = mn.mu;
      const double nu = mn.nu;
      auto f = [mu, nu](double x) {
        return (std::expm1(-mu * x) - std::expm1(-nu * x)) / x;
      };
      const double tol = std::max(1e-13, std::min(2e-12, cfg.abs_tol));
      return from_quad(quad::integrate_semi_infinite(
          f, tol, quad::DecayHint::exponential(std::min(mu, nu))));
    };
    cat.push_back(std::move(d));
  }

  // I10: gamma - log(2 pi alpha) as one combined integral.
  {
    IdentityDescriptor d;
    d.id = "I10";
    d.side_count = 2;
    d.kind = ParamKind::Alpha;
    d.param_domain = "alpha > 0";
    d.default_tol = 1e-9;
    d.anchor =
        "Int_0^inf (2pi/(e^{2pi t}-1) - e^{-t/alpha}/t) dt = "
        "gamma - log(2 pi alpha)";
    d.canonical = {AlphaParam{0.5}, AlphaParam{1.0}, AlphaParam{3.0}};
    d.validate = [](const IdentityParams& p) {
      need_positive(as_alpha(p, "I10").alpha, "I10", "alpha");
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const double alpha = as_alpha(p, "I10").alpha;
      if (side == 1) {
        return exact(kGamma - kLog2Pi - std::log(alpha));
      }
      auto f = [alpha](double t) {
        return 2.0 * kPi * exp_kernel(2.0 * kPi * t) -
               std::expm1(-t / alpha) / t;
      };
      const double tol = std::max(1e-13, std::min(2e-10, cfg.abs_tol));
      return from_quad(quad::integrate_semi_infinite(
          f, tol, quad::DecayHint::exponential(std::min(2.0 * kPi, 1.0 / alpha))));
    };
    cat.push_back(std::move(d));
  }

  // I11: the series-to-integral form of sum phi(n alpha).
  {
    IdentityDescriptor d;
    d.id = "I11";
    d.side_count = 2;
    d.kind = ParamKind::Alpha;
    d.param_domain = "alpha > 0";
    d.default_tol = 1e-9;
    d.anchor =
        "sum phi(n alpha) = -(2pi/alpha) Int_0^inf "
        "(1/(e^{2pi t}-1))(1/(e^{2pi t/alpha}-1) - alpha/(2pi t) + 1/2) dt";
    d.canonical = {AlphaParam{0.5}, AlphaParam{1.0}, AlphaParam{2.0}};
    d.validate = [](const IdentityParams& p) {
      need_positive(as_alpha(p, "I11").alpha, "I11", "alpha");
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const double alpha = as_alpha(p, "I11").alpha;
      if (side == 0) {
        return series::sum_phi(alpha, scaled_cfg(cfg, 1e-12));
      }
      auto f = [alpha](double t) {
        return exp_kernel_half(2.0 * kPi * t / alpha) /
               std::expm1(2.0 * kPi * t);
      };
      const double tol = std::max(1e-13, std::min(2e-10, cfg.abs_tol));
      const quad::QuadratureResult r = quad::integrate_semi_infinite(
          f, tol, quad::DecayHint::exponential(2.0 * kPi));
      Approximation out = from_quad(r);
      out.value *= -2.0 * kPi / alpha;
      out.err_estimate *= 2.0 * kPi / alpha;
      return out;
    };
    cat.push_back(std::move(d));
  }

  // I12: the Xi-cosine integral against the product-kernel x-integral.
  {
    IdentityDescriptor d;
    d.id = "I12";
    d.side_count = 2;
    d.kind = ParamKind::Freq;
    d.param_domain = "any real n";
    d.default_tol = 1e-8;
    d.anchor =
        "Int |Xi(t/2)Gamma((-1+it)/4)|^2 cos(nt)/(1+t^2) dt = pi^{3/2} "
        "Int (1/(e^{x e^n}-1) - 1/(x e^n))(1/(e^{x e^-n}-1) - 1/(x e^-n)) dx";
    d.canonical = {FreqParam{0.0}, FreqParam{0.34657359027997264},
                   FreqParam{0.80471895621705019}};
    d.validate = [](const IdentityParams& p) {
      if (!std::isfinite(as_freq(p, "I12").n)) {
        throw std::domain_error("I12: requires finite n");
      }
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const double n = as_freq(p, "I12").n;
      if (side == 0) {
        return quad::xi_cosine_integral(n, cfg);
      }
      Approximation x = quad::ramanujan_x_integral(n, scaled_cfg(cfg, 4e-10));
      const double scale = std::pow(kPi, 1.5);
      x.value *= scale;
      x.err_estimate *= scale;
      return x;
    };
    cat.push_back(std::move(d));
  }

  // I13: the log integral with the exponential regulator.
  {
    IdentityDescriptor d;
    d.id = "I13";
    d.side_count = 2;
    d.kind = ParamKind::Scale;
    d.param_domain = "a > 0";
    d.default_tol = 1e-10;
    d.anchor =
        "Int_0^inf (1/(u(e^u-1)) - 1/u^2 + e^{-ua}/(2u)) du = "
        "-log(2 pi a)/2";
    d.canonical = {ScaleParam{0.15915494309189534}, ScaleParam{1.0},
                   ScaleParam{2.7182818284590452}};
    d.validate = [](const IdentityParams& p) {
      need_positive(as_scale(p, "I13").a, "I13", "a");
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const double a = as_scale(p, "I13").a;
      if (side == 1) {
        return exact(-0.5 * (kLog2Pi + std::log(a)));
      }
      auto f = [a](double u) {
        return (exp_kernel_half(u) + 0.5 * std::expm1(-u * a)) / u;
      };
      const double tol = std::max(1e-13, std::min(2e-11, cfg.abs_tol));
      return from_quad(
          quad::integrate_semi_infinite(f, tol, quad::DecayHint::algebraic(2.0)));
    };
    cat.push_back(std::move(d));
  }

  // I14: the half-shift lemma integral.
  {
    IdentityDescriptor d;
    d.id = "I14";
    d.side_count = 2;
    d.kind = ParamKind::None;
    d.param_domain = "no parameters";
    d.default_tol = 1e-10;
    d.anchor =
        "Int_0^inf (psi(t+1) - 1/(2(t+1)) - log t) dt = log(2 pi)/2";
    d.canonical = {NoParam{}};
    d.validate = [](const IdentityParams&) {};
    d.side = [](int side, const IdentityParams&, const EvalConfig& cfg) {
      if (side == 1) {
        return exact(0.5 * kLog2Pi);
      }
      auto f = [](double t) {
        // psi(t+1) - 1/(2(t+1)) - log t, written through phi(t+1) so the
        // large-t cancellation cannot wash out the 1/t^2 residue.
        return std::log1p(1.0 / t) - 1.0 / (t + 1.0) +
               specfun::phi(t + 1.0);
      };
      const double tol = std::max(1e-13, std::min(2e-11, cfg.abs_tol));
      return from_quad(
          quad::integrate_semi_infinite(f, tol, quad::DecayHint::algebraic(2.0)));
    };
    cat.push_back(std::move(d));
  }

  // I15: the two-parameter Binet-type integral and its closed form.
  {
    IdentityDescriptor d;
    d.id = "I15";
    d.side_count = 2;
    d.kind = ParamKind::Pair;
    d.param_domain = "a > 0 (as mu), t > 0 (as nu)";
    d.default_tol = 1e-9;
    d.anchor =
        "F(a,t) = log Gamma(t) - (t-1/2) log t + t - log(2pi)/2 + "
        "log(t/a)/2";
    d.canonical = {PairParam{1.0, 1.0}, PairParam{2.0, 0.5},
                   PairParam{1.0, 1e-4}};
    d.validate = [](const IdentityParams& p) {
      const PairParam& at = as_pair(p, "I15");
      need_positive(at.mu, "I15", "a");
      need_positive(at.nu, "I15", "t");
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig&) {
      const PairParam& at = as_pair(p, "I15");
      const double a = at.mu;
      const double t = at.nu;
      if (side == 0) {
        Approximation out;
        out.value = quad::binet_F(a, t);
        out.err_estimate = 5e-12;
        return out;
      }
      return exact(specfun::log_gamma(t) - (t - 0.5) * std::log(t) + t -
                   0.5 * kLog2Pi + 0.5 * std::log(t / a));
    };
    cat.push_back(std::move(d));
  }

  // I16a: equality of the two Poisson defect limits.
  {
    IdentityDescriptor d;
    d.id = "I16a";
    d.side_count = 2;
    d.kind = ParamKind::Alpha;
    d.param_domain = "z > 0 (passed as alpha)";
    d.default_tol = 1e-8;
    d.anchor =
        "lim_N (sum f(n) - Int_0^N f) = lim_N (sum g(n) - Int_0^N g), "
        "f = psi(xz+1) - log xz, g its cosine transform";
    d.canonical = {AlphaParam{1.0}, AlphaParam{2.0}, AlphaParam{0.5}};
    d.validate = [](const IdentityParams& p) {
      need_positive(as_alpha(p, "I16a").alpha, "I16a", "z");
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const double z = as_alpha(p, "I16a").alpha;
      return series::poisson_defect_limit(
          z,
          side == 0 ? series::DefectSide::Function
                    : series::DefectSide::Transform,
          cfg);
    };
    cat.push_back(std::move(d));
  }

  // I16b: the harmonic-defect limit in closed form.
  {
    IdentityDescriptor d;
    d.id = "I16b";
    d.side_count = 2;
    d.kind = ParamKind::Alpha;
    d.param_domain = "z > 0 (passed as alpha)";
    d.default_tol = 1e-8;
    d.anchor =
        "lim_N (sum 1/(2nz) - Int_0^N (psi(tz+1) - log tz) dt) = "
        "(gamma - log 2 pi z)/(2z)";
    d.canonical = {AlphaParam{1.0}, AlphaParam{2.0}, AlphaParam{3.0}};
    d.validate = [](const IdentityParams& p) {
      need_positive(as_alpha(p, "I16b").alpha, "I16b", "z");
    };
    d.side = [](int side, const IdentityParams& p, const EvalConfig& cfg) {
      const double z = as_alpha(p, "I16b").alpha;
      if (side == 1) {
        return exact((kGamma - kLog2Pi - std::log(z)) / (2.0 * z));
      }
      return series::defect_limit(z, cfg);
    };
    cat.push_back(std::move(d));
  }

  return cat;
}

}  // namespace

std::string describe(const IdentityParams& p) {
  struct Visitor {
    std::string operator()(const NoParam&) const { return ""; }
    std::string operator()(const AlphaParam& a) const {
      return "alpha=" + fmt17(a.alpha);
    }
    std::string operator()(const ZParam& z) const {
      return "z=" + fmt_value(z.z);
    }
    std::string operator()(const FreqParam& n) const {
      return "n=" + fmt17(n.n);
    }
    std::string operator()(const ScaleParam& a) const {
      return "a=" + fmt17(a.a);
    }
    std::string operator()(const PointParam& t) const {
      return "t=" + fmt17(t.t);
    }
    std::string operator()(const PairParam& mn) const {
      return "mu=" + fmt17(mn.mu) + " nu=" + fmt17(mn.nu);
    }
  };
  return std::visit(Visitor{}, p);
}

const std::vector<IdentityDescriptor>& catalog() {
  static const std::vector<IdentityDescriptor> cat = build_catalog();
  return cat;
}

const IdentityDescriptor& find(const std::string& id) {
  for (const IdentityDescriptor& d : catalog()) {
    if (d.id == id) {
      return d;
    }
  }
  throw std::invalid_argument("unknown identity id: " + id);
}

Approximation eval_side(const std::string& id, int side_index,
                        const IdentityParams& params, const EvalConfig& cfg) {
  cfg.validate();
  const IdentityDescriptor& d = find(id);
  if (side_index < 0 || side_index >= d.side_count) {
    throw std::domain_error(id + ": side index out of range");
  }
  d.validate(params);
  const auto t0 = std::chrono::steady_clock::now();
  Approximation a = d.side(side_index, params, cfg);
  if (a.seconds == 0.0) {
    a.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
  }
  return a;
}

IdentityReport check(const std::string& id, const IdentityParams& params,
                     std::optional<double> tol_override,
                     const EvalConfig& cfg) {
  cfg.validate();
  const IdentityDescriptor& d = find(id);
  d.validate(params);
  if (tol_override && !(*tol_override > 0.0)) {
    throw std::domain_error("check: tolerance override must be positive");
  }

  IdentityReport r;
  r.id = d.id;
  r.params = params;
  r.tol = tol_override ? *tol_override : d.default_tol;

  const auto t0 = std::chrono::steady_clock::now();
  bool failed = false;
  for (int i = 0; i < d.side_count; ++i) {
    try {
      r.side_values.push_back(d.side(i, params, cfg));
    } catch (const NumericsError& e) {
      failed = true;
      r.diagnostics += "side " + std::to_string(i) + ": " + e.what() + "; ";
      r.side_values.push_back(Approximation{});
    }
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  double max_diff = 0.0;
  for (std::size_t i = 0; i < r.side_values.size(); ++i) {
    for (std::size_t j = i + 1; j < r.side_values.size(); ++j) {
      max_diff = std::max(
          max_diff,
          std::abs(r.side_values[i].value - r.side_values[j].value));
    }
  }
  r.max_abs_diff = max_diff;
  r.pass = !failed && max_diff <= r.tol;
  if (failed) {
    r.max_abs_diff = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

std::vector<IdentityReport> sweep(const std::string& id,
                                  const std::vector<IdentityParams>& grid,
                                  const EvalConfig& cfg) {
  if (grid.empty()) {
    throw std::invalid_argument("sweep: empty parameter grid");
  }
  std::vector<IdentityReport> out;
  out.reserve(grid.size());
  for (const IdentityParams& p : grid) {
    out.push_back(check(id, p, {}, cfg));
  }
  return out;
}

namespace {

nlohmann::ordered_json params_json(const IdentityParams& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (const auto* a = std::get_if<AlphaParam>(&p)) {
    j["alpha"] = a->alpha;
  } else if (const auto* z = std::get_if<ZParam>(&p)) {
    j["z"] = {z->z.real(), z->z.imag()};
  } else if (const auto* n = std::get_if<FreqParam>(&p)) {
    j["n"] = n->n;
  } else if (const auto* a2 = std::get_if<ScaleParam>(&p)) {
    j["a"] = a2->a;
  } else if (const auto* t = std::get_if<PointParam>(&p)) {
    j["t"] = t->t;
  } else if (const auto* mn = std::get_if<PairParam>(&p)) {
    j["mu"] = mn->mu;
    j["nu"] = mn->nu;
  }
  return j;
}

}  // namespace

std::string to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["params"] = params_json(r.params);
  nlohmann::ordered_json sides = nlohmann::ordered_json::array();
  for (const Approximation& a : r.side_values) {
    nlohmann::ordered_json s;
    if (a.is_real()) {
      s["value"] = a.value.real();
    } else {
      s["value"] = {a.value.real(), a.value.imag()};
    }
    s["err"] = a.err_estimate;
    sides.push_back(std::move(s));
  }
  j["sides"] = std::move(sides);
  j["max_abs_diff"] = r.max_abs_diff;
  j["tol"] = r.tol;
  j["pass"] = r.pass;
  j["seconds"] = r.seconds;
  return j.dump();
}

std::string csv_header() {
  return "id,param,lhs,mid,rhs,max_abs_diff,tol,pass,terms,nodes,seconds";
}

namespace {

std::string csv_param(const IdentityParams& p) {
  if (std::holds_alternative<NoParam>(p)) {
    return "";
  }
  if (const auto* a = std::get_if<AlphaParam>(&p)) {
    return fmt17(a->alpha);
  }
  if (const auto* z = std::get_if<ZParam>(&p)) {
    return fmt_value(z->z);
  }
  if (const auto* n = std::get_if<FreqParam>(&p)) {
    return fmt17(n->n);
  }
  if (const auto* a2 = std::get_if<ScaleParam>(&p)) {
    return fmt17(a2->a);
  }
  if (const auto* t = std::get_if<PointParam>(&p)) {
    return fmt17(t->t);
  }
  const auto& mn = std::get<PairParam>(p);
  return fmt17(mn.mu) + ":" + fmt17(mn.nu);
}

}  // namespace

std::string to_csv_row(const IdentityReport& r) {
  std::int64_t terms = 0;
  std::int64_t nodes = 0;
  for (const Approximation& a : r.side_values) {
    terms += a.terms_used;
    nodes += a.nodes_used;
  }
  const std::string lhs =
      r.side_values.empty() ? "" : fmt_value(r.side_values[0].value);
  std::string mid;
  std::string rhs;
  if (r.side_values.size() == 3) {
    mid = fmt_value(r.side_values[1].value);
    rhs = fmt_value(r.side_values[2].value);
  } else if (r.side_values.size() == 2) {
    rhs = fmt_value(r.side_values[1].value);
  }
  std::ostringstream os;
  os << r.id << ',' << csv_param(r.params) << ',' << lhs << ',' << mid << ','
     << rhs << ',' << fmt17(r.max_abs_diff) << ',' << fmt17(r.tol) << ','
     << (r.pass ? "true" : "false") << ',' << terms << ',' << nodes << ','
     << fmt17(r.seconds);
  return os.str();
}

std::string to_text(const IdentityReport& r) {
  std::ostringstream os;
  os << "id:           " << r.id << '\n';
  os << "params:       " << (describe(r.params).empty() ? "(none)"
                                                        : describe(r.params))
     << '\n';
  for (std::size_t i = 0; i < r.side_values.size(); ++i) {
    const Approximation& a = r.side_values[i];
    os << "side " << i << ":       " << fmt_value(a.value) << "  (err "
       << fmt17(a.err_estimate) << ", terms " << a.terms_used << ", nodes "
       << a.nodes_used << ")\n";
  }
  os << "max_abs_diff: " << fmt17(r.max_abs_diff) << '\n';
  os << "tol:          " << fmt17(r.tol) << '\n';
  os << "pass:         " << (r.pass ? "true" : "false") << '\n';
  if (!r.diagnostics.empty()) {
    os << "diagnostics:  " << r.diagnostics << '\n';
  }
  os << "seconds:      " << fmt17(r.seconds) << '\n';
  return os.str();
}

}  // namespace modrel::identities
