#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "modrel/constants.hpp"
#include "modrel/errors.hpp"
#include "modrel/kernels.hpp"
#include "modrel/quad.hpp"
#include "modrel/series.hpp"
#include "modrel/specfun.hpp"
#include "oracles.hpp"

using namespace modrel;
using quad::DecayHint;
using quad::integrate_adaptive;
using quad::integrate_oscillatory_cos;
using quad::integrate_semi_infinite;
using quad::OscillatorySpec;

namespace {
constexpr double kPi = Constants::pi;
constexpr double kGamma = Constants::euler_gamma;
// Frozen: brute half-period panel oracle for int_0^inf cos x/(1+x^2) dx,
// which matches pi/(2e) (oracles.hpp).
constexpr double kCosOverOnePlusX2 = 0.57786367489546087;
}  // namespace

TEST_CASE("adaptive: polynomial, sine, endpoint log singularity") {
  auto sq = [](double x) { return x * x; };
  CHECK(std::abs(integrate_adaptive(sq, 0.0, 1.0, 1e-12).value - 1.0 / 3.0) <
        1e-14);
  auto s = [](double x) { return std::sin(x); };
  CHECK(std::abs(integrate_adaptive(s, 0.0, kPi, 1e-12).value - 2.0) < 1e-12);
  auto lg = [](double x) { return std::log(1.0 / x); };
  CHECK(std::abs(integrate_adaptive(lg, 0.0, 1.0, 1e-12).value - 1.0) < 1e-11);
}

TEST_CASE("adaptive: linearity and interval additivity") {
  // Fixed-seed LCG coefficients; smooth integrands.
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto rnd = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
  };
  for (int rep = 0; rep < 5; ++rep) {
    const double a = rnd();
    const double b = rnd();
    auto f = [a, b](double x) { return a * std::sin(3.0 * x) + b * x * x * x; };
    const double whole = integrate_adaptive(f, 0.0, 2.0, 1e-13).value;
    const double split = integrate_adaptive(f, 0.0, 1.0, 1e-13).value +
                         integrate_adaptive(f, 1.0, 2.0, 1e-13).value;
    CHECK(std::abs(whole - split) < 1e-12);
    auto g = [&f](double x) { return 3.0 * f(x); };
    CHECK(std::abs(integrate_adaptive(g, 0.0, 2.0, 1e-13).value - 3.0 * whole) <
          1e-12);
  }
}

TEST_CASE("adaptive: domain errors and budget exhaustion") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate_adaptive(f, 1.0, 0.0, 1e-10), std::domain_error);
  CHECK_THROWS_AS(integrate_adaptive(f, 0.0, 1.0, -1.0), std::domain_error);
  auto div = [](double x) { return 1.0 / x; };
  CHECK_THROWS_AS(integrate_adaptive(div, 0.0, 1.0, 1e-6),
                  DepthExhaustedError);
}

TEST_CASE("semi-infinite: exponential and kernel integrals") {
  auto e = [](double t) { return std::exp(-t); };
  CHECK(std::abs(
            integrate_semi_infinite(e, 1e-12, DecayHint::exponential(1.0))
                .value -
            1.0) < 1e-12);

  // int_0^inf (2pi/(e^{2pi t}-1) - e^{-2pi t}/t) dt = gamma
  auto g = [](double t) {
    return 2.0 * kPi * exp_kernel(2.0 * kPi * t) - std::expm1(-2.0 * kPi * t) / t;
  };
  CHECK(std::abs(integrate_semi_infinite(g, 1e-12,
                                         DecayHint::exponential(2.0 * kPi))
                     .value -
                 kGamma) < 1e-11);

  // Frullani with mu=1, nu=2.
  auto fr = [](double x) { return (std::expm1(-x) - std::expm1(-2.0 * x)) / x; };
  CHECK(std::abs(integrate_semi_infinite(fr, 1e-12, DecayHint::exponential(1.0))
                     .value -
                 std::log(2.0)) < 1e-12);
}

TEST_CASE("semi-infinite: hint violation on a divergent tail") {
  auto f = [](double x) { return 1.0 / (1.0 + x); };
  CHECK_THROWS_AS(integrate_semi_infinite(f, 1e-10, DecayHint::algebraic(2.0)),
                  HintViolationError);
}

TEST_CASE("oscillatory: frequency zero reduces to the plain tail") {
  OscillatorySpec spec;
  spec.envelope = [](double x) { return std::exp(-x); };
  spec.angular_frequency = 0.0;
  CHECK(std::abs(integrate_oscillatory_cos(spec, 1e-11).value - 1.0) < 1e-10);
}

TEST_CASE("oscillatory: cos x/(1+x^2) against the brute panel oracle") {
  const double brute = oracles::brute_cos_over_one_plus_x2();
  CHECK(std::abs(brute - kCosOverOnePlusX2) < 1e-9);

  OscillatorySpec spec;
  spec.envelope = [](double x) { return 1.0 / (1.0 + x * x); };
  spec.angular_frequency = 1.0;
  const double got = integrate_oscillatory_cos(spec, 1e-10).value;
  CHECK(std::abs(got - kCosOverOnePlusX2) < 1e-9);
}

TEST_CASE("oscillatory: self-reciprocal transform at n=1") {
  OscillatorySpec spec;
  spec.envelope = [](double x) { return specfun::self_reciprocal(x); };
  spec.angular_frequency = 2.0 * kPi;
  const double got = integrate_oscillatory_cos(spec, 1e-9).value;
  CHECK(std::abs(got - 0.21139216754923357) < 1e-9);  // (1-gamma)/2
}

TEST_CASE("oscillatory: sign-flip and growth rejections") {
  OscillatorySpec flip;
  flip.envelope = [](double x) {
    return (x < 30.0) ? 1.0 / (1.0 + x) : -1.0 / (1.0 + x);
  };
  flip.angular_frequency = 1.0;
  CHECK_THROWS_AS(integrate_oscillatory_cos(flip, 1e-8),
                  NonAlternatingError);

  OscillatorySpec grow;
  grow.envelope = [](double x) { return std::exp(0.5 * x); };
  grow.angular_frequency = 1.0;
  CHECK_THROWS_AS(integrate_oscillatory_cos(grow, 1e-8),
                  NonAlternatingError);
}

TEST_CASE("xi integral: evenness in alpha <-> 1/alpha and sign") {
  for (double alpha : {0.25, 0.7, 2.0, 4.0, 6.5, 9.0}) {
    const double a = quad::xi_integral(alpha).value.real();
    const double b = quad::xi_integral(1.0 / alpha).value.real();
    CHECK(std::abs(a - b) < 1e-12);
  }
  CHECK(quad::xi_integral(1.0).value.real() < 0.0);
}

TEST_CASE("ramanujan x integral: evenness and positivity") {
  const double plus = quad::ramanujan_x_integral(0.5 * std::log(2.0)).value.real();
  const double minus =
      quad::ramanujan_x_integral(-0.5 * std::log(2.0)).value.real();
  CHECK(std::abs(plus - minus) < 1e-12);
  CHECK(quad::ramanujan_x_integral(0.0).value.real() > 0.0);
}

TEST_CASE("binet_F: closed form, tail value, small-t limit") {
  // F equals its closed form at (1,1).
  const double closed =
      specfun::log_gamma(1.0) - 0.5 * std::log(1.0) + 1.0 -
      0.5 * Constants::log_two_pi;
  CHECK(std::abs(quad::binet_F(1.0, 1.0) - closed) < 1e-10);

  // The pure tail integral at z=1 equals 1 - log(2 pi)/2.
  auto tail = [](double t) {
    return exp_kernel_half(t) * std::exp(-t) / t;
  };
  CHECK(std::abs(integrate_semi_infinite(tail, 1e-12,
                                         DecayHint::exponential(1.0))
                     .value -
                 0.081061466795327219) < 1e-11);

  // t -> 0 limit: F(a,t) - (-gamma t - t log t + t) -> -log(2 pi a)/2.
  // At t = 1e-4 the omitted quadratic term contributes ~8.2e-9.
  const double t = 1e-4;
  const double small_t = -kGamma * t - t * std::log(t) + t;
  CHECK(std::abs(quad::binet_F(1.0, t) - small_t +
                 0.5 * Constants::log_two_pi) < 2e-8);
  // Vanishing case a = 1/(2 pi).
  CHECK(std::abs(quad::binet_F(1.0 / (2.0 * kPi), t) - small_t) < 2e-8);

  CHECK_THROWS_AS(quad::binet_F(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(quad::binet_F(1.0, 0.0), std::domain_error);
}

TEST_CASE("euler constant literal agrees with its quadrature") {
  auto f = [](double x) { return (1.0 + exp_kernel(x)) * std::exp(-x); };
  const double got =
      integrate_semi_infinite(f, 1e-13, DecayHint::exponential(1.0)).value;
  CHECK(std::abs(got - Constants::euler_gamma) < 1e-12);
}
