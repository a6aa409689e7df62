#include <doctest.h>

#include <cmath>
#include <random>

#include "ptt/dynamics.hpp"
#include "ptt/errors.hpp"

using namespace ptt;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

const TrimerParams kChainEp3 = TrimerParams::chain(1.0, kSqrt2);
const TrimerParams kRingEp3 = TrimerParams::ring(1.0, 0.5, 1.5, kPi / 2.0);
const TrimerParams kRingEp2Minus =
    TrimerParams::ring(0.5, 1.0, kSqrt3 / 2.0, -kPi / 3.0);
const TrimerParams kRingEp2Plus =
    TrimerParams::ring(0.5, 1.0, kSqrt3 / 2.0, kPi / 3.0);

Vec3 state(Complex a, Complex b, Complex c) {
  Vec3 v;
  v << a, b, c;
  return v;
}

void check_polynomial(const TrimerParams& params, const Vec3& psi0,
                      const std::array<double, 5>& alpha, double rel_tol) {
  const auto grid = time_grid(10.0, 201);
  const auto result = propagate_analytic(params, psi0, grid);
  for (size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    double expect = 0.0, tk = 1.0;
    for (int n = 0; n < 5; ++n) {
      expect += alpha[n] * tk;
      tk *= t;
    }
    REQUIRE(std::abs(result.probability[i] - expect) <= rel_tol * expect);
  }
}

}  // namespace

TEST_CASE("EP3 probability polynomials (analytic path)") {
  check_polynomial(kChainEp3, state(1, 0, 0),
                   {1.0, 2.0 * kSqrt2, 4.0, 2.0 * kSqrt2, 1.0}, 1e-9);
  check_polynomial(kChainEp3, state(1.0 / kSqrt2, 0, 1.0 / kSqrt2),
                   {1.0, 0.0, 4.0, 0.0, 0.0}, 1e-9);
  check_polynomial(kRingEp3, state(1, 0, 0), {1.0, 3.0, 4.5, 3.0, 1.5}, 1e-9);
  check_polynomial(kRingEp3, state(0, 1, 0), {1.0, 0.0, 0.0, 0.0, 1.5}, 1e-9);
  check_polynomial(kRingEp3, state(1.0 / kSqrt2, 0, 1.0 / kSqrt2),
                   {1.0, 0.0, 3.0, 0.0, 0.0}, 1e-9);
}

TEST_CASE("stationary eigenstate keeps P(t) = 1") {
  // exact-phase chain: eigenstate of the middle zero mode
  const TrimerParams p = TrimerParams::chain(1.0, 0.5);
  const auto d = eig3(build_hamiltonian(p));
  // pick any real-eigenvalue eigenvector
  const auto result = propagate_analytic(p, d.eigenvectors[0], time_grid(20.0, 101));
  for (const double prob : result.probability)
    CHECK(std::abs(prob - 1.0) < 1e-9);
}

TEST_CASE("numeric oracle agrees with the analytic propagation") {
  const std::vector<std::pair<TrimerParams, Vec3>> cases = {
      {kChainEp3, state(1, 0, 0)},
      {kChainEp3, state(1.0 / kSqrt2, 0, 1.0 / kSqrt2)},
      {kRingEp3, state(1, 0, 0)},
      {kRingEp3, state(0, 1, 0)},
      {kRingEp2Minus, state(1.0 / kSqrt3, 1.0 / kSqrt3, 1.0 / kSqrt3)},
  };
  for (const auto& [params, psi0] : cases) {
    const auto numeric =
        propagate_numeric(build_hamiltonian(params), psi0, 20.0, 1e-3);
    const auto analytic = propagate_analytic(params, psi0, numeric.times);
    double worst = 0.0;
    for (size_t i = 0; i < numeric.times.size(); i += 50)
      worst = std::max(worst, (numeric.states[i] - analytic.states[i])
                                  .cwiseAbs()
                                  .maxCoeff());
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("numeric propagation basics") {
  const Mat3 zero = Mat3::Zero();
  const Vec3 psi0 = state(0.3, Complex(0, 0.4), -0.2);
  const auto r = propagate_numeric(zero, psi0, 5.0, 1e-2);
  CHECK((r.states.back() - psi0).norm() == 0.0);

  // Hermitian: probability conserved to 1e-9 over t = 100
  const Mat3 H = build_hamiltonian(TrimerParams::chain(1.0, 0.0));
  const auto h = propagate_numeric(H, state(1, 0, 0), 100.0, 1e-3);
  for (size_t i = 0; i < h.probability.size(); i += 1000)
    CHECK(std::abs(h.probability[i] - 1.0) < 1e-9);

  CHECK_THROWS_AS(propagate_numeric(H, psi0, 1.0, 0.2), StepTooLargeError);
}

TEST_CASE("chi factor") {
  CHECK(chi_factor(1.0, 0.5) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(chi_factor(0.0, 0.7) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(chi_factor(1.0, 1.0) ==
        doctest::Approx((3.0 + kSqrt3) / (2.0 + kSqrt3)).epsilon(1e-14));

  // cross-check: fit alpha_4 from numeric evolution of [0,1,0] at the ring EP3
  const auto numeric = propagate_numeric(build_hamiltonian(kRingEp3),
                                         state(0, 1, 0), 10.0, 1e-3);
  EvolutionResult sampled;
  for (size_t i = 0; i < numeric.times.size(); i += 50) {
    sampled.times.push_back(numeric.times[i]);
    sampled.probability.push_back(numeric.probability[i]);
  }
  const auto fit = fit_probability_polynomial(sampled);
  CHECK(std::abs(fit.coeffs[4] - chi_factor(1.0, 0.5)) < 1e-6);
}

TEST_CASE("growth order and behavior tags at the EPs") {
  // chain EP3
  auto g = growth_order(kChainEp3, state(1, 0, 0));
  CHECK(g.order == 4);
  CHECK(g.tag == Behavior::PowerLaw);

  g = growth_order(kChainEp3, state(1.0 / kSqrt2, 0, 1.0 / kSqrt2));
  CHECK(g.order == 2);
  CHECK(g.tag == Behavior::PowerLaw);

  // the four EP2 behaviors
  g = growth_order(kRingEp2Minus, state(1, 0, 0));
  CHECK(g.order == 2);
  CHECK(g.tag == Behavior::PowerLawWithOscillation);
  REQUIRE(g.period.has_value());
  CHECK(*g.period == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-9));

  g = growth_order(kRingEp2Minus,
                   state(1.0 / kSqrt2, -1.0 / kSqrt2, 0));
  CHECK(g.order == 2);
  CHECK(g.tag == Behavior::PowerLaw);

  g = growth_order(kRingEp2Minus,
                   state(1.0 / kSqrt3, 1.0 / kSqrt3, 1.0 / kSqrt3));
  CHECK(g.order == 0);
  CHECK(g.tag == Behavior::Oscillation);

  g = growth_order(kRingEp2Plus, state(1.0 / kSqrt2, 0, 1.0 / kSqrt2));
  CHECK(g.order == 0);
  CHECK(g.tag == Behavior::Unchanged);

  CHECK_THROWS_AS(growth_order(TrimerParams::chain(1.0, 0.5), state(1, 0, 0)),
                  NotAtEpError);
}

TEST_CASE("EP2 oscillation law P(t) = [25 - 16 cos(3t/2)]/9 and its period") {
  const Vec3 psi0 = state(1.0 / kSqrt3, 1.0 / kSqrt3, 1.0 / kSqrt3);
  const auto grid = time_grid(15.0, 601);
  const auto r = propagate_analytic(kRingEp2Minus, psi0, grid);
  for (size_t i = 0; i < grid.size(); ++i) {
    const double expect = (25.0 - 16.0 * std::cos(1.5 * grid[i])) / 9.0;
    REQUIRE(std::abs(r.probability[i] - expect) <= 1e-8);
  }
  const double period = 4.0 * kPi / 3.0;
  for (double t = 0.0; t < 8.0; t += 0.37) {
    const auto a = propagate_analytic(kRingEp2Minus, psi0, {t, t + period});
    CHECK(std::abs(a.probability[1] - a.probability[0]) <= 1e-8);
  }
}

TEST_CASE("EP2 conservation case: P = 1 with equal gain/loss site probabilities") {
  const Vec3 psi0 = state(1.0 / kSqrt2, 0, 1.0 / kSqrt2);
  const auto grid = time_grid(15.0, 301);
  const auto r = propagate_analytic(kRingEp2Plus, psi0, grid);
  for (size_t i = 0; i < grid.size(); ++i) {
    REQUIRE(std::abs(r.probability[i] - 1.0) <= 1e-8);
    const double p1 = std::norm(r.states[i][0]);
    const double p3 = std::norm(r.states[i][2]);
    REQUIRE(std::abs(p1 - p3) <= 1e-8);
  }
}

TEST_CASE("reduced-order condition row functionals") {
  const Vec3 chain_row = reduced_order_condition(kChainEp3);
  CHECK(std::abs(chain_row[0] - Complex(1.0)) < 1e-8);
  CHECK(std::abs(chain_row[1] - Complex(0.0, kSqrt2)) < 1e-8);
  CHECK(std::abs(chain_row[2] - Complex(-1.0)) < 1e-8);

  const Vec3 ring_plus = reduced_order_condition(kRingEp3);
  CHECK(std::abs(ring_plus[0] - Complex(1.0)) < 1e-8);
  CHECK(std::abs(ring_plus[1] - Complex(0.0, 1.0)) < 1e-8);
  CHECK(std::abs(ring_plus[2] - Complex(-1.0)) < 1e-8);

  const Vec3 ring_minus = reduced_order_condition(
      TrimerParams::ring(1.0, 0.5, 1.5, -kPi / 2.0));
  CHECK(std::abs(ring_minus[0] - Complex(1.0)) < 1e-8);
  CHECK(std::abs(ring_minus[1] - Complex(0.0, 2.0)) < 1e-8);
  CHECK(std::abs(ring_minus[2] - Complex(-1.0)) < 1e-8);

  CHECK_THROWS_AS(reduced_order_condition(kRingEp2Minus), NotAtEpError);
}

TEST_CASE("growth-order dichotomy at the EP3") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Vec3 row = reduced_order_condition(kChainEp3);
  for (int i = 0; i < 200; ++i) {
    Vec3 psi = state(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                     Complex(u(rng), u(rng)));
    psi.normalize();
    CHECK(growth_order(kChainEp3, psi).order == 4);

    // project onto the reduced-order hyperplane: row . psi = 0
    // (bilinear functional, not the Hermitian inner product)
    const Complex val = row[0] * psi[0] + row[1] * psi[1] + row[2] * psi[2];
    Vec3 adj = psi;
    adj[1] -= val / row[1];
    CHECK(growth_order(kChainEp3, adj).order <= 2);
  }
  const auto d = eig3(build_hamiltonian(kChainEp3));
  CHECK(growth_order(kChainEp3, d.eigenvectors[0]).order == 0);
}

TEST_CASE("polynomial fit golden coefficients and the oscillation refusal") {
  const auto grid = time_grid(10.0, 201);
  auto r = propagate_analytic(kChainEp3, state(1, 0, 0), grid);
  auto fit = fit_probability_polynomial(r);
  const std::array<double, 5> expect{1.0, 2.0 * kSqrt2, 4.0, 2.0 * kSqrt2, 1.0};
  for (int n = 0; n < 5; ++n)
    CHECK(std::abs(fit.coeffs[n] - expect[n]) < 1e-6);

  r = propagate_analytic(kRingEp3, state(1, 0, 0), grid);
  fit = fit_probability_polynomial(r);
  const std::array<double, 5> expect_ring{1.0, 3.0, 4.5, 3.0, 1.5};
  for (int n = 0; n < 5; ++n)
    CHECK(std::abs(fit.coeffs[n] - expect_ring[n]) < 1e-6);

  // stationary state: (1, 0, 0, 0, 0)
  const auto d = eig3(build_hamiltonian(TrimerParams::chain(1.0, 0.5)));
  r = propagate_analytic(TrimerParams::chain(1.0, 0.5), d.eigenvectors[0], grid);
  fit = fit_probability_polynomial(r);
  CHECK(std::abs(fit.coeffs[0] - 1.0) < 1e-9);
  for (int n = 1; n < 5; ++n) CHECK(std::abs(fit.coeffs[n]) < 1e-9);

  // oscillating series refused
  r = propagate_analytic(kRingEp2Minus,
                         state(1.0 / kSqrt3, 1.0 / kSqrt3, 1.0 / kSqrt3), grid);
  CHECK_THROWS_AS(fit_probability_polynomial(r), OscillationPresentError);
}

TEST_CASE("chain EP3 chirality: U(t) equals the truncated series exactly") {
  const Mat3 H = build_hamiltonian(kChainEp3);
  const auto d = eig3(H);
  for (const double t : {0.5, 2.0, 6.0}) {
    const Mat3 U = propagator(d, t);
    const Mat3 series = Mat3::Identity() - Complex(0.0, t) * H -
                        (t * t / 2.0) * (H * H);
    CHECK(max_norm(U - series) <= 1e-12 * std::max(1.0, max_norm(series)));
  }
}

TEST_CASE("oracle agreement across phases on a fuzz corpus") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    TrimerParams p;
    switch (i % 4) {
      case 0: p = TrimerParams::chain(0.5 + u(rng), 2.0 * u(rng)); break;
      case 1: p = TrimerParams::ring(0.5 + u(rng), 0.3 + u(rng), 2.0 * u(rng),
                                     2.0 * kPi * u(rng)); break;
      case 2: p = kChainEp3; break;
      default: p = kRingEp2Minus; break;
    }
    Vec3 psi = state(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                     Complex(u(rng), u(rng)));
    psi.normalize();
    const auto numeric = propagate_numeric(build_hamiltonian(p), psi, 20.0, 1e-3);
    const auto analytic = propagate_analytic(p, psi, numeric.times);
    for (size_t s = 0; s < numeric.times.size(); s += 500)
      REQUIRE((numeric.states[s] - analytic.states[s]).cwiseAbs().maxCoeff() <=
              1e-6);
  }
}
