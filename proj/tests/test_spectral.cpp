#include <doctest.h>

#include <cmath>
#include <random>

#include "ptt/errors.hpp"
#include "ptt/spectral.hpp"

using namespace ptt;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

// Largest matched distance between two 3-element multisets.
double multiset_distance(const std::array<Complex, 3>& a,
                         const std::array<Complex, 3>& b) {
  static constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  double best = 1e300;
  for (const auto& perm : perms) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
    best = std::min(best, worst);
  }
  return best;
}

// Independent oracle for EP location: bisection on the discriminant in gamma.
double bisect_discriminant_zero(double kappa, double j, double phi, double lo,
                                double hi) {
  const auto disc = [&](double g) {
    const auto [p, q] =
        characteristic_cubic(TrimerParams::ring(kappa, j, g, phi));
    return cubic_discriminant(p, q);
  };
  REQUIRE(disc(lo) * disc(hi) < 0.0);
  for (int it = 0; it < 200; ++it) {
    const double mid = (lo + hi) / 2.0;
    if (disc(lo) * disc(mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) / 2.0;
}

}  // namespace

TEST_CASE("classify_phase: golden points") {
  CHECK(classify_phase(TrimerParams::chain(1.0, 1.0)).kind == PhaseKind::ExactPT);
  CHECK(classify_phase(TrimerParams::ring(1.0, 1.0, 0.1, 0.0)).kind ==
        PhaseKind::BrokenPT);

  const auto ep2 =
      classify_phase(TrimerParams::ring(0.5, 1.0, kSqrt3 / 2.0, -kPi / 3.0));
  CHECK(ep2.kind == PhaseKind::EP2);
  REQUIRE(ep2.coalesced_energy.has_value());
  CHECK(std::abs(*ep2.coalesced_energy - Complex(0.5)) < 1e-7);

  const auto ep3 = classify_phase(TrimerParams::chain(1.0, kSqrt2));
  CHECK(ep3.kind == PhaseKind::EP3);
  CHECK(std::abs(*ep3.coalesced_energy) == 0.0);
}

TEST_CASE("chain EP3 location is sharp at relative 1e-4") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.3, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double kappa = u(rng);
    CHECK(classify_phase(TrimerParams::chain(kappa, kSqrt2 * kappa)).kind ==
          PhaseKind::EP3);
    CHECK(classify_phase(TrimerParams::chain(kappa, kSqrt2 * kappa * (1 - 1e-4)))
              .kind == PhaseKind::ExactPT);
    CHECK(classify_phase(TrimerParams::chain(kappa, kSqrt2 * kappa * (1 + 1e-4)))
              .kind == PhaseKind::BrokenPT);
  }
}

TEST_CASE("hermitian degeneracy classifies as exact, not EP2") {
  CHECK(classify_phase(TrimerParams::ring(1.0, 1.0, 0.0, 0.0)).kind ==
        PhaseKind::ExactPT);
}

TEST_CASE("critical_gamma_ep2: paper values and the bisection oracle") {
  CHECK(std::abs(critical_gamma_ep2(0.5, 1.0, -kPi / 3.0) - kSqrt3 / 2.0) < 1e-12);
  // cos(pi/2) rounds to ~6e-17, so the EP3 value is met to ~1e-11
  CHECK(std::abs(critical_gamma_ep2(0.7, 1.3, kPi / 2.0) -
                 std::sqrt(1.3 * 1.3 + 2 * 0.7 * 0.7)) < 1e-10);
  // cos(phi) = 1/2 gives 1.0293 at kappa=1, J=1/2
  CHECK(critical_gamma_ep2(1.0, 0.5, kPi / 3.0) == doctest::Approx(1.0293).epsilon(1e-4));

  // independent bisection on the discriminant
  const double gc = critical_gamma_ep2(1.0, 0.5, 0.0);
  const double oracle = bisect_discriminant_zero(1.0, 0.5, 0.0, 0.9 * gc, 1.1 * gc);
  CHECK(gc == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("critical_gamma_ep2: radicand minimum at kappa=J, cos(phi)=1") {
  // AM-GM on {kappa^2, kappa^2, J^2} shows the radicand is >= 0 with equality
  // exactly at kappa = J, |cos phi| = 1 (the fragile uniform-ring point), so
  // NegativeRadicandError only guards against rounding at that boundary.
  for (const double t : {0.3, 1.0, 1.7}) {
    double gc = 1.0;
    try {
      gc = critical_gamma_ep2(t, t, 0.0);
    } catch (const NegativeRadicandError& e) {
      CHECK(e.radicand > -1e-12);
      gc = 0.0;
    }
    CHECK(std::abs(gc) < 1e-6);
  }
}

TEST_CASE("critical_gamma_ep3 values") {
  CHECK(critical_gamma_ep3(1.0, 0.0, Boundary::Chain) == doctest::Approx(kSqrt2));
  CHECK(critical_gamma_ep3(1.0, 0.5, Boundary::Ring) == doctest::Approx(1.5));
  CHECK(critical_gamma_ep3(0.0, 0.8, Boundary::Ring) == doctest::Approx(0.8));
}

TEST_CASE("Eq.-5 gamma is a discriminant root and classifies as an EP") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  while (checked < 500) {
    const double kappa = 0.2 + 1.8 * u(rng);
    const double j = 0.2 + 1.8 * u(rng);
    const double phi = 2.0 * kPi * u(rng);
    double gc;
    try {
      gc = critical_gamma_ep2(kappa, j, phi);
    } catch (const NegativeRadicandError&) {
      continue;
    }
    if (gc < 1e-3) continue;  // grazing case: island tip
    const auto [p, q] = characteristic_cubic(TrimerParams::ring(kappa, j, gc, phi));
    CHECK(std::abs(cubic_discriminant(p, q)) <= 1e-9);
    const auto label = classify_phase(TrimerParams::ring(kappa, j, gc, phi));
    const bool is_ep = label.kind == PhaseKind::EP2 || label.kind == PhaseKind::EP3;
    CHECK(is_ep);
    if (label.kind == PhaseKind::EP2) {
      // E1 = -2 E2 forced by the zero trace
      const auto e = spectrum(TrimerParams::ring(kappa, j, gc, phi));
      const Complex e2 = *label.coalesced_energy;
      // the simple eigenvalue is the one farthest from the coalesced pair
      Complex e1 = e[0];
      for (const auto& r : e)
        if (std::abs(r - e2) > std::abs(e1 - e2)) e1 = r;
      CHECK(std::abs(e1 + 2.0 * e2) <= 1e-9);
    }
    ++checked;
  }
}

TEST_CASE("chain spectrum formula {0, +-sqrt(2k^2-g^2)}") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double kappa = 0.2 + 1.8 * u(rng);
    const double gamma = 2.0 * kappa * (2.0 * u(rng) - 1.0);
    const auto e = spectrum(TrimerParams::chain(kappa, gamma));
    const Complex s = std::sqrt(Complex(2.0 * kappa * kappa - gamma * gamma));
    REQUIRE(multiset_distance(e, {-s, Complex(0.0), s}) <= 1e-10);
  }
}

TEST_CASE("discriminant sign agrees with the spectrum structure") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const TrimerParams p = TrimerParams::ring(
        0.1 + 2.0 * u(rng), 0.1 + 2.0 * u(rng), -2.0 + 4.0 * u(rng),
        2.0 * kPi * u(rng));
    const auto [pp, qq] = characteristic_cubic(p);
    const double disc = cubic_discriminant(pp, qq);
    if (std::abs(disc) < 1e-8) continue;
    const auto e = spectrum(p);
    double max_imag = 0.0;
    for (const auto& r : e) max_imag = std::max(max_imag, std::abs(r.imag()));
    if (disc > 0.0)
      REQUIRE(max_imag == 0.0);
    else
      REQUIRE(max_imag > 0.0);
  }
}

TEST_CASE("phase diagram: exact regions nest with flux, island at gamma/J=1/2") {
  const AxisSpec kappa_ax{"kappa", 0.0, 2.0, 51};
  const AxisSpec gamma_ax{"gamma", 0.0, 2.0, 51};
  TrimerParams fixed = TrimerParams::ring(1.0, 1.0, 0.0, 0.0);

  const auto grid_at = [&](double phi) {
    fixed.flux = phi;
    return phase_diagram(kappa_ax, gamma_ax, fixed);
  };
  const auto g0 = grid_at(0.0);
  const auto g4 = grid_at(kPi / 4.0);
  const auto g2 = grid_at(kPi / 2.0);
  int n0 = 0, n4 = 0, n2 = 0;
  for (size_t i = 0; i < g0.nodes.size(); ++i) {
    const bool e0 = g0.nodes[i].label.kind == PhaseKind::ExactPT;
    const bool e4 = g4.nodes[i].label.kind == PhaseKind::ExactPT;
    const bool e2 = g2.nodes[i].label.kind == PhaseKind::ExactPT;
    n0 += e0;
    n4 += e4;
    n2 += e2;
    if (e0) REQUIRE(e4);
    if (e4) REQUIRE(e2);
  }
  CHECK(n0 < n4);
  CHECK(n4 < n2);

  // gamma = 0 row is exact everywhere
  for (int ix = 0; ix < 51; ++ix)
    CHECK(g0.at(0, ix).label.kind == PhaseKind::ExactPT);

  // broken island around (phi = n pi, kappa = J) for gamma/J = 1/2
  const AxisSpec phi_ax{"phi", 0.0, 2.0 * kPi, 81};
  const AxisSpec kax{"kappa", 0.0, 2.0, 41};
  TrimerParams fx = TrimerParams::ring(1.0, 1.0, 0.5, 0.0);
  const auto island = phase_diagram(phi_ax, kax, fx);
  const auto kind_at = [&](double phi, double kappa) {
    int ip = static_cast<int>(std::lround(phi / (2.0 * kPi) * 80));
    int ik = static_cast<int>(std::lround(kappa / 2.0 * 40));
    return island.at(ik, ip).label.kind;
  };
  CHECK(kind_at(0.0, 1.0) == PhaseKind::BrokenPT);   // island interior
  CHECK(kind_at(kPi / 2.0, 1.0) == PhaseKind::ExactPT);
  CHECK(kind_at(0.0, 0.1) == PhaseKind::ExactPT);    // below the island
  CHECK(kind_at(0.0, 1.9) == PhaseKind::ExactPT);    // reentry above
}

TEST_CASE("band sweep: uniform ring real window and continuity") {
  const TrimerParams p = TrimerParams::ring(1.0, 1.0, 1.0, 0.0);
  const auto bands = band_sweep(p, 0.0, 2.0 * kPi, 401);
  for (const auto& bp : bands) {
    double max_imag = 0.0;
    for (const auto& e : bp.energies)
      max_imag = std::max(max_imag, std::abs(e.imag()));
    const bool inside = (bp.phi > 1.0 + 1e-2 && bp.phi < kPi - 1.0 - 1e-2) ||
                        (bp.phi > kPi + 1.0 + 1e-2 && bp.phi < 2 * kPi - 1.0 - 1e-2);
    const bool outside = (bp.phi < 1.0 - 1e-2) ||
                         (bp.phi > kPi - 1.0 + 1e-2 && bp.phi < kPi + 1.0 - 1e-2) ||
                         (bp.phi > 2 * kPi - 1.0 + 1e-2);
    if (inside) REQUIRE(max_imag < 1e-9);
    if (outside) REQUIRE(max_imag > 1e-4);
  }
  // continuity: consecutive points stay close after matching
  for (size_t i = 1; i < bands.size(); ++i)
    for (int b = 0; b < 3; ++b)
      CHECK(std::abs(bands[i].energies[b] - bands[i - 1].energies[b]) < 0.2);
}

TEST_CASE("band sweep: two coalesced energies along the EP2 curve") {
  for (const double phi : {0.3, 1.0, 2.0, 4.0}) {
    const double gc = critical_gamma_ep2(1.0, 0.5, phi);
    const auto e = spectrum(TrimerParams::ring(1.0, 0.5, gc, phi));
    const double d01 = std::abs(e[0] - e[1]);
    const double d12 = std::abs(e[1] - e[2]);
    CHECK(std::min(d01, d12) < 1e-6);
  }
}

TEST_CASE("hermitian flux sweep: three real bands, period 2 pi") {
  const auto bands = band_sweep(TrimerParams::ring(1.0, 0.7, 0.0, 0.0), 0.0,
                                2.0 * kPi, 101);
  for (const auto& bp : bands)
    for (const auto& e : bp.energies) CHECK(std::abs(e.imag()) < 1e-12);
  for (int b = 0; b < 3; ++b)
    CHECK(std::abs(bands.front().energies[b] - bands.back().energies[b]) < 1e-9);
}
