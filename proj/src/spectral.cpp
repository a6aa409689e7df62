#include "ptt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ptt/errors.hpp"
#include "ptt/parallel.hpp"

namespace ptt {

namespace {

const double kCbrtEps = std::cbrt(std::numeric_limits<double>::epsilon());

double clustering_tol(double tol, const std::array<Complex, 3>& roots) {
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));
  return std::max(tol, 8.0 * kCbrtEps * scale);
}

}  // namespace

const char* phase_kind_name(PhaseKind k) {
  switch (k) {
    case PhaseKind::ExactPT: return "exact";
    case PhaseKind::BrokenPT: return "broken";
    case PhaseKind::EP2: return "ep2";
    case PhaseKind::EP3: return "ep3";
  }
  return "?";
}

PhaseLabel classify_phase(const TrimerParams& params, double tol) {
  const auto [p, q] = characteristic_cubic(params);
  if (!std::isfinite(p) || !std::isfinite(q))
    throw std::invalid_argument("classify_phase: non-finite parameters");
  const double disc = cubic_discriminant(p, q);

  if (std::abs(p) <= tol && std::abs(q) <= tol)
    return {PhaseKind::EP3, Complex(0.0), disc};

  const auto roots = solve_depressed_cubic(p, q);
  const double gap_tol = clustering_tol(tol, roots);

  // Locate a coalescing pair (roots are sorted; a double root of a real cubic
  // is real, so coalescing roots are adjacent in the sort order).
  int a = -1;
  for (int i = 0; i < 2; ++i)
    if (std::abs(roots[i] - roots[i + 1]) <= gap_tol) a = i;

  if (a < 0) {
    return {disc > 0.0 ? PhaseKind::ExactPT : PhaseKind::BrokenPT, std::nullopt,
            disc};
  }
  if (std::abs(roots[0] - roots[2]) <= gap_tol)
    return {PhaseKind::EP3, Complex(0.0), disc};

  // Two clustered roots: confirm the Jordan structure (a Hermitian-style
  // degeneracy with a full eigenspace is not an exceptional point).
  const Complex coalesced = (roots[a] + roots[a + 1]) / 2.0;
  const auto decomp = eig3(build_hamiltonian(params), tol);
  for (const JordanBlock& b : decomp.blocks)
    if (b.size == 2) return {PhaseKind::EP2, coalesced, disc};
  if (decomp.blocks.size() == 1 && decomp.blocks[0].size == 3)
    return {PhaseKind::EP3, Complex(0.0), disc};
  return {PhaseKind::ExactPT, std::nullopt, disc};
}

double critical_gamma_ep2(double kappa, double j, double phi) {
  const double b = j * kappa * kappa * std::cos(phi);
  const double radicand =
      2.0 * kappa * kappa + j * j - 3.0 * std::cbrt(b * b);
  if (radicand < 0.0) throw NegativeRadicandError(radicand);
  return std::sqrt(radicand);
}

double critical_gamma_ep3(double kappa, double j, Boundary boundary) {
  if (boundary == Boundary::Chain) return std::sqrt(2.0) * kappa;
  return std::sqrt(j * j + 2.0 * kappa * kappa);
}

namespace {

TrimerParams with_axis(TrimerParams p, const std::string& name, double value) {
  if (name == "kappa") p.kappa = value;
  else if (name == "j") p.j_coupling = value;
  else if (name == "gamma") p.gamma = value;
  else if (name == "phi") p.flux = value;
  else throw std::invalid_argument("unknown sweep axis: " + name);
  return p;
}

double axis_value(const AxisSpec& ax, int i) {
  if (ax.samples < 2) throw std::invalid_argument("axis needs >= 2 samples");
  return ax.min + (ax.max - ax.min) * i / (ax.samples - 1);
}

}  // namespace

PhaseDiagramGrid phase_diagram(const AxisSpec& axis_x, const AxisSpec& axis_y,
                               const TrimerParams& fixed, double tol,
                               int workers) {
  if (axis_x.name == axis_y.name)
    throw std::invalid_argument("sweep axes must be distinct");
  PhaseDiagramGrid grid{axis_x, axis_y, fixed, {}};
  grid.nodes.resize(static_cast<size_t>(axis_x.samples) * axis_y.samples);
  parallel_for(axis_y.samples, workers, [&](int iy) {
    const double yv = axis_value(axis_y, iy);
    for (int ix = 0; ix < axis_x.samples; ++ix) {
      const double xv = axis_value(axis_x, ix);
      TrimerParams p = with_axis(with_axis(fixed, axis_x.name, xv), axis_y.name, yv);
      PhaseDiagramNode node{p, classify_phase(p, tol), spectrum(p)};
      grid.nodes[static_cast<size_t>(iy) * axis_x.samples + ix] = std::move(node);
    }
  });
  return grid;
}

std::array<Complex, 3> spectrum(const TrimerParams& params) {
  const auto [p, q] = characteristic_cubic(params);
  return solve_depressed_cubic(p, q);
}

namespace {

// Best of the six pairings between consecutive sweep steps.
std::array<int, 3> best_permutation(const std::array<Complex, 3>& prev,
                                    const std::array<Complex, 3>& next) {
  static constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  double best = std::numeric_limits<double>::infinity();
  std::array<int, 3> pick = perms[0];
  for (const auto& perm : perms) {
    double cost = 0.0;
    for (int i = 0; i < 3; ++i) cost += std::abs(next[perm[i]] - prev[i]);
    if (cost < best) {
      best = cost;
      pick = perm;
    }
  }
  return pick;
}

}  // namespace

std::vector<BandPoint> band_sweep(const TrimerParams& params, double phi_min,
                                  double phi_max, int samples) {
  if (samples < 2) throw std::invalid_argument("band_sweep needs >= 2 samples");
  std::vector<BandPoint> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double phi = phi_min + (phi_max - phi_min) * i / (samples - 1);
    TrimerParams p = params;
    p.flux = phi;
    auto e = spectrum(p);
    if (!out.empty()) {
      const auto perm = best_permutation(out.back().energies, e);
      e = {e[perm[0]], e[perm[1]], e[perm[2]]};
    }
    out.push_back({phi, e});
  }
  return out;
}

}  // namespace ptt
