#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptt/linalg.hpp"
#include "ptt/trimer.hpp"

namespace ptt {

enum class PhaseKind { ExactPT, BrokenPT, EP2, EP3 };

const char* phase_kind_name(PhaseKind k);  // "exact", "broken", "ep2", "ep3"

struct PhaseLabel {
  PhaseKind kind;
  std::optional<Complex> coalesced_energy;  // set for EP2/EP3 (zero at EP3)
  double discriminant;                      // of the characteristic cubic
};

/// Phase of the trimer spectrum from the characteristic cubic: ExactPT for
/// three distinct real energies, BrokenPT for a conjugate pair, EP2/EP3 at
/// two/three-state coalescence (Jordan structure confirmed through eig3, so
/// Hermitian-style degeneracies stay ExactPT). Near-EP inputs within the
/// clustering tolerance are snapped to the EP.
PhaseLabel classify_phase(const TrimerParams& params, double tol = kDefaultTol);

/// Critical gain for a two-state coalescence of the ring,
///   gamma_c = sqrt(2 kappa^2 + J^2 - 3 cbrt((J kappa^2 cos Phi)^2)),
/// which reduces to the EP3 value sqrt(J^2 + 2 kappa^2) at cos(Phi) = 0.
/// Throws NegativeRadicandError when no real critical gain exists.
double critical_gamma_ep2(double kappa, double j, double phi);

/// Critical gain for the three-state coalescence: sqrt(2)*kappa for the chain,
/// sqrt(J^2 + 2 kappa^2) for the ring (realized at Phi = 2n*pi +/- pi/2).
double critical_gamma_ep3(double kappa, double j, Boundary boundary);

struct AxisSpec {
  std::string name;  // one of kappa, j, gamma, phi
  double min = 0.0;
  double max = 1.0;
  int samples = 2;
};

struct PhaseDiagramNode {
  TrimerParams params;
  PhaseLabel label;
  std::array<Complex, 3> energies;
};

struct PhaseDiagramGrid {
  AxisSpec axis_x, axis_y;       // x varies fastest (row-major in y)
  TrimerParams fixed;
  std::vector<PhaseDiagramNode> nodes;  // axis_y.samples * axis_x.samples
  const PhaseDiagramNode& at(int iy, int ix) const {
    return nodes[static_cast<size_t>(iy) * axis_x.samples + ix];
  }
};

/// classify_phase on every grid node. Nodes are independent; execution may be
/// partitioned across workers but output ordering is always row-major.
PhaseDiagramGrid phase_diagram(const AxisSpec& axis_x, const AxisSpec& axis_y,
                               const TrimerParams& fixed,
                               double tol = kDefaultTol, int workers = 0);

struct BandPoint {
  double phi;
  std::array<Complex, 3> energies;  // continuity-ordered along the sweep
};

/// Eigenvalues along a flux sweep, matched step to step by minimal total
/// pairing distance so the bands plot as continuous curves.
std::vector<BandPoint> band_sweep(const TrimerParams& params, double phi_min,
                                  double phi_max, int samples);

/// Trimer energies sorted by (real, imaginary); plain spectrum, no structure.
std::array<Complex, 3> spectrum(const TrimerParams& params);

}  // namespace ptt
