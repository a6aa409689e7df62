#pragma once

#include <vector>

#include "ptt/types.hpp"

namespace ptt {

struct PacketSpec {
  double alpha = 0.02;  // Gaussian width parameter, 0 < alpha < 1
  int center = 0;       // N_c, site index of the packet center
  double k = -kPi / 4;  // carrier wave vector; sign sets the travel direction
};

/// Finite 1D lead-trimer-lead lattice: uniform couplings -kappa everywhere,
/// the trimer's gain/loss (and ring closure) applied at the embedded sites.
struct LatticeConfig {
  int n_sites = 1200;
  int embed_position = 599;  // site index of trimer site 1 (gain)
  TrimerParams params;       // params.kappa is also the lead coupling
  PacketSpec packet;
};

struct LatticeState {
  std::vector<double> re, im;  // split complex amplitude per site
  double time = 0.0;

  std::size_t size() const { return re.size(); }
  double probability(std::size_t site) const {
    return re[site] * re[site] + im[site] * im[site];
  }
  double total_probability() const;
};

/// Gaussian wave packet (sqrt(pi)/alpha)^{-1/2} e^{-(alpha^2/2)(j-Nc)^2} e^{ikj}.
/// Total probability is within 1e-6 of 1 for alpha << 1; group velocity is
/// 2 kappa sin k. Throws PacketClippedError when a boundary site already
/// carries probability above 1e-12.
LatticeState gaussian_packet(const LatticeConfig& config);

struct EvolveOptions {
  double t_end = 0.0;
  double dt = 5e-3;
  std::vector<double> snapshot_times;     // rounded to the step grid
  double boundary_threshold = 1e-8;       // fraction of the total probability
  int boundary_check_interval = 200;      // steps between contamination checks
};

struct EvolveOutcome {
  LatticeState state;                  // at t_end
  std::vector<LatticeState> snapshots; // one per requested time, in order
  double max_boundary_fraction = 0.0;  // largest sampled boundary fraction
};

/// Fixed-step 4th-order integration of the lattice Schroedinger equation with
/// banded products (cost linear in n_sites per step). The boundary check
/// compares the boundary-site probability against the current total (the
/// norm is not conserved for gamma != 0) and throws
/// BoundaryContaminationError past the threshold. dt must satisfy
/// dt * ||H|| <= 0.1 (StepTooLargeError otherwise).
EvolveOutcome evolve_lattice(const LatticeConfig& config, const LatticeState& state,
                             const EvolveOptions& options);

struct PlatformMeasurement {
  double height_left;
  double height_right;
  double ratio;  // height_right / height_left
};

struct SiteRange {
  int begin;  // inclusive
  int end;    // exclusive
};

/// Median probability over each region (robust to the ripples near platform
/// fronts). Throws EmptyRegionError for empty or out-of-range regions.
PlatformMeasurement measure_platform(const LatticeState& snapshot,
                                     SiteRange region_left, SiteRange region_right);

/// Default measurement regions: 100 sites starting 150 sites beyond the trimer.
SiteRange default_left_region(const LatticeConfig& config);
SiteRange default_right_region(const LatticeConfig& config);

}  // namespace ptt
