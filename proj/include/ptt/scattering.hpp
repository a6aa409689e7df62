#pragma once

#include <optional>
#include <vector>

#include "ptt/types.hpp"

namespace ptt {

enum class ScatterSystem { Chain, Ring };

/// Scattering data at wave vector k on the lead band E = -2 kappa cos k.
/// When `singular` is set (common denominator below 1e-10) the coefficient and
/// probability fields are NaN and must not be printed as numbers.
struct ScatteringResult {
  double k = 0.0;
  Complex t_left{}, t_right{}, r_left{}, r_right{};
  double T = 0.0;        // |t|^2; equals for both inputs (transmission symmetry)
  double R_left = 0.0;   // |r_L|^2
  double R_right = 0.0;  // |r_R|^2
  bool singular = false;
};

/// Closed-form coefficients for the trimer chain embedded in uniform leads
/// (gamma in units of kappa = 1):
///   t = i sin k / (i sin k - e^{2ik} gamma^2 cos k),
/// with r_L and r_R differing by the sign of the gamma sin(2k) term.
/// Throws BandEdgeError unless 0 < k < pi.
ScatteringResult chain_scattering(double gamma, double k);

/// Closed-form coefficients for the trimer ring (valid for J = kappa = 1);
/// t_L and t_R differ only through e^{-+ i Phi}, and both reflections carry
/// the -1 background term. Throws BandEdgeError unless 0 < k < pi.
ScatteringResult ring_scattering(double gamma, double phi, double k);

/// Gain at which the ring's k = pi/4 spectral singularity occurs:
/// gamma = sqrt(sqrt(2) cos Phi + 2), always inside
/// [sqrt(2 - sqrt 2), sqrt(2 + sqrt 2)].
double singularity_gamma_ring(double phi);

/// Emission intensity contrast at a spectral singularity.
/// Chain (singular only at gamma = kappa): right-over-left constant 3 - 2*sqrt(2).
/// Ring: left-over-right (sqrt(2) gamma - 1)/(sqrt(2) gamma + 1).
/// Throws NotSingularError for a chain away from gamma = kappa.
double emission_contrast(double gamma, ScatterSystem system);

struct SweepRow {
  ScatterSystem system;
  double gamma;
  std::optional<double> phi;  // empty for the chain
  ScatteringResult result;
};

/// Cross product of the gamma (and phi) lists with the k samples, evaluated
/// through the closed forms; rows ordered as the nested loops run.
std::vector<SweepRow> scattering_sweep(ScatterSystem system,
                                       const std::vector<double>& gammas,
                                       const std::vector<double>& phis,
                                       const std::vector<double>& ks,
                                       int workers = 0);

/// Independent check: solves the stationary scattering problem on an explicit
/// finite lead-trimer-lead matrix (n_lead sites per lead) with incoming-wave
/// boundary conditions matched at two sites per side. Probabilities agree with
/// the closed forms; coefficient phases are site-indexing convention dependent.
/// Throws SingularSystemError near spectral singularities.
ScatteringResult numeric_scattering_oracle(ScatterSystem system, double gamma,
                                           double phi, double k, int n_lead = 60);

/// `count` interior wave vectors, uniform on (0, pi) excluding the band edges.
std::vector<double> interior_k_samples(int count);

}  // namespace ptt
