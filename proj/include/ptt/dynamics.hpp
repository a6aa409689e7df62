#pragma once

#include <optional>
#include <vector>

#include "ptt/spectral.hpp"

namespace ptt {

struct Oscillation {
  double amplitude;
  double frequency;  // |E2 - E1|, the energy gap
};

struct EvolutionResult {
  std::vector<double> times;       // units of 1/kappa
  std::vector<Vec3> states;        // complex 3-amplitudes per time
  std::vector<double> probability; // P(t) = |Psi(t)|^2
  std::optional<std::array<double, 5>> poly_coeffs;  // alpha_0..alpha_4
  std::optional<Oscillation> oscillation;
};

/// Exact time evolution through the Jordan decomposition: states are
/// V exp(-i h t) V^{-1} Psi(0), with the Jordan coordinates resolved once.
/// Works in the exact, broken, and EP regimes alike.
EvolutionResult propagate_analytic(const TrimerParams& params, const Vec3& psi0,
                                   const std::vector<double>& times,
                                   double tol = kDefaultTol);

/// Classical fixed-step 4th-order integration of i dPsi/dt = H Psi; the
/// independent oracle for the analytic path. Global error O(dt^4).
/// Throws StepTooLargeError when dt * ||H|| > 0.1.
EvolutionResult propagate_numeric(const Mat3& H, const Vec3& psi0, double t_end,
                                  double dt = 1e-3);

/// Growth coefficient of P(t) = 1 + chi (kappa t)^4 for the central-site
/// excitation at the ring EP3:
///   chi = (2 kappa^2 + J^2 + J gamma_c) / (kappa^2 + J^2 + J gamma_c),
/// with gamma_c = sqrt(J^2 + 2 kappa^2).
double chi_factor(double kappa, double j);

enum class Behavior { Unchanged, Oscillation, PowerLaw, PowerLawWithOscillation };

const char* behavior_name(Behavior b);

struct GrowthInfo {
  int order;        // leading power of t in P(t): 0, 2 or 4
  Behavior tag;
  std::optional<double> period;  // 2*pi/|E2-E1| when two energies carry weight
};

/// Leading power-law order and dynamical behavior of P(t) at an exceptional
/// point, read off the Jordan coordinates of the initial state.
/// Throws NotAtEpError when params are not within tolerance of an EP.
GrowthInfo growth_order(const TrimerParams& params, const Vec3& psi0,
                        double tol = kDefaultTol);

/// Row functional whose vanishing on Psi(0) removes the top Jordan coordinate
/// at an EP3, capping the probability growth at quadratic order. Normalized so
/// the first entry is 1; for the chain it equals (1, i*sqrt(2), -1).
Vec3 reduced_order_condition(const TrimerParams& params, double tol = kDefaultTol);

struct PolyFit {
  std::array<double, 5> coeffs;  // alpha_0..alpha_4 in the units of `times`
  double residual;               // rms of the fit residual
};

/// Least-squares fit of P(t) to sum_n alpha_n t^n, n = 0..4. Needs >= 12
/// samples. Throws OscillationPresentError when the series is not polynomial
/// (detected through the fit residual).
PolyFit fit_probability_polynomial(const EvolutionResult& result);

/// Uniform grid of `samples` points on [0, t_end].
std::vector<double> time_grid(double t_end, int samples);

}  // namespace ptt
