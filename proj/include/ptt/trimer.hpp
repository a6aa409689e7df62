#pragma once

#include <array>

#include "ptt/types.hpp"

namespace ptt {

struct SymmetryReport {
  bool pt_symmetric = false;
  bool chiral_symmetric = false;
  double pt_residual = 0.0;      // || P conj(H) P^{-1} - H ||, max-norm
  double chiral_residual = 0.0;  // || S H S^{-1} + H ||, max-norm
};

/// Trimer Hamiltonian in the site basis (gain, neutral, loss):
///   chain: off-diagonals -kappa on the two bonds, diagonal (i*gamma, 0, -i*gamma)
///   ring:  additionally -J e^{i*Phi} at (1,3) and -J e^{-i*Phi} at (3,1).
Mat3 build_hamiltonian(const TrimerParams& params);

/// PT residual uses P = anti-diagonal site mirror with complex conjugation;
/// chiral residual uses S with S a_j S^{-1} = (-1)^j a_{4-j}. Booleans hold
/// at residual <= 1e-12.
SymmetryReport check_symmetries(const Mat3& H);

/// Conjugation by diag(e^{i t1}, e^{i t2}, e^{i t3}); a similarity, so the
/// spectrum is preserved exactly.
Mat3 gauge_transform(const Mat3& H, const std::array<double, 3>& phases);

/// Coefficients (p, q) of the characteristic depressed cubic E^3 + pE + q = 0.
/// Ring: p = gamma^2 - J^2 - 2 kappa^2, q = 2 J kappa^2 cos(Phi); the chain is
/// the J = 0 limit.
struct CubicCoefficients {
  double p;
  double q;
};
CubicCoefficients characteristic_cubic(const TrimerParams& params);

}  // namespace ptt
