#include "ptt/trimer.hpp"

#include <cmath>

#include "ptt/linalg.hpp"

namespace ptt {

Mat3 build_hamiltonian(const TrimerParams& params) {
  const TrimerParams p = params.normalized();
  Mat3 H = Mat3::Zero();
  H(0, 0) = Complex(0.0, p.gamma);
  H(2, 2) = Complex(0.0, -p.gamma);
  H(0, 1) = H(1, 0) = -p.kappa;
  H(1, 2) = H(2, 1) = -p.kappa;
  if (p.boundary == Boundary::Ring) {
    H(0, 2) = -p.j_coupling * std::exp(Complex(0.0, p.flux));
    H(2, 0) = -p.j_coupling * std::exp(Complex(0.0, -p.flux));
  }
  return H;
}

SymmetryReport check_symmetries(const Mat3& H) {
  Mat3 P = Mat3::Zero();
  P(0, 2) = P(1, 1) = P(2, 0) = 1.0;
  Mat3 S = Mat3::Zero();
  S(2, 0) = S(0, 2) = -1.0;
  S(1, 1) = 1.0;

  SymmetryReport rep;
  rep.pt_residual = max_norm(P * H.conjugate() * P - H);
  rep.chiral_residual = max_norm(S * H * S + H);
  rep.pt_symmetric = rep.pt_residual <= 1e-12;
  rep.chiral_symmetric = rep.chiral_residual <= 1e-12;
  return rep;
}

Mat3 gauge_transform(const Mat3& H, const std::array<double, 3>& phases) {
  Mat3 D = Mat3::Zero();
  for (int i = 0; i < 3; ++i) D(i, i) = std::exp(Complex(0.0, phases[i]));
  Mat3 Dinv = Mat3::Zero();
  for (int i = 0; i < 3; ++i) Dinv(i, i) = std::exp(Complex(0.0, -phases[i]));
  return D * H * Dinv;
}

CubicCoefficients characteristic_cubic(const TrimerParams& params) {
  const TrimerParams p = params.normalized();
  const double j = (p.boundary == Boundary::Ring) ? p.j_coupling : 0.0;
  const double cosphi = (p.boundary == Boundary::Ring) ? std::cos(p.flux) : 1.0;
  return {p.gamma * p.gamma - j * j - 2.0 * p.kappa * p.kappa,
          2.0 * j * p.kappa * p.kappa * cosphi};
}

}  // namespace ptt
