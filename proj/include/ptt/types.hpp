#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ptt {

using Complex = std::complex<double>;
using Mat3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3cd;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Default tolerance for exceptional-point detection and rank decisions,
/// in kappa = 1 energy units.
inline constexpr double kDefaultTol = 1e-9;

enum class Boundary { Chain, Ring };

/// Physical configuration of a three-site trimer. Energies are measured in
/// units of the intra-chain coupling kappa; site 1 carries the gain +i*gamma,
/// site 3 the loss -i*gamma.
struct TrimerParams {
  double kappa = 1.0;       // intra-chain coupling (>= 0)
  double j_coupling = 0.0;  // ring-closure coupling J (>= 0)
  double gamma = 0.0;       // balanced gain/loss rate
  double flux = 0.0;        // effective magnetic flux Phi, radians
  Boundary boundary = Boundary::Chain;

  static TrimerParams chain(double kappa, double gamma) {
    return TrimerParams{kappa, 0.0, gamma, 0.0, Boundary::Chain};
  }
  static TrimerParams ring(double kappa, double j, double gamma, double flux) {
    return TrimerParams{kappa, j, gamma, flux, Boundary::Ring};
  }

  /// Chain boundaries store j_coupling = flux = 0; flux is wrapped into [0, 2*pi).
  TrimerParams normalized() const {
    TrimerParams p = *this;
    if (p.boundary == Boundary::Chain) {
      p.j_coupling = 0.0;
      p.flux = 0.0;
    } else {
      p.flux = std::fmod(p.flux, 2.0 * kPi);
      if (p.flux < 0.0) p.flux += 2.0 * kPi;
    }
    return p;
  }
};

}  // namespace ptt
