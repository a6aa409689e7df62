#include "ptt/scattering.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ptt/errors.hpp"
#include "ptt/parallel.hpp"

namespace ptt {

namespace {

constexpr double kSingularDen = 1e-10;
const double kNan = std::numeric_limits<double>::quiet_NaN();

void require_interior(double k) {
  if (!(k > 0.0 && k < kPi))
    throw BandEdgeError("wave vector k = " + std::to_string(k) +
                        " is not inside the band (0, pi)");
}

ScatteringResult flag_singular(double k) {
  ScatteringResult res;
  res.k = k;
  res.singular = true;
  const Complex cnan(kNan, kNan);
  res.t_left = res.t_right = res.r_left = res.r_right = cnan;
  res.T = res.R_left = res.R_right = kNan;
  return res;
}

}  // namespace

ScatteringResult chain_scattering(double gamma, double k) {
  require_interior(k);
  const double sink = std::sin(k);
  const double cosk = std::cos(k);
  const Complex den =
      Complex(0.0, sink) - std::exp(Complex(0.0, 2.0 * k)) * gamma * gamma * cosk;
  if (std::abs(den) < kSingularDen) return flag_singular(k);

  ScatteringResult res;
  res.k = k;
  res.t_left = res.t_right = Complex(0.0, sink) / den;
  res.r_left = (gamma * gamma * cosk + gamma * std::sin(2.0 * k)) / den;
  res.r_right = (gamma * gamma * cosk - gamma * std::sin(2.0 * k)) / den;
  res.T = std::norm(res.t_left);
  res.R_left = std::norm(res.r_left);
  res.R_right = std::norm(res.r_right);
  return res;
}

ScatteringResult ring_scattering(double gamma, double phi, double k) {
  require_interior(k);
  const double sink = std::sin(k);
  const double cosk = std::cos(k);
  const Complex isink(0.0, sink);
  const Complex em2ik = std::exp(Complex(0.0, -2.0 * k));
  const Complex den =
      Complex(0.0, 1.0) * em2ik * sink + std::cos(phi) + cosk * (1.0 - gamma * gamma);
  if (std::abs(den) < kSingularDen) return flag_singular(k);

  ScatteringResult res;
  res.k = k;
  res.t_left = isink * (std::exp(Complex(0.0, -phi)) + 2.0 * cosk) / den;
  res.t_right = isink * (std::exp(Complex(0.0, phi)) + 2.0 * cosk) / den;
  res.r_left = isink * (em2ik - Complex(0.0, 2.0 * gamma) * cosk) / den - 1.0;
  res.r_right = isink * (em2ik + Complex(0.0, 2.0 * gamma) * cosk) / den - 1.0;
  res.T = std::norm(res.t_left);
  res.R_left = std::norm(res.r_left);
  res.R_right = std::norm(res.r_right);
  return res;
}

double singularity_gamma_ring(double phi) {
  return std::sqrt(std::sqrt(2.0) * std::cos(phi) + 2.0);
}

double emission_contrast(double gamma, ScatterSystem system) {
  if (system == ScatterSystem::Chain) {
    if (std::abs(gamma - 1.0) > 1e-9)
      throw NotSingularError(
          "chain has its spectral singularity only at gamma = kappa");
    return 3.0 - 2.0 * std::sqrt(2.0);
  }
  return (std::sqrt(2.0) * gamma - 1.0) / (std::sqrt(2.0) * gamma + 1.0);
}

std::vector<SweepRow> scattering_sweep(ScatterSystem system,
                                       const std::vector<double>& gammas,
                                       const std::vector<double>& phis,
                                       const std::vector<double>& ks,
                                       int workers) {
  const std::vector<double> phi_list =
      (system == ScatterSystem::Chain) ? std::vector<double>{0.0} : phis;
  if (phi_list.empty() || gammas.empty() || ks.empty())
    throw std::invalid_argument("scattering_sweep: empty parameter list");

  const size_t total = gammas.size() * phi_list.size() * ks.size();
  std::vector<SweepRow> rows(total);
  parallel_for(static_cast<int>(total), workers, [&](int idx) {
    const size_t ik = idx % ks.size();
    const size_t ip = (idx / ks.size()) % phi_list.size();
    const size_t ig = idx / (ks.size() * phi_list.size());
    SweepRow row;
    row.system = system;
    row.gamma = gammas[ig];
    if (system == ScatterSystem::Ring) row.phi = phi_list[ip];
    row.result = (system == ScatterSystem::Chain)
                     ? chain_scattering(gammas[ig], ks[ik])
                     : ring_scattering(gammas[ig], phi_list[ip], ks[ik]);
    rows[idx] = row;
  });
  return rows;
}

ScatteringResult numeric_scattering_oracle(ScatterSystem system, double gamma,
                                           double phi, double k, int n_lead) {
  require_interior(k);
  if (n_lead < 50)
    throw std::invalid_argument("oracle needs n_lead >= 50 sites per lead");

  // Guard: near a spectral singularity the linear system degenerates.
  const Complex den_closed =
      (system == ScatterSystem::Chain)
          ? Complex(0.0, std::sin(k)) -
                std::exp(Complex(0.0, 2.0 * k)) * gamma * gamma * std::cos(k)
          : Complex(0.0, 1.0) * std::exp(Complex(0.0, -2.0 * k)) * std::sin(k) +
                std::cos(phi) + std::cos(k) * (1.0 - gamma * gamma);
  if (std::abs(den_closed) <= 1e-6)
    throw SingularSystemError("scattering coefficients diverge here");

  // Sites: left lead 0..n-1, trimer n..n+2, right lead n+3..2n+2. The left
  // lead site n-1 is lead coordinate j = 0 (so site s has j = s - (n-1)); the
  // right lead site n+3+m is coordinate j = m+1.
  const int n = n_lead;
  const int m = 2 * n + 3;
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(m, m);
  for (int i = 0; i + 1 < m; ++i) H(i, i + 1) = H(i + 1, i) = -1.0;
  H(n, n) = Complex(0.0, gamma);
  H(n + 2, n + 2) = Complex(0.0, -gamma);
  if (system == ScatterSystem::Ring) {
    H(n, n + 2) += -std::exp(Complex(0.0, phi));
    H(n + 2, n) += -std::exp(Complex(0.0, -phi));
  }
  const double energy = -2.0 * std::cos(k);

  // Unknowns x = [psi_0 .. psi_{m-1}, r, t]; bulk Schroedinger equations at
  // interior sites plus the incoming-wave ansatz at two sites per side.
  const auto solve_side = [&](bool right_input) {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(m + 2, m + 2);
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(m + 2);
    int row = 0;
    for (int i = 1; i + 1 < m; ++i, ++row) {
      A.row(row).head(m) = -H.row(i);
      A(row, i) += energy;
    }
    const auto match = [&](int site, Complex inc, int coef_col, Complex out_wave) {
      A(row, site) = 1.0;
      A(row, coef_col) = -out_wave;
      b(row) = inc;
      ++row;
    };
    const double jl0 = -(n - 1), jl1 = -(n - 2);  // outermost left-lead sites
    const double jr0 = n - 1, jr1 = n;            // outermost right-lead sites
    if (!right_input) {
      // left lead: e^{ikj} + r e^{-ikj}; right lead: t e^{ikj}
      match(0, std::exp(Complex(0.0, k * jl0)), m, std::exp(Complex(0.0, -k * jl0)));
      match(1, std::exp(Complex(0.0, k * jl1)), m, std::exp(Complex(0.0, -k * jl1)));
      match(m - 2, 0.0, m + 1, std::exp(Complex(0.0, k * jr0)));
      match(m - 1, 0.0, m + 1, std::exp(Complex(0.0, k * jr1)));
    } else {
      // right lead: e^{-ikj} + r e^{ikj}; left lead: t e^{-ikj}
      match(m - 2, std::exp(Complex(0.0, -k * jr0)), m, std::exp(Complex(0.0, k * jr0)));
      match(m - 1, std::exp(Complex(0.0, -k * jr1)), m, std::exp(Complex(0.0, k * jr1)));
      match(0, 0.0, m + 1, std::exp(Complex(0.0, -k * jl0)));
      match(1, 0.0, m + 1, std::exp(Complex(0.0, -k * jl1)));
    }
    const Eigen::VectorXcd x = A.partialPivLu().solve(b);
    return std::pair<Complex, Complex>(x(m), x(m + 1));  // (r, t)
  };

  const auto [rl, tl] = solve_side(false);
  const auto [rr, tr] = solve_side(true);

  ScatteringResult res;
  res.k = k;
  res.t_left = tl;
  res.t_right = tr;
  res.r_left = rl;
  res.r_right = rr;
  res.T = std::norm(tl);
  res.R_left = std::norm(rl);
  res.R_right = std::norm(rr);
  return res;
}

std::vector<double> interior_k_samples(int count) {
  if (count < 1) throw std::invalid_argument("need at least one k sample");
  std::vector<double> ks(count);
  for (int i = 0; i < count; ++i) ks[i] = kPi * (i + 1) / (count + 1);
  return ks;
}

}  // namespace ptt
