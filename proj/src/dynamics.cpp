#include "ptt/dynamics.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ptt/errors.hpp"

namespace ptt {

namespace {

Vec3 jordan_state(const SpectralDecomposition& d, const Vec3& coords, double t) {
  // psi~(t) blockwise: e^{-i L t} applied with the (-it), (-t^2/2) chain terms.
  Vec3 psi = Vec3::Zero();
  int col = 0;
  for (const JordanBlock& b : d.blocks) {
    const Complex phase = std::exp(Complex(0.0, -t) * b.eigenvalue);
    const Complex mit(0.0, -t);
    if (b.size == 1) {
      psi[col] = phase * coords[col];
    } else if (b.size == 2) {
      psi[col] = phase * (coords[col] + mit * coords[col + 1]);
      psi[col + 1] = phase * coords[col + 1];
    } else {
      psi[col] = phase * (coords[col] + mit * coords[col + 1] -
                          (t * t / 2.0) * coords[col + 2]);
      psi[col + 1] = phase * (coords[col + 1] + mit * coords[col + 2]);
      psi[col + 2] = phase * coords[col + 2];
    }
    col += b.size;
  }
  return psi;
}

void require_nonzero(const Vec3& psi0) {
  if (psi0.norm() == 0.0)
    throw std::invalid_argument("initial state must not be the zero vector");
}

}  // namespace

EvolutionResult propagate_analytic(const TrimerParams& params, const Vec3& psi0,
                                   const std::vector<double>& times, double tol) {
  require_nonzero(psi0);
  const auto decomp = eig3(build_hamiltonian(params), tol);
  const Vec3 coords = decomp.similarity_inv * psi0;

  EvolutionResult out;
  out.times = times;
  out.states.reserve(times.size());
  out.probability.reserve(times.size());
  for (const double t : times) {
    const Vec3 psi = decomp.similarity * jordan_state(decomp, coords, t);
    out.states.push_back(psi);
    out.probability.push_back(psi.squaredNorm());
  }
  return out;
}

EvolutionResult propagate_numeric(const Mat3& H, const Vec3& psi0, double t_end,
                                  double dt) {
  require_nonzero(psi0);
  if (dt <= 0.0 || t_end < 0.0)
    throw std::invalid_argument("propagate_numeric: dt > 0 and t_end >= 0 required");
  const double hnorm = H.cwiseAbs().rowwise().sum().maxCoeff();
  if (dt * hnorm > 0.1)
    throw StepTooLargeError("dt * ||H|| = " + std::to_string(dt * hnorm) +
                            " exceeds 0.1; reduce the step");

  const auto rhs = [&H](const Vec3& y) -> Vec3 { return Complex(0.0, -1.0) * (H * y); };
  const int steps = static_cast<int>(std::llround(t_end / dt));

  EvolutionResult out;
  out.times.reserve(steps + 1);
  out.states.reserve(steps + 1);
  out.probability.reserve(steps + 1);
  Vec3 y = psi0;
  out.times.push_back(0.0);
  out.states.push_back(y);
  out.probability.push_back(y.squaredNorm());
  for (int i = 0; i < steps; ++i) {
    const Vec3 k1 = rhs(y);
    const Vec3 k2 = rhs(y + (dt / 2.0) * k1);
    const Vec3 k3 = rhs(y + (dt / 2.0) * k2);
    const Vec3 k4 = rhs(y + dt * k3);
    y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.times.push_back((i + 1) * dt);
    out.states.push_back(y);
    out.probability.push_back(y.squaredNorm());
  }
  return out;
}

double chi_factor(double kappa, double j) {
  const double gc = std::sqrt(j * j + 2.0 * kappa * kappa);
  const double den = kappa * kappa + j * j + j * gc;
  if (den == 0.0) throw std::invalid_argument("chi_factor: zero denominator");
  return (2.0 * kappa * kappa + j * j + j * gc) / den;
}

const char* behavior_name(Behavior b) {
  switch (b) {
    case Behavior::Unchanged: return "unchanged";
    case Behavior::Oscillation: return "oscillation";
    case Behavior::PowerLaw: return "power-law";
    case Behavior::PowerLawWithOscillation: return "power-law-with-oscillation";
  }
  return "?";
}

GrowthInfo growth_order(const TrimerParams& params, const Vec3& psi0, double tol) {
  require_nonzero(psi0);
  const PhaseLabel label = classify_phase(params, tol);
  if (label.kind != PhaseKind::EP2 && label.kind != PhaseKind::EP3)
    throw NotAtEpError("growth_order requires parameters at an exceptional point");

  const auto decomp = eig3(build_hamiltonian(params), tol);
  const Vec3 coords = decomp.similarity_inv * psi0;
  const double weight_tol = 1e-10 * coords.norm();

  GrowthInfo info{0, Behavior::Unchanged, std::nullopt};
  int col = 0, coalesced_col = -1, simple_col = -1;
  const JordanBlock* coalesced = nullptr;
  const JordanBlock* simple = nullptr;
  for (const JordanBlock& b : decomp.blocks) {
    if (b.size >= 2) {
      coalesced = &b;
      coalesced_col = col;
    } else {
      simple = &b;
      simple_col = col;
    }
    col += b.size;
  }
  if (coalesced == nullptr)
    throw NotAtEpError("no Jordan block found at the claimed exceptional point");

  for (int i = 0; i < coalesced->size; ++i)
    if (std::abs(coords[coalesced_col + i]) > weight_tol) info.order = 2 * i;

  const bool simple_weighted =
      simple != nullptr && std::abs(coords[simple_col]) > weight_tol;
  if (simple_weighted)
    info.period = 2.0 * kPi / std::abs(coalesced->eigenvalue - simple->eigenvalue);

  if (info.order > 0) {
    info.tag = simple_weighted ? Behavior::PowerLawWithOscillation
                               : Behavior::PowerLaw;
  } else if (!simple_weighted) {
    info.tag = Behavior::Unchanged;
  } else {
    // Order zero with two weighted energies: P(t) carries the cross term
    // 2 Re[ c1* c2 <v1, v2> e^{-i(E2-E1)t} ]; it is constant only when the
    // weighted eigenvectors are orthogonal.
    const Complex cross = std::conj(coords[simple_col]) *
                          coords[coalesced_col] *
                          decomp.similarity.col(simple_col).dot(
                              decomp.similarity.col(coalesced_col));
    const double amp = 2.0 * std::abs(cross);
    if (amp > 1e-10 * coords.squaredNorm()) {
      info.tag = Behavior::Oscillation;
    } else {
      info.tag = Behavior::Unchanged;
    }
  }
  return info;
}

Vec3 reduced_order_condition(const TrimerParams& params, double tol) {
  const PhaseLabel label = classify_phase(params, tol);
  if (label.kind != PhaseKind::EP3)
    throw NotAtEpError("reduced_order_condition requires an EP3");
  const auto decomp = eig3(build_hamiltonian(params), tol);
  Vec3 row = decomp.similarity_inv.row(2).transpose();
  const double thresh = 1e-12 * row.cwiseAbs().maxCoeff();
  int lead = 0;
  while (lead < 2 && std::abs(row[lead]) <= thresh) ++lead;
  return row / row[lead];
}

PolyFit fit_probability_polynomial(const EvolutionResult& result) {
  const size_t n = result.times.size();
  if (n < 12 || result.probability.size() != n)
    throw std::invalid_argument("fit needs >= 12 sampled times");

  // Fit on t/t_max to keep the Vandermonde well conditioned.
  const double tmax = *std::max_element(result.times.begin(), result.times.end());
  const double scale = tmax > 0.0 ? tmax : 1.0;
  Eigen::MatrixXd V(n, 5);
  Eigen::VectorXd y(n);
  for (size_t i = 0; i < n; ++i) {
    const double u = result.times[i] / scale;
    double uk = 1.0;
    for (int j = 0; j < 5; ++j) {
      V(i, j) = uk;
      uk *= u;
    }
    y(i) = result.probability[i];
  }
  const Eigen::VectorXd beta = V.colPivHouseholderQr().solve(y);
  const double rms = std::sqrt((V * beta - y).squaredNorm() / n);

  double pscale = 0.0;
  for (size_t i = 0; i < n; ++i) pscale = std::max(pscale, std::abs(y(i)));
  if (rms > 1e-6 * std::max(1.0, pscale))
    throw OscillationPresentError(
        "probability is not polynomial in t (fit rms = " + std::to_string(rms) +
        "); a distinct real eigenvalue carries weight");

  PolyFit fit{};
  double sk = 1.0;
  for (int j = 0; j < 5; ++j) {
    fit.coeffs[j] = beta(j) / sk;
    sk *= scale;
  }
  fit.residual = rms;
  return fit;
}

std::vector<double> time_grid(double t_end, int samples) {
  if (samples < 2) throw std::invalid_argument("time_grid needs >= 2 samples");
  std::vector<double> t(samples);
  for (int i = 0; i < samples; ++i) t[i] = t_end * i / (samples - 1);
  return t;
}

}  // namespace ptt
