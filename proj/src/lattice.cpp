#include "ptt/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ptt/errors.hpp"
#include "ptt/kernels.hpp"

namespace ptt {

namespace {

// Local corrections on top of the uniform-chain kernel: imaginary on-site
// potentials and the ring's a1<->a3 coupling. For the RHS of
// i dpsi/dt = H psi, a diagonal term i*g contributes +g*psi to dpsi/dt and a
// coupling entry c psi_src contributes -i*c psi_src.
struct TrimerCorrections {
  int gain_site, loss_site;
  double gamma;
  bool ring;
  Complex ring_fwd;  // -i * (-J e^{+i Phi}), applied to gain from loss site
  Complex ring_bwd;  // -i * (-J e^{-i Phi}), applied to loss from gain site

  explicit TrimerCorrections(const LatticeConfig& cfg) {
    const TrimerParams p = cfg.params.normalized();
    gain_site = cfg.embed_position;
    loss_site = cfg.embed_position + 2;
    gamma = p.gamma;
    ring = p.boundary == Boundary::Ring;
    const Complex mi(0.0, -1.0);
    ring_fwd = mi * (-p.j_coupling * std::exp(Complex(0.0, p.flux)));
    ring_bwd = mi * (-p.j_coupling * std::exp(Complex(0.0, -p.flux)));
  }

  void apply(const double* re, const double* im, double* out_re,
             double* out_im) const {
    out_re[gain_site] += gamma * re[gain_site];
    out_im[gain_site] += gamma * im[gain_site];
    out_re[loss_site] -= gamma * re[loss_site];
    out_im[loss_site] -= gamma * im[loss_site];
    if (ring) {
      out_re[gain_site] += ring_fwd.real() * re[loss_site] - ring_fwd.imag() * im[loss_site];
      out_im[gain_site] += ring_fwd.real() * im[loss_site] + ring_fwd.imag() * re[loss_site];
      out_re[loss_site] += ring_bwd.real() * re[gain_site] - ring_bwd.imag() * im[gain_site];
      out_im[loss_site] += ring_bwd.real() * im[gain_site] + ring_bwd.imag() * re[gain_site];
    }
  }
};

void validate_config(const LatticeConfig& cfg) {
  if (cfg.n_sites < 7) throw std::invalid_argument("lattice too small");
  if (cfg.embed_position < 2 || cfg.embed_position + 2 >= cfg.n_sites - 2)
    throw std::invalid_argument(
        "trimer embedding must leave >= 2 lead sites on each side");
  if (!(cfg.packet.alpha > 0.0 && cfg.packet.alpha < 1.0))
    throw std::invalid_argument("packet alpha must be in (0, 1)");
  if (cfg.packet.center < 0 || cfg.packet.center >= cfg.n_sites)
    throw std::invalid_argument("packet center outside the lattice");
}

}  // namespace

double LatticeState::total_probability() const {
  const auto& ops = kernels::active();
  return ops.sum_sq(re.data(), re.size()) + ops.sum_sq(im.data(), im.size());
}

LatticeState gaussian_packet(const LatticeConfig& config) {
  validate_config(config);
  const double alpha = config.packet.alpha;
  const double norm = std::sqrt(alpha / std::sqrt(kPi));
  const int n = config.n_sites;

  LatticeState state;
  state.re.resize(n);
  state.im.resize(n);
  for (int j = 0; j < n; ++j) {
    const double d = j - config.packet.center;
    const double a = norm * std::exp(-(alpha * alpha / 2.0) * d * d);
    state.re[j] = a * std::cos(config.packet.k * j);
    state.im[j] = a * std::sin(config.packet.k * j);
  }
  const double edge =
      std::max(state.probability(0), state.probability(n - 1));
  if (edge > 1e-12)
    throw PacketClippedError("packet tail at the lattice boundary carries " +
                             std::to_string(edge) + " probability");
  return state;
}

EvolveOutcome evolve_lattice(const LatticeConfig& config, const LatticeState& state,
                             const EvolveOptions& options) {
  validate_config(config);
  const int n = config.n_sites;
  if (static_cast<int>(state.size()) != n)
    throw std::invalid_argument("state size does not match the lattice");
  if (options.dt <= 0.0 || options.t_end < 0.0)
    throw std::invalid_argument("evolve_lattice: dt > 0 and t_end >= 0 required");

  const TrimerParams p = config.params.normalized();
  const double hnorm = 2.0 * p.kappa + p.gamma + p.j_coupling;
  if (options.dt * hnorm > 0.1)
    throw StepTooLargeError("dt * ||H|| = " + std::to_string(options.dt * hnorm) +
                            " exceeds 0.1; reduce the step");

  const TrimerCorrections corr(config);
  const auto& ops = kernels::active();
  const double kappa = p.kappa;

  const auto rhs = [&](const std::vector<double>& re, const std::vector<double>& im,
                       std::vector<double>& out_re, std::vector<double>& out_im) {
    ops.chain_rhs(re.data(), im.data(), out_re.data(), out_im.data(), re.size(),
                  kappa);
    corr.apply(re.data(), im.data(), out_re.data(), out_im.data());
  };

  const long long steps = std::llround(options.t_end / options.dt);
  std::vector<long long> snap_steps;
  snap_steps.reserve(options.snapshot_times.size());
  for (const double ts : options.snapshot_times)
    snap_steps.push_back(std::llround(ts / options.dt));

  EvolveOutcome out;
  out.state = state;
  std::vector<double> k1r(n), k1i(n), k2r(n), k2i(n), k3r(n), k3i(n), k4r(n),
      k4i(n), tr(n), ti(n);

  const auto record_snapshot = [&](long long step) {
    for (size_t s = 0; s < snap_steps.size(); ++s) {
      if (snap_steps[s] == step) {
        LatticeState snap = out.state;
        snap.time = state.time + step * options.dt;
        out.snapshots.push_back(std::move(snap));
      }
    }
  };
  record_snapshot(0);

  const auto boundary_check = [&]() {
    const double total = out.state.total_probability();
    const double edge =
        out.state.probability(0) + out.state.probability(n - 1);
    const double fraction = (total > 0.0) ? edge / total : 0.0;
    out.max_boundary_fraction = std::max(out.max_boundary_fraction, fraction);
    if (fraction > options.boundary_threshold)
      throw BoundaryContaminationError(
          "boundary sites carry " + std::to_string(fraction) +
          " of the total probability");
  };
  boundary_check();

  auto& yr = out.state.re;
  auto& yi = out.state.im;
  const double half = options.dt / 2.0;
  for (long long i = 0; i < steps; ++i) {
    rhs(yr, yi, k1r, k1i);
    ops.axpy(tr.data(), yr.data(), half, k1r.data(), n);
    ops.axpy(ti.data(), yi.data(), half, k1i.data(), n);
    rhs(tr, ti, k2r, k2i);
    ops.axpy(tr.data(), yr.data(), half, k2r.data(), n);
    ops.axpy(ti.data(), yi.data(), half, k2i.data(), n);
    rhs(tr, ti, k3r, k3i);
    ops.axpy(tr.data(), yr.data(), options.dt, k3r.data(), n);
    ops.axpy(ti.data(), yi.data(), options.dt, k3i.data(), n);
    rhs(tr, ti, k4r, k4i);
    ops.rk4_combine(yr.data(), k1r.data(), k2r.data(), k3r.data(), k4r.data(),
                    options.dt, n);
    ops.rk4_combine(yi.data(), k1i.data(), k2i.data(), k3i.data(), k4i.data(),
                    options.dt, n);
    if ((i + 1) % options.boundary_check_interval == 0) boundary_check();
    record_snapshot(i + 1);
  }
  boundary_check();
  out.state.time = state.time + steps * options.dt;
  return out;
}

PlatformMeasurement measure_platform(const LatticeState& snapshot,
                                     SiteRange region_left, SiteRange region_right) {
  const auto median_over = [&](SiteRange r) {
    const int n = static_cast<int>(snapshot.size());
    if (r.begin < 0 || r.end > n || r.begin >= r.end)
      throw EmptyRegionError("platform region [" + std::to_string(r.begin) + ", " +
                             std::to_string(r.end) + ") is empty or out of range");
    std::vector<double> probs;
    probs.reserve(r.end - r.begin);
    for (int j = r.begin; j < r.end; ++j) probs.push_back(snapshot.probability(j));
    const size_t mid = probs.size() / 2;
    std::nth_element(probs.begin(), probs.begin() + mid, probs.end());
    return probs[mid];
  };
  PlatformMeasurement m{};
  m.height_left = median_over(region_left);
  m.height_right = median_over(region_right);
  m.ratio = m.height_right / m.height_left;
  return m;
}

SiteRange default_left_region(const LatticeConfig& config) {
  return {config.embed_position - 250, config.embed_position - 150};
}

SiteRange default_right_region(const LatticeConfig& config) {
  return {config.embed_position + 2 + 151, config.embed_position + 2 + 251};
}

}  // namespace ptt
