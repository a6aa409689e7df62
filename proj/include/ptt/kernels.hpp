#pragma once

#include <cstddef>

namespace ptt::kernels {

/// Data-parallel inner loops of the lattice simulator, on split
/// real/imaginary arrays. Output arrays must not alias the inputs.
///
/// The scalar implementations are the reference semantics; SIMD variants are
/// written multiply-then-add (no FMA contraction) so elementwise kernels
/// produce bit-identical results to the scalar path. sum_sq reduces in a
/// backend-dependent order and is only tolerance-equivalent.
struct Ops {
  // RHS of i dpsi/dt = H psi for the uniform open-chain part of H
  // (couplings -kappa between nearest neighbors, hard walls):
  //   out_re[j] = -kappa * (im[j-1] + im[j+1])
  //   out_im[j] = +kappa * (re[j-1] + re[j+1])
  void (*chain_rhs)(const double* re, const double* im, double* out_re,
                    double* out_im, std::size_t n, double kappa);
  // dst = x + a * y
  void (*axpy)(double* dst, const double* x, double a, const double* y,
               std::size_t n);
  // y += (dt/6) * (k1 + 2 k2 + 2 k3 + k4)
  void (*rk4_combine)(double* y, const double* k1, const double* k2,
                      const double* k3, const double* k4, double dt,
                      std::size_t n);
  double (*sum_sq)(const double* x, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();

#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();      // only call when avx2_supported()
bool avx2_supported();
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

/// Backend picked at startup: AVX2 on x86-64 CPUs that support it, NEON on
/// aarch64, scalar otherwise.
const Ops& active();

/// Override the selected backend by name ("scalar", "avx2", "neon").
/// Returns false if the backend is unavailable on this machine.
bool force_backend(const char* name);

}  // namespace ptt::kernels
