#include "ptt/kernels.hpp"

namespace ptt::kernels {

namespace {

void chain_rhs_scalar(const double* re, const double* im, double* out_re,
                      double* out_im, std::size_t n, double kappa) {
  if (n == 0) return;
  if (n == 1) {
    out_re[0] = 0.0;
    out_im[0] = 0.0;
    return;
  }
  out_re[0] = -kappa * im[1];
  out_im[0] = kappa * re[1];
  for (std::size_t j = 1; j + 1 < n; ++j) {
    out_re[j] = -kappa * (im[j - 1] + im[j + 1]);
    out_im[j] = kappa * (re[j - 1] + re[j + 1]);
  }
  out_re[n - 1] = -kappa * im[n - 2];
  out_im[n - 1] = kappa * re[n - 2];
}

void axpy_scalar(double* dst, const double* x, double a, const double* y,
                 std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) dst[j] = x[j] + a * y[j];
}

void rk4_combine_scalar(double* y, const double* k1, const double* k2,
                        const double* k3, const double* k4, double dt,
                        std::size_t n) {
  const double w = dt / 6.0;
  for (std::size_t j = 0; j < n; ++j)
    y[j] += w * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
}

double sum_sq_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += x[j] * x[j];
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{chain_rhs_scalar, axpy_scalar, rk4_combine_scalar,
                       sum_sq_scalar, "scalar"};
  return ops;
}

}  // namespace ptt::kernels
