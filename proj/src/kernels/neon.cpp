#if defined(__aarch64__)

#include <arm_neon.h>

#include "ptt/kernels.hpp"

namespace ptt::kernels {

namespace {

void chain_rhs_neon(const double* re, const double* im, double* out_re,
                    double* out_im, std::size_t n, double kappa) {
  if (n < 2) {
    if (n == 1) {
      out_re[0] = 0.0;
      out_im[0] = 0.0;
    }
    return;
  }
  out_re[0] = -kappa * im[1];
  out_im[0] = kappa * re[1];

  const float64x2_t mk = vdupq_n_f64(-kappa);
  const float64x2_t pk = vdupq_n_f64(kappa);
  std::size_t j = 1;
  for (; j + 2 < n; j += 2) {
    const float64x2_t im_l = vld1q_f64(im + j - 1);
    const float64x2_t im_r = vld1q_f64(im + j + 1);
    const float64x2_t re_l = vld1q_f64(re + j - 1);
    const float64x2_t re_r = vld1q_f64(re + j + 1);
    vst1q_f64(out_re + j, vmulq_f64(mk, vaddq_f64(im_l, im_r)));
    vst1q_f64(out_im + j, vmulq_f64(pk, vaddq_f64(re_l, re_r)));
  }
  for (; j + 1 < n; ++j) {
    out_re[j] = -kappa * (im[j - 1] + im[j + 1]);
    out_im[j] = kappa * (re[j - 1] + re[j + 1]);
  }
  out_re[n - 1] = -kappa * im[n - 2];
  out_im[n - 1] = kappa * re[n - 2];
}

void axpy_neon(double* dst, const double* x, double a, const double* y,
               std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t vx = vld1q_f64(x + j);
    const float64x2_t vy = vld1q_f64(y + j);
    vst1q_f64(dst + j, vaddq_f64(vx, vmulq_f64(va, vy)));
  }
  for (; j < n; ++j) dst[j] = x[j] + a * y[j];
}

void rk4_combine_neon(double* y, const double* k1, const double* k2,
                      const double* k3, const double* k4, double dt,
                      std::size_t n) {
  const double w = dt / 6.0;
  const float64x2_t vw = vdupq_n_f64(w);
  const float64x2_t two = vdupq_n_f64(2.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t v1 = vld1q_f64(k1 + j);
    const float64x2_t v2 = vld1q_f64(k2 + j);
    const float64x2_t v3 = vld1q_f64(k3 + j);
    const float64x2_t v4 = vld1q_f64(k4 + j);
    float64x2_t s = vaddq_f64(v1, vmulq_f64(two, v2));
    s = vaddq_f64(s, vmulq_f64(two, v3));
    s = vaddq_f64(s, v4);
    const float64x2_t vy = vld1q_f64(y + j);
    vst1q_f64(y + j, vaddq_f64(vy, vmulq_f64(vw, s)));
  }
  for (; j < n; ++j) y[j] += w * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
}

double sum_sq_neon(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t v = vld1q_f64(x + j);
    acc = vaddq_f64(acc, vmulq_f64(v, v));
  }
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; j < n; ++j) total += x[j] * x[j];
  return total;
}

}  // namespace

const Ops& neon_ops() {
  static const Ops ops{chain_rhs_neon, axpy_neon, rk4_combine_neon, sum_sq_neon,
                       "neon"};
  return ops;
}

}  // namespace ptt::kernels

#endif  // aarch64
