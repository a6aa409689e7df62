#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "ptt/kernels.hpp"

namespace ptt::kernels {

namespace {

// Vector body runs over the interior [1, n-1); mul+add (no FMA) keeps results
// bit-identical to the scalar reference.
void chain_rhs_avx2(const double* re, const double* im, double* out_re,
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

  const __m256d mk = _mm256_set1_pd(-kappa);
  const __m256d pk = _mm256_set1_pd(kappa);
  std::size_t j = 1;
  for (; j + 4 < n; j += 4) {
    const __m256d im_l = _mm256_loadu_pd(im + j - 1);
    const __m256d im_r = _mm256_loadu_pd(im + j + 1);
    const __m256d re_l = _mm256_loadu_pd(re + j - 1);
    const __m256d re_r = _mm256_loadu_pd(re + j + 1);
    _mm256_storeu_pd(out_re + j, _mm256_mul_pd(mk, _mm256_add_pd(im_l, im_r)));
    _mm256_storeu_pd(out_im + j, _mm256_mul_pd(pk, _mm256_add_pd(re_l, re_r)));
  }
  for (; j + 1 < n; ++j) {
    out_re[j] = -kappa * (im[j - 1] + im[j + 1]);
    out_im[j] = kappa * (re[j - 1] + re[j + 1]);
  }
  out_re[n - 1] = -kappa * im[n - 2];
  out_im[n - 1] = kappa * re[n - 2];
}

void axpy_avx2(double* dst, const double* x, double a, const double* y,
               std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d vx = _mm256_loadu_pd(x + j);
    const __m256d vy = _mm256_loadu_pd(y + j);
    _mm256_storeu_pd(dst + j, _mm256_add_pd(vx, _mm256_mul_pd(va, vy)));
  }
  for (; j < n; ++j) dst[j] = x[j] + a * y[j];
}

void rk4_combine_avx2(double* y, const double* k1, const double* k2,
                      const double* k3, const double* k4, double dt,
                      std::size_t n) {
  const double w = dt / 6.0;
  const __m256d vw = _mm256_set1_pd(w);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d v1 = _mm256_loadu_pd(k1 + j);
    const __m256d v2 = _mm256_loadu_pd(k2 + j);
    const __m256d v3 = _mm256_loadu_pd(k3 + j);
    const __m256d v4 = _mm256_loadu_pd(k4 + j);
    // k1 + 2*k2 + 2*k3 + k4, summed in the scalar reference's order
    __m256d s = _mm256_add_pd(v1, _mm256_mul_pd(two, v2));
    s = _mm256_add_pd(s, _mm256_mul_pd(two, v3));
    s = _mm256_add_pd(s, v4);
    const __m256d vy = _mm256_loadu_pd(y + j);
    _mm256_storeu_pd(y + j, _mm256_add_pd(vy, _mm256_mul_pd(vw, s)));
  }
  for (; j < n; ++j) y[j] += w * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
}

double sum_sq_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d v = _mm256_loadu_pd(x + j);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
  for (; j < n; ++j) total += x[j] * x[j];
  return total;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{chain_rhs_avx2, axpy_avx2, rk4_combine_avx2, sum_sq_avx2,
                       "avx2"};
  return ops;
}

bool avx2_supported() { return __builtin_cpu_supports("avx2") != 0; }

}  // namespace ptt::kernels

#endif  // x86-64
