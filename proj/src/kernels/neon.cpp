#include "procphi/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#define PROCPHI_HAVE_NEON_KERNELS 1
#endif

namespace procphi::kernels::detail {

#ifdef PROCPHI_HAVE_NEON_KERNELS
namespace {

// vmulq/vaddq only: fused vfmaq would round differently from the scalar path.

void matmul_neon(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
                 std::size_t n) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a[i * k + p];
      if (aip == 0.0) continue;
      const double* bp = b + p * n;
      const float64x2_t va = vdupq_n_f64(aip);
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        const float64x2_t prod = vmulq_f64(va, vld1q_f64(bp + j));
        vst1q_f64(ci + j, vaddq_f64(vld1q_f64(ci + j), prod));
      }
      for (; j < n; ++j) {
        const double prod = aip * bp[j];
        ci[j] = ci[j] + prod;
      }
    }
  }
}

// One complex number per register: [re, im].
inline float64x2_t cmul_neon(float64x2_t ar, float64x2_t ai, float64x2_t b) {
  static const double sign[2] = {-1.0, 1.0};
  const float64x2_t x = vmulq_f64(ar, b);
  const float64x2_t y = vmulq_f64(ai, vextq_f64(b, b, 1));
  return vaddq_f64(x, vmulq_f64(y, vld1q_f64(sign)));
}

void cmatmul_neon(const std::complex<double>* a, const std::complex<double>* b,
                  std::complex<double>* c, std::size_t m, std::size_t k, std::size_t n) {
  auto* cd = reinterpret_cast<double*>(c);
  const auto* bd = reinterpret_cast<const double*>(b);
  for (std::size_t i = 0; i < 2 * m * n; ++i) cd[i] = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = cd + 2 * i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[i * k + p].real();
      const double ai = a[i * k + p].imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const double* bp = bd + 2 * p * n;
      const float64x2_t var = vdupq_n_f64(ar);
      const float64x2_t vai = vdupq_n_f64(ai);
      for (std::size_t j = 0; j < n; ++j) {
        const float64x2_t prod = cmul_neon(var, vai, vld1q_f64(bp + 2 * j));
        vst1q_f64(ci + 2 * j, vaddq_f64(vld1q_f64(ci + 2 * j), prod));
      }
    }
  }
}

void scale_copy_neon(const double* src, double s, double* dst, std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vmulq_f64(vs, vld1q_f64(src + i)));
  for (; i < n; ++i) dst[i] = s * src[i];
}

void cscale_copy_neon(const std::complex<double>* src, std::complex<double> s,
                      std::complex<double>* dst, std::size_t n) {
  const float64x2_t vr = vdupq_n_f64(s.real());
  const float64x2_t vi = vdupq_n_f64(s.imag());
  const auto* x = reinterpret_cast<const double*>(src);
  auto* y = reinterpret_cast<double*>(dst);
  for (std::size_t i = 0; i < n; ++i) vst1q_f64(y + 2 * i, cmul_neon(vr, vi, vld1q_f64(x + 2 * i)));
}

void hadamard_neon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

}  // namespace

const Table* neon_table() {
  static const Table t{matmul_neon, cmatmul_neon, scale_copy_neon, cscale_copy_neon,
                       hadamard_neon};
  return &t;
}
#else
const Table* neon_table() { return nullptr; }
#endif

}  // namespace procphi::kernels::detail
