#include "procphi/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define PROCPHI_HAVE_AVX2_KERNELS 1
#endif

namespace procphi::kernels::detail {

#ifdef PROCPHI_HAVE_AVX2_KERNELS
namespace {

// Only raw-pointer code lives in this file; no inline library templates get
// instantiated under the avx2 target.
#define PROCPHI_AVX2 __attribute__((target("avx2")))

PROCPHI_AVX2 void matmul_avx2(const double* a, const double* b, double* c, std::size_t m,
                              std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a[i * k + p];
      if (aip == 0.0) continue;
      const double* bp = b + p * n;
      const __m256d va = _mm256_set1_pd(aip);
      std::size_t j = 0;
      for (; j + 4 <= n; j += 4) {
        const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(bp + j));
        _mm256_storeu_pd(ci + j, _mm256_add_pd(_mm256_loadu_pd(ci + j), prod));
      }
      for (; j < n; ++j) {
        const double prod = aip * bp[j];
        ci[j] = ci[j] + prod;
      }
    }
  }
}

// Two complex numbers per register: [re0, im0, re1, im1].
PROCPHI_AVX2 inline __m256d cmul_avx2(__m256d ar, __m256d ai, __m256d b) {
  const __m256d x = _mm256_mul_pd(ar, b);
  const __m256d y = _mm256_mul_pd(ai, _mm256_permute_pd(b, 0b0101));
  return _mm256_addsub_pd(x, y);
}

PROCPHI_AVX2 void cmatmul_avx2(const std::complex<double>* a, const std::complex<double>* b,
                               std::complex<double>* c, std::size_t m, std::size_t k,
                               std::size_t n) {
  auto* cd = reinterpret_cast<double*>(c);
  const auto* bd = reinterpret_cast<const double*>(b);
  const auto* ad = reinterpret_cast<const double*>(a);
  for (std::size_t i = 0; i < 2 * m * n; ++i) cd[i] = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = cd + 2 * i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = ad[2 * (i * k + p)];
      const double ai = ad[2 * (i * k + p) + 1];
      if (ar == 0.0 && ai == 0.0) continue;
      const double* bp = bd + 2 * p * n;
      const __m256d var = _mm256_set1_pd(ar);
      const __m256d vai = _mm256_set1_pd(ai);
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        const __m256d prod = cmul_avx2(var, vai, _mm256_loadu_pd(bp + 2 * j));
        _mm256_storeu_pd(ci + 2 * j, _mm256_add_pd(_mm256_loadu_pd(ci + 2 * j), prod));
      }
      for (; j < n; ++j) {
        const double br = bp[2 * j];
        const double bi = bp[2 * j + 1];
        const double re = ar * br - ai * bi;
        const double im = ar * bi + ai * br;
        ci[2 * j] = ci[2 * j] + re;
        ci[2 * j + 1] = ci[2 * j + 1] + im;
      }
    }
  }
}

PROCPHI_AVX2 void scale_copy_avx2(const double* src, double s, double* dst, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(dst + i, _mm256_mul_pd(vs, _mm256_loadu_pd(src + i)));
  for (; i < n; ++i) dst[i] = s * src[i];
}

PROCPHI_AVX2 void cscale_copy_avx2(const std::complex<double>* src, std::complex<double> s,
                                   std::complex<double>* dst, std::size_t n) {
  const double sr = s.real();
  const double si = s.imag();
  const auto* x = reinterpret_cast<const double*>(src);
  auto* y = reinterpret_cast<double*>(dst);
  const __m256d vr = _mm256_set1_pd(sr);
  const __m256d vi = _mm256_set1_pd(si);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) _mm256_storeu_pd(y + 2 * i, cmul_avx2(vr, vi, _mm256_loadu_pd(x + 2 * i)));
  for (; i < n; ++i) {
    const double xr = x[2 * i];
    const double xi = x[2 * i + 1];
    y[2 * i] = sr * xr - si * xi;
    y[2 * i + 1] = sr * xi + si * xr;
  }
}

PROCPHI_AVX2 void hadamard_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

}  // namespace

const Table* avx2_table() {
  static const Table t{matmul_avx2, cmatmul_avx2, scale_copy_avx2, cscale_copy_avx2,
                       hadamard_avx2};
  return &t;
}
#else
const Table* avx2_table() { return nullptr; }
#endif

}  // namespace procphi::kernels::detail
