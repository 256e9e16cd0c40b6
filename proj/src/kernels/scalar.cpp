#include "procphi/kernels.hpp"

namespace procphi::kernels::detail {
namespace {

void matmul_scalar(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
                   std::size_t n) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = a[i * k + p];
      if (aip == 0.0) continue;
      const double* bp = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double prod = aip * bp[j];
        ci[j] = ci[j] + prod;
      }
    }
  }
}

void cmatmul_scalar(const std::complex<double>* a, const std::complex<double>* b,
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
      for (std::size_t j = 0; j < n; ++j) {
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

void scale_copy_scalar(const double* src, double s, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = s * src[i];
}

void cscale_copy_scalar(const std::complex<double>* src, std::complex<double> s,
                        std::complex<double>* dst, std::size_t n) {
  const double sr = s.real();
  const double si = s.imag();
  const auto* x = reinterpret_cast<const double*>(src);
  auto* y = reinterpret_cast<double*>(dst);
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i];
    const double xi = x[2 * i + 1];
    y[2 * i] = sr * xr - si * xi;
    y[2 * i + 1] = sr * xi + si * xr;
  }
}

void hadamard_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

}  // namespace

const Table& scalar_table() {
  static const Table t{matmul_scalar, cmatmul_scalar, scale_copy_scalar, cscale_copy_scalar,
                       hadamard_scalar};
  return t;
}

}  // namespace procphi::kernels::detail
