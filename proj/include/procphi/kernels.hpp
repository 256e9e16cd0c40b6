#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Dense arithmetic kernels behind process composition and tensoring.
//
// Every variant vectorizes across independent outputs and never across a
// reduction, so each output is accumulated in the same order with the same
// unfused multiply/add sequence as the scalar reference. Variants therefore
// agree bitwise, which keeps engine results identical across machines.

namespace procphi::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view name(Isa isa);

struct Table {
  /// c[m x n] = a[m x k] * b[k x n], row-major, c overwritten.
  void (*matmul)(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
                 std::size_t n);
  /// Complex variant on interleaved (re, im) storage.
  void (*cmatmul)(const std::complex<double>* a, const std::complex<double>* b,
                  std::complex<double>* c, std::size_t m, std::size_t k, std::size_t n);
  /// dst[i] = s * src[i].
  void (*scale_copy)(const double* src, double s, double* dst, std::size_t n);
  void (*cscale_copy)(const std::complex<double>* src, std::complex<double> s,
                      std::complex<double>* dst, std::size_t n);
  /// out[i] = a[i] * b[i].
  void (*hadamard)(const double* a, const double* b, double* out, std::size_t n);
};

bool supported(Isa isa);
const Table& table(Isa isa);

/// Best supported ISA, unless overridden by set_active() or the
/// PROCPHI_KERNELS environment variable ("scalar", "avx2", "neon").
Isa active();
/// Throws procphi::UnsupportedError when the CPU lacks the ISA.
void set_active(Isa isa);

inline void matmul(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
                   std::size_t n) {
  table(active()).matmul(a, b, c, m, k, n);
}
inline void cmatmul(const std::complex<double>* a, const std::complex<double>* b,
                    std::complex<double>* c, std::size_t m, std::size_t k, std::size_t n) {
  table(active()).cmatmul(a, b, c, m, k, n);
}
inline void scale_copy(const double* src, double s, double* dst, std::size_t n) {
  table(active()).scale_copy(src, s, dst, n);
}
inline void cscale_copy(const std::complex<double>* src, std::complex<double> s,
                        std::complex<double>* dst, std::size_t n) {
  table(active()).cscale_copy(src, s, dst, n);
}
inline void hadamard(const double* a, const double* b, double* out, std::size_t n) {
  table(active()).hadamard(a, b, out, n);
}

namespace detail {
const Table& scalar_table();
const Table* avx2_table();  // nullptr when not compiled in
const Table* neon_table();
}  // namespace detail

}  // namespace procphi::kernels
