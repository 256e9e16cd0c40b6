#include "procphi/quantum/eigen.hpp"

#include <algorithm>
#include <cmath>

#include "procphi/errors.hpp"

namespace procphi::quantum {
namespace {

constexpr int kMaxSweeps = 100;

std::vector<double> real_embedding(const CMatrix& h) {
  const std::size_t n = h.rows();
  const std::size_t m = 2 * n;
  std::vector<double> a(m * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Symmetrize to absorb roundoff in the Hermitian input.
      const Complex z = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a[i * m + j] = z.real();
      a[(i + n) * m + (j + n)] = z.real();
      a[i * m + (j + n)] = -z.imag();
      a[(i + n) * m + j] = z.imag();
    }
  }
  return a;
}

bool is_diagonal(const CMatrix& h) {
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j && h(i, j) != Complex(0.0)) return false;
  return true;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw DomainError("symmetric_eigenvalues: size mismatch");
  double total = 0.0;
  for (double v : a) total += v * v;
  const double threshold = 1e-30 * (total > 0.0 ? total : 1.0);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    if (off <= threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
  if (h.rows() != h.cols()) throw DomainError("hermitian_eigenvalues: matrix not square");
  const std::size_t n = h.rows();
  if (is_diagonal(h)) {
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = h(i, i).real();
    std::sort(d.begin(), d.end());
    return d;
  }
  const auto doubled = symmetric_eigenvalues(real_embedding(h), 2 * n);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return out;
}

double trace_norm(const CMatrix& h) {
  double acc = 0.0;
  for (double l : hermitian_eigenvalues(h)) acc += std::abs(l);
  return acc;
}

}  // namespace procphi::quantum
