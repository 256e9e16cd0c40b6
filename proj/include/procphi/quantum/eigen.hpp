#pragma once

#include <cstddef>
#include <vector>

#include "procphi/quantum/cmatrix.hpp"

namespace procphi::quantum {

/// Eigenvalues of a real symmetric n x n matrix (row-major) by cyclic Jacobi
/// rotations, sorted ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

/// Eigenvalues of a Hermitian matrix, sorted ascending. Uses the real
/// symmetric embedding [[Re, -Im], [Im, Re]], whose spectrum is that of the
/// input with every eigenvalue doubled.
std::vector<double> hermitian_eigenvalues(const CMatrix& h);

/// Σ |λ_i| of a Hermitian matrix.
double trace_norm(const CMatrix& h);

}  // namespace procphi::quantum
