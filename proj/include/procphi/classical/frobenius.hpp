#pragma once

#include <cstddef>

#include "procphi/classical/process.hpp"

namespace procphi::classical {

/// Copy map A -> A^{⊗k}: δ_a ↦ δ_a ⊗ ... ⊗ δ_a. copy(A, 1) is the identity.
Process copy(const Object& a, std::size_t k);
/// Comparison map A^{⊗k} -> A: δ_{a_1..a_k} ↦ δ_a if all a_i = a, else 0.
Process compare(const Object& a, std::size_t k);

}  // namespace procphi::classical
