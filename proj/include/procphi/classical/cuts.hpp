#pragma once

#include <vector>

#include "procphi/classical/process.hpp"

// Element-wise structure of classical dynamics on S = S_1 ⊗ ... ⊗ S_n.

namespace procphi::classical {

/// T_i : S -> S_i, the marginal of T's output on element i.
std::vector<Process> element_channels(const Process& evolution);

/// Joint channel S -> S_1 ⊗ ... ⊗ S_n with T(s, t) = Π_i T_i(s, t_i).
Process recombine(const std::vector<Process>& channels);

/// True iff T(s, t) = Π_i T_i(s, t_i) for all basis s, t within tol.
bool is_conditionally_independent(const Process& evolution, double tol = 1e-9);

/// Directional cut: outputs of elements outside `part` no longer see the
/// inputs of elements in `part` (those inputs are replaced by uniform noise);
/// all connections into `part` stay intact. Throws ValidationError when the
/// evolution is not conditionally independent.
Process directional_cut(const Process& evolution, ElementSet part, double tol = 1e-9);

}  // namespace procphi::classical
