#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "procphi/classical/process.hpp"

namespace procphi::classical {

/// Balanced transportation problem: ship `supply` to `demand` at the given
/// row-major supply x demand unit costs.
struct TransportProblem {
  std::vector<double> supply;
  std::vector<double> demand;
  std::vector<double> cost;
};

struct TransportPlan {
  double cost = 0.0;
  /// Basic cells (row, col, flow) of the optimal spanning-tree basis.
  struct Cell {
    std::size_t row;
    std::size_t col;
    double flow;
  };
  std::vector<Cell> basis;
  std::size_t pivots = 0;
};

/// Transportation simplex (northwest-corner start, MODI potentials, Dantzig
/// entering rule with a Bland fallback after long degenerate runs). Pivot
/// choices are fully deterministic.
TransportPlan solve_transport(const TransportProblem& problem);

/// Earth mover's (Wasserstein-1) distance between two causal states of the
/// same classical object under its ground metric. Throws DomainError for
/// mismatched objects or non-causal inputs.
double emd(const Process& s, const Process& t);

/// Total variation ½ Σ |s - t|.
double total_variation(std::span<const double> s, std::span<const double> t);

}  // namespace procphi::classical
