#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "procphi/object.hpp"

// Classical probabilistic processes: nonnegative tables f(a, b) from the
// basis of the domain to the basis of the codomain. States are processes
// out of the trivial object, effects are processes into it.

namespace procphi::classical {

inline constexpr double kCausalTolerance = 1e-9;

class Process {
 public:
  /// Row-major |dom| x |cod| table. Entries must be finite and nonnegative.
  Process(Object dom, Object cod, std::vector<double> table);

  const Object& dom() const { return dom_; }
  const Object& cod() const { return cod_; }
  std::size_t rows() const { return dom_.dim(); }
  std::size_t cols() const { return cod_.dim(); }

  double operator()(std::size_t a, std::size_t b) const { return table_[a * cols() + b]; }
  std::span<const double> table() const { return table_; }
  std::span<const double> row(std::size_t a) const {
    return std::span<const double>(table_).subspan(a * cols(), cols());
  }
  /// Weights of a state (dom = I).
  std::span<const double> weights() const { return table_; }

  bool operator==(const Process&) const = default;

 private:
  Object dom_;
  Object cod_;
  std::vector<double> table_;
};

Process identity(const Object& a);
/// g ∘ f: f first, then g. Requires cod(f) == dom(g).
Process compose(const Process& f, const Process& g);
Process tensor(const Process& f, const Process& g);
/// Factor permutation a -> a.permuted(perm).
Process permutation(const Object& a, std::span<const std::size_t> perm);
Process swap(const Object& a, const Object& b);
Process discard(const Object& a);
Process mixed(const Object& a);
Process zero(const Object& dom, const Object& cod);
/// Transpose: f†(b, a) = f(a, b).
Process dagger(const Process& f);
Process scaled(const Process& f, double r);

Process state(const Object& a, std::vector<double> weights);
Process point_state(const Object& a, std::size_t index);
Process scalar(double value);
double scalar_value(const Process& s);

bool is_causal(const Process& f, double tol = kCausalTolerance);
bool is_cocausal(const Process& f, double tol = kCausalTolerance);
/// Total weight of a state, i.e. discard ∘ s.
double mass(const Process& s);
bool is_zero(const Process& f, double tol = 0.0);
bool approx_equal(const Process& f, const Process& g, double tol);

/// Apply f to a state s (equivalent to compose(s, f)).
Process apply(const Process& f, const Process& s);
/// Reorder the factors of a state; equals compose(s, permutation(cod, perm)).
Process reorder(const Process& s, std::span<const std::size_t> perm);
/// Marginal of a state onto the factors in `keep` (ascending order kept).
Process marginal(const Process& s, ElementSet keep);

enum class Side { first, second };
/// Marginal of a state on A ⊗ B where A is the first `split` factors.
Process marginalize(const Process& s, std::size_t split, Side keep);

}  // namespace procphi::classical
