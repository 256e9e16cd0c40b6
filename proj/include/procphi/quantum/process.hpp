#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "procphi/classical/process.hpp"
#include "procphi/object.hpp"
#include "procphi/quantum/cmatrix.hpp"

// Completely positive maps between finite-dimensional Hilbert spaces, stored
// as Choi matrices
//   J[(i, k), (j, l)] = <k| f(|i><j|) |l>,   (i, k) -> i + dim(dom) * k.
// States (dom = I) are density matrices, effects e have e(ρ) = Tr(ρ Jᵀ).

namespace procphi::quantum {

inline constexpr double kCausalTolerance = 1e-9;
inline constexpr double kChannelTolerance = 1e-8;
inline constexpr double kPsdTolerance = 1e-9;

class Process {
 public:
  Process(Object dom, Object cod, CMatrix choi);
  /// Skips the finiteness scan; for results built from already valid processes.
  struct Trusted {};
  Process(Object dom, Object cod, CMatrix choi, Trusted);

  const Object& dom() const { return dom_; }
  const Object& cod() const { return cod_; }
  const CMatrix& choi() const { return choi_; }
  /// Density matrix of a state (dom = I).
  const CMatrix& density() const { return choi_; }

  bool operator==(const Process&) const = default;

 private:
  Object dom_;
  Object cod_;
  CMatrix choi_;
};

Process identity(const Object& a);
/// g ∘ f: f first, then g.
Process compose(const Process& f, const Process& g);
Process tensor(const Process& f, const Process& g);
/// Unitary channel permuting tensor factors: a -> a.permuted(perm).
Process permutation(const Object& a, std::span<const std::size_t> perm);
Process swap(const Object& a, const Object& b);
/// Trace.
Process discard(const Object& a);
/// Maximally mixed state 1/dim.
Process mixed(const Object& a);
Process zero(const Object& dom, const Object& cod);
/// Hilbert-Schmidt adjoint: Tr[f(x)† y] = Tr[x† f†(y)].
Process dagger(const Process& f);
Process scaled(const Process& f, double r);

Process state(const Object& a, CMatrix density);
Process point_state(const Object& a, std::size_t index);
Process scalar(double value);
double scalar_value(const Process& s);

Process from_kraus(const Object& dom, const Object& cod, std::span<const CMatrix> kraus);
/// f(ρ) = U ρ U†.
Process unitary_channel(const Object& a, const CMatrix& u);
/// Measure-and-prepare embedding of a classical table as a diagonal channel.
Process from_classical(const classical::Process& f);

/// Trace preservation: partial trace of the Choi matrix over the output is 1.
bool is_causal(const Process& f, double tol = kCausalTolerance);
/// Unitality up to dimension: f(1/d_in) = 1/d_out.
bool is_cocausal(const Process& f, double tol = kCausalTolerance);
/// Choi matrix Hermitian positive semi-definite.
bool is_cp(const Process& f, double tol = kChannelTolerance);
bool is_cptp(const Process& f, double tol = kChannelTolerance);

double mass(const Process& s);
bool is_zero(const Process& f, double tol = 0.0);
bool approx_equal(const Process& f, const Process& g, double tol);
bool is_density(const CMatrix& rho, double tol = kPsdTolerance);

Process apply(const Process& f, const Process& rho);
Process reorder(const Process& rho, std::span<const std::size_t> perm);
/// Partial trace keeping the factors in `keep`.
Process marginal(const Process& rho, ElementSet keep);

enum class Side { first, second };
/// Partial trace of a state on A ⊗ B where A is the first `split` factors.
Process partial_trace(const Process& rho, std::size_t split, Side keep);

/// ½ ‖ρ - σ‖₁.
double trace_distance(const Process& rho, const Process& sigma);

}  // namespace procphi::quantum
