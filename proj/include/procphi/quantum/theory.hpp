#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "procphi/errors.hpp"
#include "procphi/quantum/process.hpp"
#include "procphi/theory.hpp"

namespace procphi::quantum {

/// CP maps as Choi matrices, distance = trace distance.
struct Theory {
  using Process = quantum::Process;
  static constexpr std::string_view name = "quantum";
  static constexpr bool supports_iit3 = false;

  static Process identity(const Object& a) { return quantum::identity(a); }
  static Process compose(const Process& f, const Process& g) { return quantum::compose(f, g); }
  static Process tensor(const Process& f, const Process& g) { return quantum::tensor(f, g); }
  static Process permutation(const Object& a, std::span<const std::size_t> perm) {
    return quantum::permutation(a, perm);
  }
  static Process discard(const Object& a) { return quantum::discard(a); }
  static Process mixed(const Object& a) { return quantum::mixed(a); }
  static Process zero(const Object& dom, const Object& cod) { return quantum::zero(dom, cod); }
  static Process dagger(const Process& f) { return quantum::dagger(f); }
  static Process scaled(const Process& f, double r) { return quantum::scaled(f, r); }
  /// Random density matrix G G† / Tr(G G†) from a complex Gaussian G.
  template <class Rng>
  static Process random_state(const Object& a, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const std::size_t d = a.dim();
    CMatrix m(d, d);
    for (auto& z : m.data()) z = Complex(g(rng), g(rng));
    CMatrix rho = m * m.adjoint();
    rho = Complex(1.0 / rho.trace().real()) * rho;
    return quantum::state(a, std::move(rho));
  }
  static Process point_state(const Object& a, std::size_t i) { return quantum::point_state(a, i); }
  static bool is_causal(const Process& f, double tol = kCausalTolerance) {
    return quantum::is_causal(f, tol);
  }
  static bool is_cocausal(const Process& f, double tol = kCausalTolerance) {
    return quantum::is_cocausal(f, tol);
  }
  static double mass(const Process& s) { return quantum::mass(s); }
  static bool is_zero(const Process& f) { return quantum::is_zero(f); }
  static bool approx_equal(const Process& f, const Process& g, double tol) {
    return quantum::approx_equal(f, g, tol);
  }
  static Process apply(const Process& f, const Process& s) { return quantum::apply(f, s); }
  static Process reorder(const Process& s, std::span<const std::size_t> perm) {
    return quantum::reorder(s, perm);
  }
  static Process marginal(const Process& s, ElementSet keep) { return quantum::marginal(s, keep); }

  /// Trace distance between causal states; a zero state sits at distance
  /// ‖other‖₁ (the trace, for positive operators).
  static double distance(const Process& a, const Process& b) {
    const bool za = is_zero(a), zb = is_zero(b);
    if (za || zb) return za && zb ? 0.0 : mass(za ? b : a);
    return trace_distance(a, b);
  }

  static Process hadamard(const Process&, const Process&) {
    throw UnsupportedError("quantum states have no canonical pointwise product");
  }
  static Process directional_cut(const Process&, ElementSet, double = 1e-9) {
    throw UnsupportedError("directional cuts need a copy map; the quantum backend has none");
  }
  static bool is_conditionally_independent(const Process&, double = 1e-9) {
    throw UnsupportedError("conditional independence is a classical notion");
  }
};

}  // namespace procphi::quantum
