#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "procphi/classical/cuts.hpp"
#include "procphi/classical/emd.hpp"
#include "procphi/classical/process.hpp"
#include "procphi/theory.hpp"

namespace procphi::classical {

/// Stochastic tables over finite metric spaces, distance = EMD.
struct Theory {
  using Process = classical::Process;
  static constexpr std::string_view name = "classical";
  static constexpr bool supports_iit3 = true;

  static Process identity(const Object& a) { return classical::identity(a); }
  static Process compose(const Process& f, const Process& g) { return classical::compose(f, g); }
  static Process tensor(const Process& f, const Process& g) { return classical::tensor(f, g); }
  static Process permutation(const Object& a, std::span<const std::size_t> perm) {
    return classical::permutation(a, perm);
  }
  static Process discard(const Object& a) { return classical::discard(a); }
  static Process mixed(const Object& a) { return classical::mixed(a); }
  static Process zero(const Object& dom, const Object& cod) { return classical::zero(dom, cod); }
  static Process dagger(const Process& f) { return classical::dagger(f); }
  static Process scaled(const Process& f, double r) { return classical::scaled(f, r); }
  template <class Rng>
  static Process random_state(const Object& a, Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> w(a.dim());
    double total = 0.0;
    for (auto& x : w) total += (x = u(rng));
    for (auto& x : w) x /= total;
    return classical::state(a, std::move(w));
  }
  static Process point_state(const Object& a, std::size_t i) { return classical::point_state(a, i); }
  static bool is_causal(const Process& f, double tol = kCausalTolerance) {
    return classical::is_causal(f, tol);
  }
  static bool is_cocausal(const Process& f, double tol = kCausalTolerance) {
    return classical::is_cocausal(f, tol);
  }
  static double mass(const Process& s) { return classical::mass(s); }
  static bool is_zero(const Process& f) { return classical::is_zero(f); }
  static bool approx_equal(const Process& f, const Process& g, double tol) {
    return classical::approx_equal(f, g, tol);
  }
  static Process apply(const Process& f, const Process& s) { return classical::apply(f, s); }
  static Process reorder(const Process& s, std::span<const std::size_t> perm) {
    return classical::reorder(s, perm);
  }
  static Process marginal(const Process& s, ElementSet keep) { return classical::marginal(s, keep); }

  /// EMD between causal states; a zero state sits at distance ‖other‖₁.
  static double distance(const Process& a, const Process& b) {
    const bool za = is_zero(a), zb = is_zero(b);
    if (za || zb) return za && zb ? 0.0 : mass(za ? b : a);
    return emd(a, b);
  }

  /// Pointwise product of two states on the same object (the compare map
  /// applied to their tensor).
  static Process hadamard(const Process& a, const Process& b);
  static Process directional_cut(const Process& t, ElementSet part, double tol = 1e-9) {
    return classical::directional_cut(t, part, tol);
  }
  static bool is_conditionally_independent(const Process& t, double tol = 1e-9) {
    return classical::is_conditionally_independent(t, tol);
  }
};

}  // namespace procphi::classical
