#pragma once

#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "procphi/errors.hpp"
#include "procphi/system.hpp"
#include "procphi/theory.hpp"

// Cause and effect repertoires. They are state transformers m ↦ state on the
// purview rather than stored processes, since the cause repertoire is
// normalized per input state.

namespace procphi {

enum class Variant { generic, iit3 };
enum class Direction { cause, effect };

/// Cause values either renormalized (the default) or the raw dagger form.
enum class CauseForm { normalized, raw };

inline constexpr double kZeroTolerance = 1e-12;

template <ProcessTheory T>
struct RepertoireValue {
  typename T::Process state;
  bool zero = false;
  /// Normalization scalar applied to a cause value (1 for effects, 0 when zero).
  double lambda = 1.0;
};

namespace detail {

/// iso_M⁻¹ ∘ (m ⊗ ⫞_M'): the mechanism state padded with noise.
template <ProcessTheory T>
typename T::Process pad_with_noise(const Object& s, ElementSet mech, const typename T::Process& m) {
  const auto noise = T::mixed(s.select(mech.complement(s.num_factors())));
  return merge_state<T>(s, mech, T::tensor(m, noise));
}

template <ProcessTheory T>
typename T::Process raw_value(const System<T>& sys, const typename T::Process& dynamics,
                              const typename T::Process& m, ElementSet mech, ElementSet purview) {
  const auto padded = pad_with_noise<T>(sys.object(), mech, m);
  return T::marginal(T::apply(dynamics, padded), purview);
}

template <ProcessTheory T>
void check_subsets(const System<T>& sys, const typename T::Process& m, ElementSet mech, ElementSet purview) {
  const auto all = ElementSet::all(sys.size());
  if (!mech.subset_of(all) || !purview.subset_of(all)) throw DomainError("repertoire: subset exceeds the system");
  if (!(m.cod() == sys.object().select(mech)) || !(m.dom() == Object::unit()))
    throw DomainError("repertoire: mechanism state lives on the wrong object");
}

}  // namespace detail

/// Generic effect repertoire ⫠_P' ∘ iso_P ∘ T ∘ iso_M⁻¹ ∘ (m ⊗ ⫞_M').
template <ProcessTheory T>
RepertoireValue<T> generic_effect(const System<T>& sys, const typename T::Process& m, ElementSet mech,
                                  ElementSet purview) {
  detail::check_subsets(sys, m, mech, purview);
  auto v = detail::raw_value(sys, sys.evolution(), m, mech, purview);
  const bool z = T::is_zero(v);
  return {std::move(v), z, z ? 0.0 : 1.0};
}

/// Generic cause repertoire: the same circuit through the reverse evolution,
/// then normalized (zero when its mass is at most tol_zero).
template <ProcessTheory T>
RepertoireValue<T> generic_cause(const System<T>& sys, const typename T::Process& m, ElementSet mech,
                                 ElementSet purview, double tol_zero = kZeroTolerance,
                                 CauseForm form = CauseForm::normalized) {
  detail::check_subsets(sys, m, mech, purview);
  auto u = detail::raw_value(sys, sys.reverse_evolution(), m, mech, purview);
  if (form == CauseForm::raw) {
    const bool z = T::is_zero(u);
    return {std::move(u), z, 1.0};
  }
  double lambda = 0.0;
  auto v = normalized<T>(u, tol_zero, &lambda);
  return {std::move(v), lambda == 0.0, lambda};
}

/// IIT 3.0 effect repertoire: product over purview elements of the
/// single-element generic effects.
template <ProcessTheory T>
RepertoireValue<T> iit3_effect(const System<T>& sys, const typename T::Process& m, ElementSet mech,
                               ElementSet purview) {
  if constexpr (!T::supports_iit3) {
    throw UnsupportedError("IIT 3.0 repertoires need the classical backend");
  } else {
    detail::check_subsets(sys, m, mech, purview);
    if (purview.size() <= 1) return generic_effect(sys, m, mech, purview);
    std::optional<typename T::Process> acc;
    for (auto j : purview.indices()) {
      auto f = generic_effect(sys, m, mech, ElementSet::single(j)).state;
      acc = acc ? T::tensor(*acc, f) : std::move(f);
    }
    const bool z = T::is_zero(*acc);
    return {std::move(*acc), z, z ? 0.0 : 1.0};
  }
}

/// IIT 3.0 cause repertoire: pointwise product over mechanism elements of
/// the single-element normalized causes, normalized once more.
template <ProcessTheory T>
RepertoireValue<T> iit3_cause(const System<T>& sys, const typename T::Process& m, ElementSet mech,
                              ElementSet purview, double tol_zero = kZeroTolerance) {
  if constexpr (!T::supports_iit3) {
    throw UnsupportedError("IIT 3.0 repertoires need the classical backend");
  } else {
    detail::check_subsets(sys, m, mech, purview);
    if (mech.size() <= 1) return generic_cause(sys, m, mech, purview, tol_zero);
    std::optional<typename T::Process> acc;
    for (auto i : mech.indices()) {
      const auto mi = T::marginal(m, ElementSet::single(mech.rank(i)));
      auto c = generic_cause(sys, mi, ElementSet::single(i), purview, tol_zero);
      if (c.zero) return {T::zero(Object::unit(), sys.object().select(purview)), true, 0.0};
      acc = acc ? T::hadamard(*acc, c.state) : std::move(c.state);
    }
    double lambda = 0.0;
    auto v = normalized<T>(*acc, tol_zero, &lambda);
    return {std::move(v), lambda == 0.0, lambda};
  }
}

template <ProcessTheory T>
RepertoireValue<T> repertoire_value(const System<T>& sys, Variant variant, Direction dir,
                                    const typename T::Process& m, ElementSet mech, ElementSet purview,
                                    double tol_zero = kZeroTolerance) {
  if (variant == Variant::generic)
    return dir == Direction::effect ? generic_effect(sys, m, mech, purview)
                                    : generic_cause(sys, m, mech, purview, tol_zero);
  return dir == Direction::effect ? iit3_effect(sys, m, mech, purview)
                                  : iit3_cause(sys, m, mech, purview, tol_zero);
}

/// Repertoire values of one system at one fixed state s. Values per
/// (direction, M, P) are evaluated at m = s|_M and cached; a Repertoires
/// object is not meant to be shared between threads.
template <ProcessTheory T>
class Repertoires {
 public:
  using Process = typename T::Process;

  Repertoires(const System<T>& sys, Process state, Variant variant, double tol_zero = kZeroTolerance)
      : sys_(sys), state_(std::move(state)), variant_(variant), tol_zero_(tol_zero) {
    if (!(state_.cod() == sys_.object())) throw DomainError("system state lives on the wrong object");
  }

  const System<T>& system() const { return sys_; }
  const Process& state() const { return state_; }
  Variant variant() const { return variant_; }
  double tol_zero() const { return tol_zero_; }

  /// value_{M->P}(s|_M) over the purview.
  const RepertoireValue<T>& value(Direction dir, ElementSet mech, ElementSet purview) {
    const auto key = std::make_tuple(dir == Direction::cause, mech.bits(), purview.bits());
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      const auto m = restrict_state<T>(state_, mech);
      it = cache_.emplace(key, repertoire_value(sys_, variant_, dir, m, mech, purview, tol_zero_)).first;
    }
    return it->second;
  }

  /// Extended value over S: iso_P⁻¹(value_{M->P} ⊗ value_{∅->P'}).
  RepertoireValue<T> extended(Direction dir, ElementSet mech, ElementSet purview) {
    return decomposed(dir, mech, purview, mech, purview);
  }

  /// Decomposed value over S for the split M = K ⊎ (M∖K), P = L ⊎ (P∖L).
  RepertoireValue<T> decomposed(Direction dir, ElementSet mech, ElementSet purview, ElementSet k,
                                ElementSet l) {
    if (!k.subset_of(mech) || !l.subset_of(purview))
      throw DomainError("split parts must lie inside the mechanism and purview");
    const std::size_t n = sys_.size();
    const ElementSet rest = purview.complement(n);
    const auto& first = value(dir, k, l);
    const auto& second = value(dir, mech.minus(k), purview.minus(l));
    const auto& free = value(dir, ElementSet{}, rest);
    if (first.zero || second.zero || free.zero)
      return {T::zero(Object::unit(), sys_.object()), true, 0.0};
    // first ⊗ second lives on S_L ⊗ S_{P∖L}; bring it to S_P, then to S.
    const auto on_p = merge_state<T>(sys_.object().select(purview), purview.localize(l),
                                     T::tensor(first.state, second.state));
    auto full = merge_state<T>(sys_.object(), purview, T::tensor(on_p, free.state));
    return {std::move(full), false, first.lambda};
  }

 private:
  System<T> sys_;
  Process state_;
  Variant variant_;
  double tol_zero_;
  std::map<std::tuple<bool, std::uint32_t, std::uint32_t>, RepertoireValue<T>> cache_;
};

/// Weak causality of a repertoire: every causal input maps to a causal or
/// zero state. Checked on the basis states of S_M and a fixed pseudo-random
/// sample of causal states.
template <ProcessTheory T>
bool check_weak_causality(const System<T>& sys, Variant variant, Direction dir, ElementSet mech,
                          ElementSet purview, CauseForm form = CauseForm::normalized, double tol = 1e-8,
                          std::size_t samples = 16) {
  const Object m_obj = sys.object().select(mech);
  auto ok = [&](const typename T::Process& m) {
    RepertoireValue<T> v = (dir == Direction::cause && form == CauseForm::raw)
                               ? generic_cause(sys, m, mech, purview, kZeroTolerance, CauseForm::raw)
                               : repertoire_value(sys, variant, dir, m, mech, purview);
    return T::is_zero(v.state) || T::is_causal(v.state, tol);
  };
  for (std::size_t x = 0; x < m_obj.dim(); ++x)
    if (!ok(T::point_state(m_obj, x))) return false;
  std::mt19937_64 rng(0x5eed);
  for (std::size_t k = 0; k < samples; ++k)
    if (!ok(T::random_state(m_obj, rng))) return false;
  return true;
}

}  // namespace procphi
