#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "procphi/parallel.hpp"
#include "procphi/repertoire.hpp"
#include "procphi/system.hpp"

// φ of repertoires, concepts, Q-shapes, system-level integration over cuts
// and the major complex.

namespace procphi {

/// Integration values at or below this are reported as exactly zero; they
/// are rounding residue of decompositions that reproduce the value.
inline constexpr double kPhiFloor = 1e-12;
/// Window within which two φ or Φ values count as tied.
inline constexpr double kTieTolerance = 1e-9;

inline double clamp_phi(double v) { return v <= kPhiFloor ? 0.0 : v; }

/// One candidate decomposition pair: M = K ⊎ (M∖K), P = L ⊎ (P∖L).
struct Split {
  ElementSet mechanism_part;
  ElementSet purview_part;
  bool operator==(const Split&) const = default;
};

/// Every split pair except the two that reproduce the undecomposed value,
/// (K, L) = (M, P) and (∅, ∅). Mechanism part varies slowest.
inline std::vector<Split> split_candidates(ElementSet mech, ElementSet purview) {
  std::vector<Split> out;
  for (auto k : mech.subsets())
    for (auto l : purview.subsets()) {
      if ((k == mech && l == purview) || (k.empty() && l.empty())) continue;
      out.push_back({k, l});
    }
  return out;
}

struct PhiResult {
  double value = 0.0;
  /// First minimizing split; empty when no candidate exists or the value is zero.
  std::optional<Split> split;
  bool zero_repertoire = false;
};

template <ProcessTheory T>
PhiResult phi_of_repertoire(Repertoires<T>& reps, Direction dir, ElementSet mech, ElementSet purview) {
  PhiResult r;
  const auto whole = reps.extended(dir, mech, purview);
  if (whole.zero) {
    r.zero_repertoire = true;
    return r;
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : split_candidates(mech, purview)) {
    const auto part = reps.decomposed(dir, mech, purview, c.mechanism_part, c.purview_part);
    const double d = T::distance(whole.state, part.state);
    if (d < best) {
      best = d;
      r.split = c;
    }
  }
  if (!r.split) return r;
  r.value = clamp_phi(best);
  return r;
}

struct Core {
  ElementSet purview;
  PhiResult phi;
};

/// Purview with maximal φ. Ties (within kTieTolerance) go to the smaller,
/// then lexicographically smaller, purview. The empty purview takes part.
template <ProcessTheory T>
Core core(Repertoires<T>& reps, Direction dir, ElementSet mech) {
  std::optional<Core> best;
  for (auto p : ElementSet::all(reps.system().size()).subsets()) {
    Core c{p, phi_of_repertoire(reps, dir, mech, p)};
    if (!best || c.phi.value > best->phi.value + kTieTolerance ||
        (std::abs(c.phi.value - best->phi.value) <= kTieTolerance &&
         smaller_then_lexicographic(c.purview, best->purview)))
      best = std::move(c);
  }
  return *best;
}

template <ProcessTheory T>
struct Concept {
  ElementSet mechanism;
  Core cause_core;
  Core effect_core;
  /// min of the cause and effect φ.
  double phi = 0.0;
  /// Extended cause and effect values over the system object.
  typename T::Process cause;
  typename T::Process effect;
};

/// The concept of mechanism M, or nothing when φ(M) = 0.
template <ProcessTheory T>
std::optional<Concept<T>> concept_of(Repertoires<T>& reps, ElementSet mech) {
  if (mech.empty()) return std::nullopt;
  auto c = core(reps, Direction::cause, mech);
  auto e = core(reps, Direction::effect, mech);
  const double phi = std::min(c.phi.value, e.phi.value);
  if (!(phi > 0.0)) return std::nullopt;
  auto cs = reps.extended(Direction::cause, mech, c.purview).state;
  auto es = reps.extended(Direction::effect, mech, e.purview).state;
  return Concept<T>{mech, std::move(c), std::move(e), phi, std::move(cs), std::move(es)};
}

template <ProcessTheory T>
struct QShape {
  Object object;
  /// Ordered by mechanism bitmask.
  std::vector<Concept<T>> concepts;

  const Concept<T>* find(ElementSet mech) const {
    for (const auto& c : concepts)
      if (c.mechanism == mech) return &c;
    return nullptr;
  }
};

template <ProcessTheory T>
QShape<T> qshape(Repertoires<T>& reps) {
  QShape<T> q{reps.system().object(), {}};
  for (auto m : ElementSet::all(reps.system().size()).subsets()) {
    if (auto c = concept_of(reps, m)) q.concepts.push_back(std::move(*c));
  }
  return q;
}

/// pe((x, r), (y, t)) = min(r, t) d(x, y) + |r - t| on states with intensities.
template <ProcessTheory T>
double proto_experience_distance(const typename T::Process& x, double r, const typename T::Process& y,
                                 double t) {
  const double w = std::min(r, t);
  const double d = w > 0.0 ? w * T::distance(x, y) : 0.0;
  return d + std::abs(r - t);
}

/// D(Q, Q') = Σ_M [pe(cause) + pe(effect)]; a missing concept enters as
/// (⫞, 0).
template <ProcessTheory T>
double qshape_distance(const QShape<T>& a, const QShape<T>& b) {
  if (!(a.object == b.object)) throw DomainError("Q-shapes live on different objects");
  const auto noise = T::mixed(a.object);
  double total = 0.0;
  for (auto m : ElementSet::all(a.object.num_factors()).subsets()) {
    const auto* ca = a.find(m);
    const auto* cb = b.find(m);
    if (!ca && !cb) continue;
    const double ra = ca ? ca->phi : 0.0, rb = cb ? cb->phi : 0.0;
    total += proto_experience_distance<T>(ca ? ca->cause : noise, ra, cb ? cb->cause : noise, rb);
    total += proto_experience_distance<T>(ca ? ca->effect : noise, ra, cb ? cb->effect : noise, rb);
  }
  return total;
}

struct Cut {
  CutKind kind = CutKind::symmetric;
  ElementSet part;
  bool operator==(const Cut&) const = default;
};

/// Symmetric cuts: unordered nontrivial bipartitions, named by the side
/// holding element 0. Directional cuts: every nonempty proper part.
inline std::vector<Cut> cut_candidates(std::size_t n, CutKind kind) {
  std::vector<Cut> out;
  if (n < 2) return out;
  const ElementSet all = ElementSet::all(n);
  for (auto j : all.subsets()) {
    if (j.empty() || j == all) continue;
    if (kind == CutKind::symmetric && !j.contains(0)) continue;
    out.push_back({kind, j});
  }
  return out;
}

struct EngineOptions {
  Variant variant = Variant::generic;
  CutKind cut = CutKind::symmetric;
  double tol_zero = kZeroTolerance;
  /// Worker threads for the subsystem scan (0 = hardware concurrency).
  std::size_t threads = 1;
};

template <ProcessTheory T>
struct SystemPhi {
  double value = 0.0;
  std::optional<Cut> cut;
  QShape<T> qshape;
};

template <ProcessTheory T>
SystemPhi<T> system_phi(const System<T>& sys, const typename T::Process& s, const EngineOptions& opt) {
  Repertoires<T> reps(sys, s, opt.variant, opt.tol_zero);
  SystemPhi<T> out{0.0, std::nullopt, qshape(reps)};
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : cut_candidates(sys.size(), opt.cut)) {
    Repertoires<T> cut_reps(cut(sys, c.kind, c.part), s, opt.variant, opt.tol_zero);
    const double d = qshape_distance(out.qshape, qshape(cut_reps));
    if (d < best) {
      best = d;
      out.cut = c;
    }
  }
  if (out.cut) out.value = clamp_phi(best);
  return out;
}

template <ProcessTheory T>
struct SubsystemPhi {
  ElementSet elements;
  SystemPhi<T> result;
};

template <ProcessTheory T>
struct Experience {
  ElementSet complex;
  double phi = 0.0;
  std::optional<Cut> cut;
  /// The complex's Q-shape embedded into the whole system (mechanisms and
  /// purviews renumbered, states padded with ⫞). Empty when Φ = 0.
  QShape<T> qshape;
  /// Every nonempty subsystem, in increasing subset order.
  std::vector<SubsystemPhi<T>> subsystems;
};

/// Embed a Q-shape of the subsystem on J into the Q-shape space of S.
template <ProcessTheory T>
QShape<T> embed(const QShape<T>& q, const Object& s, ElementSet j) {
  const auto pad = T::mixed(s.select(j.complement(s.num_factors())));
  QShape<T> out{s, {}};
  for (const auto& c : q.concepts) {
    Concept<T> e = c;
    e.mechanism = j.globalize(c.mechanism);
    e.cause_core.purview = j.globalize(c.cause_core.purview);
    e.effect_core.purview = j.globalize(c.effect_core.purview);
    if (e.cause_core.phi.split)
      e.cause_core.phi.split = Split{j.globalize(c.cause_core.phi.split->mechanism_part),
                                     j.globalize(c.cause_core.phi.split->purview_part)};
    if (e.effect_core.phi.split)
      e.effect_core.phi.split = Split{j.globalize(c.effect_core.phi.split->mechanism_part),
                                      j.globalize(c.effect_core.phi.split->purview_part)};
    e.cause = merge_state<T>(s, j, T::tensor(c.cause, pad));
    e.effect = merge_state<T>(s, j, T::tensor(c.effect, pad));
    out.concepts.push_back(std::move(e));
  }
  std::sort(out.concepts.begin(), out.concepts.end(),
            [](const auto& x, const auto& y) { return x.mechanism.bits() < y.mechanism.bits(); });
  return out;
}

template <ProcessTheory T>
Experience<T> major_complex(const System<T>& sys, const typename T::Process& s, const EngineOptions& opt) {
  Experience<T> out;
  const std::size_t n = sys.size();
  std::vector<ElementSet> candidates;
  for (auto j : ElementSet::all(n).subsets())
    if (!j.empty()) candidates.push_back(j);
  std::vector<std::optional<SubsystemPhi<T>>> slots(candidates.size());
  parallel_for(candidates.size(), opt.threads, [&](std::size_t i) {
    const ElementSet j = candidates[i];
    const auto sub = subsystem(sys, s, j);
    slots[i] = SubsystemPhi<T>{j, system_phi(sub, restrict_state<T>(s, j), opt)};
  });
  const SubsystemPhi<T>* best = nullptr;
  for (auto& slot : slots) out.subsystems.push_back(std::move(*slot));
  for (const auto& c : out.subsystems) {
    if (!best) {
      best = &c;
      continue;
    }
    const double a = c.result.value, b = best->result.value;
    const bool tie = std::abs(a - b) <= kTieTolerance;
    if (a > b + kTieTolerance ||
        (tie && (c.elements.size() > best->elements.size() ||
                 (c.elements.size() == best->elements.size() &&
                  c.elements.indices() < best->elements.indices()))))
      best = &c;
  }
  out.qshape = QShape<T>{sys.object(), {}};
  if (!best) return out;
  out.complex = best->elements;
  out.phi = best->result.value;
  out.cut = best->result.cut;
  if (out.phi > 0.0) out.qshape = embed(best->result.qshape, sys.object(), best->elements);
  return out;
}

// Integration of a family of processes f^B_A indexed by element-based
// decompositions of a source and a target object.

template <ProcessTheory T>
using Family = std::function<typename T::Process(ElementSet source_part, ElementSet target_part)>;
template <ProcessTheory T>
using ProcessDistance = std::function<double(const typename T::Process&, const typename T::Process&)>;

struct FamilyIntegration {
  double value = 0.0;
  /// Minimizing (source part, target part).
  std::optional<std::pair<ElementSet, ElementSet>> argmin;
  /// True when no candidate pair was left to minimize over.
  bool empty = false;
};

/// Restriction family: f|^{L}_{J} = (id ⊗ ⫠) ∘ iso_L ∘ f ∘ iso_J⁻¹ ∘ (id ⊗ ⫞).
template <ProcessTheory T>
Family<T> restriction_family(typename T::Process f) {
  return [f = std::move(f)](ElementSet j, ElementSet l) {
    const Object& src = f.dom();
    const Object& dst = f.cod();
    auto p = T::tensor(T::identity(src.select(j)), T::mixed(src.select(j.complement(src.num_factors()))));
    p = T::compose(p, merge_iso<T>(src, j));
    p = T::compose(p, f);
    p = T::compose(p, split_iso<T>(dst, l));
    return T::compose(p, T::tensor(T::identity(dst.select(l)),
                                   T::discard(dst.select(l.complement(dst.num_factors())))));
  };
}

/// d_m(f, g) = d(f ∘ m, g ∘ m).
template <ProcessTheory T>
ProcessDistance<T> state_dependent_distance(typename T::Process m) {
  return [m = std::move(m)](const typename T::Process& f, const typename T::Process& g) {
    return T::distance(T::apply(f, m), T::apply(g, m));
  };
}

template <ProcessTheory T>
FamilyIntegration family_integration(const Object& source, const Object& target, const Family<T>& family,
                                     const ProcessDistance<T>& distance) {
  FamilyIntegration out;
  const ElementSet sa = ElementSet::all(source.num_factors());
  const ElementSet ta = ElementSet::all(target.num_factors());
  const auto whole = family(sa, ta);
  double best = std::numeric_limits<double>::infinity();
  for (auto j : sa.subsets())
    for (auto l : ta.subsets()) {
      if ((j == sa && l == ta) || (j.empty() && l.empty())) continue;
      auto p = T::compose(split_iso<T>(source, j),
                          T::tensor(family(j, l), family(sa.minus(j), ta.minus(l))));
      p = T::compose(p, merge_iso<T>(target, l));
      const double d = distance(whole, p);
      if (d < best) {
        best = d;
        out.argmin = std::make_pair(j, l);
      }
    }
  if (!out.argmin) {
    out.empty = true;
    return out;
  }
  out.value = clamp_phi(best);
  return out;
}

}  // namespace procphi
