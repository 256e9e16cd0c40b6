#pragma once

#include <optional>
#include <string>

#include "procphi/decomposition.hpp"
#include "procphi/errors.hpp"
#include "procphi/theory.hpp"

namespace procphi {

enum class CutKind { symmetric, directional };

/// A factored object S with its causal time evolution T : S -> S and an
/// optional explicit reverse evolution (otherwise T† is used).
template <ProcessTheory T>
class System {
 public:
  using Process = typename T::Process;

  System(Object object, Process evolution, std::optional<Process> reverse = std::nullopt,
         double tol_causal = 1e-9)
      : object_(std::move(object)), evolution_(std::move(evolution)), reverse_(std::move(reverse)) {
    if (!(evolution_.dom() == object_) || !(evolution_.cod() == object_))
      throw DomainError("time evolution must map the system object to itself");
    if (!T::is_causal(evolution_, tol_causal)) throw ValidationError("time evolution is not causal");
    if (reverse_ && (!(reverse_->dom() == object_) || !(reverse_->cod() == object_)))
      throw DomainError("reverse evolution must map the system object to itself");
  }

  const Object& object() const { return object_; }
  std::size_t size() const { return object_.num_factors(); }
  const Process& evolution() const { return evolution_; }
  const std::optional<Process>& explicit_reverse() const { return reverse_; }
  Process reverse_evolution() const { return reverse_ ? *reverse_ : T::dagger(evolution_); }
  DecompositionSet decompositions() const { return DecompositionSet::from_elements(object_); }

 private:
  Object object_;
  Process evolution_;
  std::optional<Process> reverse_;
};

/// s|_J: marginal (partial trace) onto the elements of J.
template <ProcessTheory T>
typename T::Process restrict_state(const typename T::Process& s, ElementSet j) {
  return T::marginal(s, j);
}

namespace detail {

/// (id_C ⊗ ⫠_C') ∘ iso_J ∘ f ∘ iso_J⁻¹ ∘ (id_C ⊗ c) for a state c on C'.
template <ProcessTheory T>
typename T::Process condition(const Object& s, const typename T::Process& f, ElementSet j,
                              const typename T::Process& c) {
  const std::size_t n = s.num_factors();
  const Object a = s.select(j);
  const Object rest = s.select(j.complement(n));
  auto p = T::tensor(T::identity(a), c);
  p = T::compose(p, merge_iso<T>(s, j));
  p = T::compose(p, f);
  p = T::compose(p, split_iso<T>(s, j));
  return T::compose(p, T::tensor(T::identity(a), T::discard(rest)));
}

/// iso_J⁻¹ ∘ (f→C ⊗ f→C') ∘ iso_J with both halves driven by noise from the
/// other side.
template <ProcessTheory T>
typename T::Process sever(const Object& s, const typename T::Process& f, ElementSet j) {
  const std::size_t n = s.num_factors();
  const ElementSet jc = j.complement(n);
  const auto to_c = condition<T>(s, f, j, T::mixed(s.select(jc)));
  const auto to_rest = condition<T>(s, f, jc, T::mixed(s.select(j)));
  auto p = T::compose(split_iso<T>(s, j), T::tensor(to_c, to_rest));
  return T::compose(p, merge_iso<T>(s, j));
}

}  // namespace detail

/// Subsystem on C = S_J, conditioned on the rest of the system being in
/// s|_C'. An explicit reverse evolution is restricted by the same formula.
template <ProcessTheory T>
System<T> subsystem(const System<T>& sys, const typename T::Process& s, ElementSet j) {
  const std::size_t n = sys.size();
  if (!j.subset_of(ElementSet::all(n))) throw DomainError("subsystem: subset exceeds the system");
  if (j == ElementSet::all(n)) return sys;
  const auto background = restrict_state<T>(s, j.complement(n));
  auto evo = detail::condition<T>(sys.object(), sys.evolution(), j, background);
  std::optional<typename T::Process> rev;
  if (sys.explicit_reverse())
    rev = detail::condition<T>(sys.object(), *sys.explicit_reverse(), j, background);
  return System<T>(sys.object().select(j), std::move(evo), std::move(rev));
}

template <ProcessTheory T>
System<T> symmetric_cut(const System<T>& sys, ElementSet j) {
  const std::size_t n = sys.size();
  if (j.empty() || !j.subset_of(ElementSet::all(n)) || j == ElementSet::all(n))
    throw DomainError("symmetric cut needs a nontrivial bipartition");
  auto evo = detail::sever<T>(sys.object(), sys.evolution(), j);
  std::optional<typename T::Process> rev;
  if (sys.explicit_reverse()) rev = detail::sever<T>(sys.object(), *sys.explicit_reverse(), j);
  return System<T>(sys.object(), std::move(evo), std::move(rev));
}

/// Connections from the elements of J to the rest are replaced by noise.
template <ProcessTheory T>
System<T> directional_cut(const System<T>& sys, ElementSet j, double tol = 1e-9) {
  const std::size_t n = sys.size();
  if (!j.subset_of(ElementSet::all(n))) throw DomainError("directional cut: subset exceeds the system");
  auto evo = T::directional_cut(sys.evolution(), j, tol);
  std::optional<typename T::Process> rev;
  if (sys.explicit_reverse()) rev = T::directional_cut(*sys.explicit_reverse(), j, tol);
  return System<T>(sys.object(), std::move(evo), std::move(rev));
}

template <ProcessTheory T>
System<T> cut(const System<T>& sys, CutKind kind, ElementSet j) {
  return kind == CutKind::symmetric ? symmetric_cut(sys, j) : directional_cut(sys, j);
}

template <ProcessTheory T>
bool check_conditional_independence(const System<T>& sys, double tol = 1e-9) {
  return T::is_conditionally_independent(sys.evolution(), tol);
}

}  // namespace procphi
