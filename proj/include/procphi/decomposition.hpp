#pragma once

#include <vector>

#include "procphi/element_set.hpp"
#include "procphi/errors.hpp"
#include "procphi/object.hpp"
#include "procphi/theory.hpp"

// Element-based decompositions S ≅ S_J ⊗ S_J' of a factored object.

namespace procphi {

class Decomposition {
 public:
  Decomposition(Object parent, ElementSet left) : parent_(std::move(parent)), left_(left) {
    if (!left_.subset_of(ElementSet::all(parent_.num_factors())))
      throw DomainError("decomposition subset exceeds the object's elements");
  }

  /// 1 = (S, I).
  static Decomposition top(const Object& s) { return {s, ElementSet::all(s.num_factors())}; }
  /// 0 = (I, S).
  static Decomposition bottom(const Object& s) { return {s, ElementSet{}}; }

  const Object& parent() const { return parent_; }
  ElementSet left() const { return left_; }
  ElementSet right() const { return left_.complement(parent_.num_factors()); }
  Object left_object() const { return parent_.select(left_); }
  Object right_object() const { return parent_.select(right()); }

  bool is_top() const { return right().empty(); }
  bool is_bottom() const { return left_.empty(); }

  template <ProcessTheory T>
  typename T::Process iso() const { return split_iso<T>(parent_, left_); }
  template <ProcessTheory T>
  typename T::Process iso_inverse() const { return merge_iso<T>(parent_, left_); }

  bool operator==(const Decomposition& o) const { return left_ == o.left_ && parent_ == o.parent_; }

 private:
  Object parent_;
  ElementSet left_;
};

/// (A, A')⊥ = (A', A).
inline Decomposition complement(const Decomposition& d) { return {d.parent(), d.right()}; }

/// d1 ⪯ d2: for element-based decompositions, J(d1) ⊆ J(d2).
inline bool preceq(const Decomposition& d1, const Decomposition& d2) {
  if (!(d1.parent() == d2.parent())) throw DomainError("preceq: decompositions of different objects");
  return d1.left().subset_of(d2.left());
}

inline bool equivalent(const Decomposition& d1, const Decomposition& d2) {
  return preceq(d1, d2) && preceq(d2, d1);
}

/// The decomposition set of a factored object: one decomposition per
/// subset of its elements.
class DecompositionSet {
 public:
  explicit DecompositionSet(Object parent) : parent_(std::move(parent)) {}

  static DecompositionSet from_elements(const Object& s) { return DecompositionSet(s); }

  const Object& parent() const { return parent_; }
  std::size_t num_elements() const { return parent_.num_factors(); }
  std::size_t size() const { return std::size_t{1} << num_elements(); }

  bool contains(const Decomposition& d) const {
    return d.parent() == parent_ && d.left().subset_of(ElementSet::all(num_elements()));
  }
  /// Members in increasing subset order (0 first, 1 last).
  std::vector<Decomposition> members() const {
    std::vector<Decomposition> out;
    for (auto j : ElementSet::all(num_elements()).subsets()) out.emplace_back(parent_, j);
    return out;
  }

 private:
  Object parent_;
};

/// D|_A for d = (A, A') in D: the decompositions of A = S_J, one per K ⊆ J.
inline DecompositionSet restrict(const DecompositionSet& set, const Decomposition& d) {
  if (!set.contains(d)) throw DomainError("restrict: decomposition is not a member of the set");
  return DecompositionSet(d.left_object());
}

}  // namespace procphi
