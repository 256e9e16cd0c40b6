#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <string_view>

#include "procphi/element_set.hpp"
#include "procphi/object.hpp"

// The contract every backend satisfies. A backend is a traits struct of
// static functions over one process type; the higher modules (systems,
// repertoires, the IIT engine) are templates over it.

namespace procphi {

template <class T>
concept ProcessTheory = requires(const typename T::Process& f, const Object& a, double r,
                                 std::span<const std::size_t> perm, ElementSet keep) {
  { T::name } -> std::convertible_to<std::string_view>;
  { T::supports_iit3 } -> std::convertible_to<bool>;
  { f.dom() } -> std::convertible_to<const Object&>;
  { f.cod() } -> std::convertible_to<const Object&>;
  { T::identity(a) } -> std::same_as<typename T::Process>;
  { T::compose(f, f) } -> std::same_as<typename T::Process>;
  { T::tensor(f, f) } -> std::same_as<typename T::Process>;
  { T::permutation(a, perm) } -> std::same_as<typename T::Process>;
  { T::discard(a) } -> std::same_as<typename T::Process>;
  { T::mixed(a) } -> std::same_as<typename T::Process>;
  { T::zero(a, a) } -> std::same_as<typename T::Process>;
  { T::dagger(f) } -> std::same_as<typename T::Process>;
  { T::scaled(f, r) } -> std::same_as<typename T::Process>;
  { T::point_state(a, std::size_t{}) } -> std::same_as<typename T::Process>;
  { T::is_causal(f, r) } -> std::convertible_to<bool>;
  { T::is_cocausal(f, r) } -> std::convertible_to<bool>;
  { T::mass(f) } -> std::convertible_to<double>;
  { T::is_zero(f) } -> std::convertible_to<bool>;
  { T::approx_equal(f, f, r) } -> std::convertible_to<bool>;
  { T::apply(f, f) } -> std::same_as<typename T::Process>;
  { T::reorder(f, perm) } -> std::same_as<typename T::Process>;
  { T::marginal(f, keep) } -> std::same_as<typename T::Process>;
  { T::distance(f, f) } -> std::convertible_to<double>;
};

/// Isomorphism S -> S_J ⊗ S_J' realized as a factor permutation.
template <ProcessTheory T>
typename T::Process split_iso(const Object& s, ElementSet j) {
  const auto order = split_order(s.num_factors(), j);
  return T::permutation(s, order);
}

/// Inverse of split_iso: S_J ⊗ S_J' -> S.
template <ProcessTheory T>
typename T::Process merge_iso(const Object& s, ElementSet j) {
  const auto order = split_order(s.num_factors(), j);
  const auto inv = inverse_permutation(order);
  return T::permutation(s.permuted(order), inv);
}

/// State-level iso_J⁻¹: a state on S_J ⊗ S_J' (in that order) as a state on S.
template <ProcessTheory T>
typename T::Process merge_state(const Object& s, ElementSet j, const typename T::Process& joint) {
  const auto order = split_order(s.num_factors(), j);
  const auto inv = inverse_permutation(order);
  return T::reorder(joint, inv);
}

template <ProcessTheory T>
typename T::Process swap(const Object& a, const Object& b) {
  const std::size_t na = a.num_factors(), nb = b.num_factors();
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < nb; ++i) perm.push_back(na + i);
  for (std::size_t i = 0; i < na; ++i) perm.push_back(i);
  return T::permutation(a.tensor(b), perm);
}

/// Rescale a state to unit mass; returns the zero state when its mass is at
/// most tol_zero. `lambda` receives the normalization scalar (0 for zero).
template <ProcessTheory T>
typename T::Process normalized(const typename T::Process& s, double tol_zero, double* lambda = nullptr) {
  const double m = T::mass(s);
  if (!(m > tol_zero)) {
    if (lambda) *lambda = 0.0;
    return T::zero(s.dom(), s.cod());
  }
  if (lambda) *lambda = 1.0 / m;
  return T::scaled(s, 1.0 / m);
}

}  // namespace procphi
