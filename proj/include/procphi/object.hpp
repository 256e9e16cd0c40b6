#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "procphi/element_set.hpp"

namespace procphi {

/// How the ground metric of a composite object combines its factor metrics.
/// `sum` gives Hamming distance on binary elements; `max` turns point metrics
/// into the point metric of the product.
enum class ProductMetric { sum, max };

/// One tensor factor ("element") of an object.
struct Factor {
  std::size_t dim = 1;
  /// Row-major dim x dim ground metric; null means the point metric 1 - delta.
  /// Only meaningful for classical objects.
  std::shared_ptr<const std::vector<double>> metric;

  double distance(std::size_t a, std::size_t b) const {
    if (metric) return (*metric)[a * dim + b];
    return a == b ? 0.0 : 1.0;
  }
  bool operator==(const Factor& other) const;
};

/// An object of a process theory, described by its ordered element factors.
/// The trivial object I has no factors and dimension 1.
///
/// Basis states of a composite are indexed little-endian: factor 0 varies
/// fastest, so (x_0, ..., x_{k-1}) has index x_0 + d_0 (x_1 + d_1 (...)).
class Object {
 public:
  Object() = default;
  explicit Object(std::vector<Factor> factors, ProductMetric product = ProductMetric::sum);

  static Object unit() { return Object(); }
  static Object element(std::size_t dim,
                        std::shared_ptr<const std::vector<double>> metric = nullptr,
                        ProductMetric product = ProductMetric::sum);
  /// Elements with the given dimensions and point metrics.
  static Object elements(std::span<const std::size_t> dims,
                         ProductMetric product = ProductMetric::sum);

  std::size_t dim() const { return dim_; }
  std::size_t num_factors() const { return factors_.size(); }
  const Factor& factor(std::size_t i) const { return factors_.at(i); }
  std::span<const Factor> factors() const { return factors_; }
  std::vector<std::size_t> dims() const;
  ProductMetric product_metric() const { return product_; }

  /// A ⊗ B: factors of `other` appended after ours.
  Object tensor(const Object& other) const;
  /// Sub-object on the chosen factors, kept in ascending order.
  Object select(ElementSet factors) const;
  /// Object whose factor k is our factor perm[k].
  Object permuted(std::span<const std::size_t> perm) const;

  /// Ground-metric distance between two basis states.
  double ground_distance(std::size_t a, std::size_t b) const;
  /// Validates every factor metric (symmetry, zero diagonal, triangle).
  bool metric_is_valid(double tol = 1e-12) const;

  std::vector<std::size_t> digits(std::size_t index) const;
  std::size_t index(std::span<const std::size_t> digits) const;

  bool operator==(const Object& other) const;

 private:
  std::vector<Factor> factors_;
  std::size_t dim_ = 1;
  ProductMetric product_ = ProductMetric::sum;
};

/// Index map of a factor permutation: basis index x of `from` goes to
/// result[x] in from.permuted(perm).
std::vector<std::size_t> permutation_index_map(const Object& from,
                                               std::span<const std::size_t> perm);

/// Factor order placing the elements of `first` (ascending) before the rest
/// (ascending). Feeding it to Object::permuted realizes the isomorphism
/// S -> S_J ⊗ S_J'.
std::vector<std::size_t> split_order(std::size_t n, ElementSet first);

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);

}  // namespace procphi
