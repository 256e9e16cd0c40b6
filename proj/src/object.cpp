#include "procphi/object.hpp"

#include <algorithm>
#include <cmath>

#include "procphi/errors.hpp"

namespace procphi {

bool Factor::operator==(const Factor& other) const {
  if (dim != other.dim) return false;
  if (metric == other.metric) return true;
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      if (distance(a, b) != other.distance(a, b)) return false;
  return true;
}

Object::Object(std::vector<Factor> factors, ProductMetric product)
    : factors_(std::move(factors)), product_(product) {
  for (const auto& f : factors_) {
    if (f.dim == 0) throw DomainError("object factor of dimension 0");
    if (f.metric && f.metric->size() != f.dim * f.dim)
      throw DomainError("ground metric table has the wrong size");
    dim_ *= f.dim;
  }
}

Object Object::element(std::size_t dim, std::shared_ptr<const std::vector<double>> metric,
                       ProductMetric product) {
  return Object({Factor{dim, std::move(metric)}}, product);
}

Object Object::elements(std::span<const std::size_t> dims, ProductMetric product) {
  std::vector<Factor> fs;
  for (auto d : dims) fs.push_back(Factor{d, nullptr});
  return Object(std::move(fs), product);
}

std::vector<std::size_t> Object::dims() const {
  std::vector<std::size_t> out;
  for (const auto& f : factors_) out.push_back(f.dim);
  return out;
}

Object Object::tensor(const Object& other) const {
  std::vector<Factor> fs = factors_;
  fs.insert(fs.end(), other.factors_.begin(), other.factors_.end());
  // The unit carries no meaningful combination rule; take the other side's.
  const ProductMetric p = factors_.empty() ? other.product_ : product_;
  return Object(std::move(fs), p);
}

Object Object::select(ElementSet which) const {
  std::vector<Factor> fs;
  for (auto i : which.indices()) {
    if (i >= factors_.size()) throw DomainError("element index out of range");
    fs.push_back(factors_[i]);
  }
  return Object(std::move(fs), product_);
}

Object Object::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != factors_.size()) throw DomainError("permutation size mismatch");
  std::vector<Factor> fs;
  for (auto p : perm) fs.push_back(factors_.at(p));
  return Object(std::move(fs), product_);
}

double Object::ground_distance(std::size_t a, std::size_t b) const {
  double acc = 0.0;
  for (const auto& f : factors_) {
    const double d = f.distance(a % f.dim, b % f.dim);
    acc = product_ == ProductMetric::sum ? acc + d : std::max(acc, d);
    a /= f.dim;
    b /= f.dim;
  }
  return acc;
}

bool Object::metric_is_valid(double tol) const {
  for (const auto& f : factors_) {
    for (std::size_t a = 0; a < f.dim; ++a) {
      if (std::abs(f.distance(a, a)) > tol) return false;
      for (std::size_t b = 0; b < f.dim; ++b) {
        const double dab = f.distance(a, b);
        if (dab < -tol || std::abs(dab - f.distance(b, a)) > tol) return false;
        if (a != b && dab <= 0.0) return false;
        for (std::size_t c = 0; c < f.dim; ++c)
          if (dab > f.distance(a, c) + f.distance(c, b) + tol) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> Object::digits(std::size_t index) const {
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = index % factors_[i].dim;
    index /= factors_[i].dim;
  }
  return out;
}

std::size_t Object::index(std::span<const std::size_t> digits) const {
  std::size_t idx = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) idx = idx * factors_[i].dim + digits[i];
  return idx;
}

bool Object::operator==(const Object& other) const {
  if (factors_ != other.factors_) return false;
  return factors_.size() <= 1 || product_ == other.product_;
}

std::vector<std::size_t> permutation_index_map(const Object& from,
                                               std::span<const std::size_t> perm) {
  const Object to = from.permuted(perm);
  std::vector<std::size_t> map(from.dim());
  std::vector<std::size_t> out_digits(perm.size());
  for (std::size_t x = 0; x < from.dim(); ++x) {
    const auto d = from.digits(x);
    for (std::size_t k = 0; k < perm.size(); ++k) out_digits[k] = d[perm[k]];
    map[x] = to.index(out_digits);
  }
  return map;
}

std::vector<std::size_t> split_order(std::size_t n, ElementSet first) {
  std::vector<std::size_t> order = first.indices();
  for (auto i : first.complement(n).indices()) order.push_back(i);
  return order;
}

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv.at(perm[k]) = k;
  return inv;
}

}  // namespace procphi
