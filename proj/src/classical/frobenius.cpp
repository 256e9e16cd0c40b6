#include "procphi/classical/frobenius.hpp"

#include "procphi/errors.hpp"

namespace procphi::classical {
namespace {

Object power(const Object& a, std::size_t k) {
  Object out;
  for (std::size_t i = 0; i < k; ++i) out = out.tensor(a);
  return out;
}

// Index of (x, x, ..., x) in A^{⊗k}.
std::size_t diagonal_index(std::size_t x, std::size_t dim, std::size_t k) {
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < k; ++i) {
    idx += x * stride;
    stride *= dim;
  }
  return idx;
}

}  // namespace

Process copy(const Object& a, std::size_t k) {
  if (k == 0) throw DomainError("copy needs at least one output");
  const Object out = power(a, k);
  std::vector<double> t(a.dim() * out.dim(), 0.0);
  for (std::size_t x = 0; x < a.dim(); ++x) t[x * out.dim() + diagonal_index(x, a.dim(), k)] = 1.0;
  return Process(a, out, std::move(t));
}

Process compare(const Object& a, std::size_t k) {
  if (k == 0) throw DomainError("compare needs at least one input");
  return dagger(copy(a, k));
}

}  // namespace procphi::classical
