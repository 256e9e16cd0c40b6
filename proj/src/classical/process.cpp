#include "procphi/classical/process.hpp"

#include <cmath>
#include <string>

#include "procphi/errors.hpp"
#include "procphi/kernels.hpp"

namespace procphi::classical {

Process::Process(Object dom, Object cod, std::vector<double> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.dim() * cod_.dim())
    throw DomainError("classical process table has " + std::to_string(table_.size()) +
                      " entries, expected " + std::to_string(dom_.dim() * cod_.dim()));
  for (double v : table_)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw DomainError("classical process entries must be finite and nonnegative");
}

Process identity(const Object& a) {
  std::vector<double> t(a.dim() * a.dim(), 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) t[i * a.dim() + i] = 1.0;
  return Process(a, a, std::move(t));
}

Process compose(const Process& f, const Process& g) {
  if (!(f.cod() == g.dom())) throw DomainError("compose: codomain/domain mismatch");
  std::vector<double> out(f.rows() * g.cols());
  kernels::matmul(f.table().data(), g.table().data(), out.data(), f.rows(), f.cols(), g.cols());
  return Process(f.dom(), g.cod(), std::move(out));
}

Process tensor(const Process& f, const Process& g) {
  const std::size_t ra = f.rows(), cb = f.cols(), rc = g.rows(), cd = g.cols();
  std::vector<double> out(ra * rc * cb * cd);
  const std::size_t out_cols = cb * cd;
  // (f ⊗ g)[(a + |A| c), (b + |B| d)] = f(a, b) g(c, d)
  for (std::size_t c = 0; c < rc; ++c) {
    for (std::size_t a = 0; a < ra; ++a) {
      double* dst = out.data() + (a + ra * c) * out_cols;
      for (std::size_t d = 0; d < cd; ++d)
        kernels::scale_copy(f.row(a).data(), g(c, d), dst + cb * d, cb);
    }
  }
  return Process(f.dom().tensor(g.dom()), f.cod().tensor(g.cod()), std::move(out));
}

Process permutation(const Object& a, std::span<const std::size_t> perm) {
  const auto map = permutation_index_map(a, perm);
  std::vector<double> t(a.dim() * a.dim(), 0.0);
  for (std::size_t x = 0; x < a.dim(); ++x) t[x * a.dim() + map[x]] = 1.0;
  return Process(a, a.permuted(perm), std::move(t));
}

Process swap(const Object& a, const Object& b) {
  const Object ab = a.tensor(b);
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < b.num_factors(); ++i) perm.push_back(a.num_factors() + i);
  for (std::size_t i = 0; i < a.num_factors(); ++i) perm.push_back(i);
  return permutation(ab, perm);
}

Process discard(const Object& a) { return Process(a, Object::unit(), std::vector<double>(a.dim(), 1.0)); }

Process mixed(const Object& a) {
  return Process(Object::unit(), a, std::vector<double>(a.dim(), 1.0 / static_cast<double>(a.dim())));
}

Process zero(const Object& dom, const Object& cod) {
  return Process(dom, cod, std::vector<double>(dom.dim() * cod.dim(), 0.0));
}

Process dagger(const Process& f) {
  std::vector<double> t(f.rows() * f.cols());
  for (std::size_t a = 0; a < f.rows(); ++a)
    for (std::size_t b = 0; b < f.cols(); ++b) t[b * f.rows() + a] = f(a, b);
  return Process(f.cod(), f.dom(), std::move(t));
}

Process scaled(const Process& f, double r) {
  if (!(r >= 0.0)) throw DomainError("classical scalars are nonnegative");
  std::vector<double> t(f.table().size());
  kernels::scale_copy(f.table().data(), r, t.data(), t.size());
  return Process(f.dom(), f.cod(), std::move(t));
}

Process state(const Object& a, std::vector<double> weights) {
  return Process(Object::unit(), a, std::move(weights));
}

Process point_state(const Object& a, std::size_t index) {
  if (index >= a.dim()) throw DomainError("basis index out of range");
  std::vector<double> w(a.dim(), 0.0);
  w[index] = 1.0;
  return state(a, std::move(w));
}

Process scalar(double value) { return Process(Object::unit(), Object::unit(), {value}); }

double scalar_value(const Process& s) {
  if (s.rows() != 1 || s.cols() != 1) throw DomainError("not a scalar");
  return s(0, 0);
}

bool is_causal(const Process& f, double tol) {
  for (std::size_t a = 0; a < f.rows(); ++a) {
    double sum = 0.0;
    for (double v : f.row(a)) sum += v;
    if (std::abs(sum - 1.0) > tol) return false;
  }
  return true;
}

bool is_cocausal(const Process& f, double tol) {
  const double in = 1.0 / static_cast<double>(f.rows());
  const double out = 1.0 / static_cast<double>(f.cols());
  for (std::size_t b = 0; b < f.cols(); ++b) {
    double sum = 0.0;
    for (std::size_t a = 0; a < f.rows(); ++a) sum += f(a, b) * in;
    if (std::abs(sum - out) > tol) return false;
  }
  return true;
}

double mass(const Process& s) {
  double sum = 0.0;
  for (double v : s.table()) sum += v;
  return sum;
}

bool is_zero(const Process& f, double tol) {
  for (double v : f.table())
    if (v > tol) return false;
  return true;
}

bool approx_equal(const Process& f, const Process& g, double tol) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) return false;
  for (std::size_t i = 0; i < f.table().size(); ++i)
    if (std::abs(f.table()[i] - g.table()[i]) > tol) return false;
  return true;
}

Process apply(const Process& f, const Process& s) { return compose(s, f); }

Process reorder(const Process& s, std::span<const std::size_t> perm) {
  const auto map = permutation_index_map(s.cod(), perm);
  std::vector<double> out(s.cols());
  for (std::size_t x = 0; x < s.cols(); ++x) out[map[x]] = s(0, x);
  return state(s.cod().permuted(perm), std::move(out));
}

Process marginal(const Process& s, ElementSet keep) {
  const Object& a = s.cod();
  const Object kept = a.select(keep);
  const auto kept_idx = keep.indices();
  std::vector<double> out(kept.dim(), 0.0);
  std::vector<std::size_t> sub(kept_idx.size());
  for (std::size_t x = 0; x < a.dim(); ++x) {
    const auto d = a.digits(x);
    for (std::size_t k = 0; k < kept_idx.size(); ++k) sub[k] = d[kept_idx[k]];
    const std::size_t y = kept.index(sub);
    out[y] = out[y] + s(0, x);
  }
  return state(kept, std::move(out));
}

Process marginalize(const Process& s, std::size_t split, Side keep) {
  const std::size_t n = s.cod().num_factors();
  if (split > n) throw DomainError("marginalize: split beyond factor count");
  const ElementSet first = ElementSet::all(split);
  return marginal(s, keep == Side::first ? first : first.complement(n));
}

}  // namespace procphi::classical
