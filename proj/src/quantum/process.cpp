#include "procphi/quantum/process.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "procphi/errors.hpp"
#include "procphi/kernels.hpp"
#include "procphi/quantum/eigen.hpp"

namespace procphi::quantum {

Process::Process(Object dom, Object cod, CMatrix choi)
    : dom_(std::move(dom)), cod_(std::move(cod)), choi_(std::move(choi)) {
  const std::size_t n = dom_.dim() * cod_.dim();
  if (choi_.rows() != n || choi_.cols() != n)
    throw DomainError("Choi matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  for (const auto& z : choi_.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw DomainError("Choi matrix entries must be finite");
}

Process::Process(Object dom, Object cod, CMatrix choi, Trusted)
    : dom_(std::move(dom)), cod_(std::move(cod)), choi_(std::move(choi)) {
  const std::size_t n = dom_.dim() * cod_.dim();
  if (choi_.rows() != n || choi_.cols() != n) throw DomainError("Choi matrix has the wrong shape");
}

Process identity(const Object& a) {
  const std::size_t d = a.dim();
  CMatrix j(d * d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) j(x + d * x, y + d * y) = 1.0;
  return Process(a, a, std::move(j));
}

namespace {

struct Entry {
  std::size_t k, l;  // the summed indices
  std::size_t row, col;
  Complex v;
};

// Nonzero entries of m in one pass, or nothing once they pass a quarter of
// the matrix. `sum` maps (row, col) to the summed (k, l).
template <class Sum>
std::optional<std::vector<Entry>> sparse_entries(const CMatrix& m, Sum sum) {
  const std::size_t limit = m.data().size() / 4;
  std::vector<Entry> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Complex v = m(r, c);
      if (v.real() == 0.0 && v.imag() == 0.0) continue;
      if (out.size() == limit) return std::nullopt;
      const auto [k, l] = sum(r, c);
      out.push_back({k, l, r, c, v});
    }
  // The reshaped product accumulates with l outer and k inner; keeping that
  // order makes both paths give identical results.
  std::stable_sort(out.begin(), out.end(),
                   [](const Entry& x, const Entry& y) { return std::tie(x.l, x.k) < std::tie(y.l, y.k); });
  return out;
}

void accumulate(Complex& out, Complex a, Complex w) {
  const double re = a.real() * w.real() - a.imag() * w.imag();
  const double im = a.real() * w.imag() + a.imag() * w.real();
  out = Complex(out.real() + re, out.imag() + im);
}

// f's Choi entry (i + da·k, jj + da·l) meets g's (k + db·m, l + db·n).
Process compose_sparse_first(const Process& f, const Process& g, const std::vector<Entry>& fe) {
  const std::size_t da = f.dom().dim(), db = f.cod().dim(), dc = g.cod().dim();
  CMatrix j(da * dc, da * dc);
  const auto& jg = g.choi();
  for (const auto& e : fe) {
    const std::size_t i = e.row % da, jj = e.col % da;
    for (std::size_t m = 0; m < dc; ++m)
      for (std::size_t n = 0; n < dc; ++n) {
        const Complex w = jg(e.k + db * m, e.l + db * n);
        if (w == Complex(0.0)) continue;
        accumulate(j(i + da * m, jj + da * n), e.v, w);
      }
  }
  return Process(f.dom(), g.cod(), std::move(j), Process::Trusted{});
}

Process compose_sparse_second(const Process& f, const Process& g, const std::vector<Entry>& ge) {
  const std::size_t da = f.dom().dim(), db = f.cod().dim(), dc = g.cod().dim();
  CMatrix j(da * dc, da * dc);
  const auto& jf = f.choi();
  for (const auto& e : ge) {
    const std::size_t m = e.row / db, n = e.col / db;
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t jj = 0; jj < da; ++jj) {
        const Complex v = jf(i + da * e.k, jj + da * e.l);
        if (v.real() == 0.0 && v.imag() == 0.0) continue;
        accumulate(j(i + da * m, jj + da * n), v, e.v);
      }
  }
  return Process(f.dom(), g.cod(), std::move(j), Process::Trusted{});
}

}  // namespace

Process compose(const Process& f, const Process& g) {
  if (!(f.cod() == g.dom())) throw DomainError("compose: codomain/domain mismatch");
  const std::size_t da = f.dom().dim(), db = f.cod().dim(), dc = g.cod().dim();
  if (const auto fe = sparse_entries(f.choi(), [da](std::size_t r, std::size_t c) {
        return std::pair{r / da, c / da};
      }))
    return compose_sparse_first(f, g, *fe);
  if (const auto ge = sparse_entries(g.choi(), [db](std::size_t r, std::size_t c) {
        return std::pair{r % db, c % db};
      }))
    return compose_sparse_second(f, g, *ge);
  // Reshape to the superoperator-style matrices F[(i,j),(k,l)] and
  // G[(k,l),(m,n)]; the composite's Choi entries are (F G)[(i,j),(m,n)].
  CMatrix fm(da * da, db * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) fm(i + da * j, k + db * l) = f.choi()(i + da * k, j + da * l);
  CMatrix gm(db * db, dc * dc);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l)
      for (std::size_t m = 0; m < dc; ++m)
        for (std::size_t n = 0; n < dc; ++n) gm(k + db * l, m + dc * n) = g.choi()(k + db * m, l + db * n);
  const CMatrix r = fm * gm;
  CMatrix j(da * dc, da * dc);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t jj = 0; jj < da; ++jj)
      for (std::size_t m = 0; m < dc; ++m)
        for (std::size_t n = 0; n < dc; ++n) j(i + da * m, jj + da * n) = r(i + da * jj, m + dc * n);
  return Process(f.dom(), g.cod(), std::move(j), Process::Trusted{});
}

Process tensor(const Process& f, const Process& g) {
  const std::size_t da = f.dom().dim(), db = f.cod().dim();
  const std::size_t dc = g.dom().dim(), dd = g.cod().dim();
  const std::size_t din = da * dc;
  const std::size_t n = din * db * dd;
  CMatrix j(n, n);
  for (std::size_t b = 0; b < db; ++b)
    for (std::size_t d = 0; d < dd; ++d)
      for (std::size_t a = 0; a < da; ++a)
        for (std::size_t c = 0; c < dc; ++c) {
          const std::size_t row = (a + da * c) + din * (b + db * d);
          const std::size_t frow = a + da * b;
          const std::size_t grow = c + dc * d;
          for (std::size_t b2 = 0; b2 < db; ++b2)
            for (std::size_t d2 = 0; d2 < dd; ++d2)
              for (std::size_t c2 = 0; c2 < dc; ++c2) {
                const Complex s = g.choi()(grow, c2 + dc * d2);
                if (s == Complex(0.0)) continue;  // j is zero-initialized
                // contiguous over the domain index a2 of f
                const std::size_t col0 = da * c2 + din * (b2 + db * d2);
                kernels::cscale_copy(&f.choi()(frow, da * b2), s, &j(row, col0), da);
              }
        }
  return Process(f.dom().tensor(g.dom()), f.cod().tensor(g.cod()), std::move(j), Process::Trusted{});
}

Process permutation(const Object& a, std::span<const std::size_t> perm) {
  const auto map = permutation_index_map(a, perm);
  const std::size_t d = a.dim();
  CMatrix j(d * d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) j(x + d * map[x], y + d * map[y]) = 1.0;
  return Process(a, a.permuted(perm), std::move(j));
}

Process swap(const Object& a, const Object& b) {
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < b.num_factors(); ++i) perm.push_back(a.num_factors() + i);
  for (std::size_t i = 0; i < a.num_factors(); ++i) perm.push_back(i);
  return permutation(a.tensor(b), perm);
}

Process discard(const Object& a) { return Process(a, Object::unit(), CMatrix::identity(a.dim())); }

Process mixed(const Object& a) {
  return Process(Object::unit(), a, Complex(1.0 / static_cast<double>(a.dim())) * CMatrix::identity(a.dim()));
}

Process zero(const Object& dom, const Object& cod) {
  const std::size_t n = dom.dim() * cod.dim();
  return Process(dom, cod, CMatrix(n, n));
}

Process dagger(const Process& f) {
  const std::size_t da = f.dom().dim(), db = f.cod().dim();
  CMatrix j(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t jj = 0; jj < da; ++jj)
        for (std::size_t l = 0; l < db; ++l)
          j(k + db * i, l + db * jj) = std::conj(f.choi()(i + da * k, jj + da * l));
  return Process(f.cod(), f.dom(), std::move(j));
}

Process scaled(const Process& f, double r) {
  if (!(r >= 0.0)) throw DomainError("scalars are nonnegative");
  return Process(f.dom(), f.cod(), Complex(r) * f.choi());
}

Process state(const Object& a, CMatrix density) { return Process(Object::unit(), a, std::move(density)); }

Process point_state(const Object& a, std::size_t index) {
  if (index >= a.dim()) throw DomainError("basis index out of range");
  CMatrix rho(a.dim(), a.dim());
  rho(index, index) = 1.0;
  return state(a, std::move(rho));
}

Process scalar(double value) {
  CMatrix j(1, 1);
  j(0, 0) = value;
  return Process(Object::unit(), Object::unit(), std::move(j));
}

double scalar_value(const Process& s) {
  if (s.choi().rows() != 1) throw DomainError("not a scalar");
  return s.choi()(0, 0).real();
}

Process from_kraus(const Object& dom, const Object& cod, std::span<const CMatrix> kraus) {
  const std::size_t da = dom.dim(), db = cod.dim();
  CMatrix j(da * db, da * db);
  for (const auto& k : kraus) {
    if (k.rows() != db || k.cols() != da) throw DomainError("Kraus operator has the wrong shape");
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t kk = 0; kk < db; ++kk)
        for (std::size_t jj = 0; jj < da; ++jj)
          for (std::size_t l = 0; l < db; ++l) j(i + da * kk, jj + da * l) += k(kk, i) * std::conj(k(l, jj));
  }
  return Process(dom, cod, std::move(j));
}

Process unitary_channel(const Object& a, const CMatrix& u) {
  const CMatrix ks[] = {u};
  return from_kraus(a, a, ks);
}

Process from_classical(const classical::Process& f) {
  const std::size_t da = f.rows(), db = f.cols();
  CMatrix j(da * db, da * db);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b) j(a + da * b, a + da * b) = f(a, b);
  return Process(f.dom(), f.cod(), std::move(j));
}

bool is_causal(const Process& f, double tol) {
  const std::size_t da = f.dom().dim(), db = f.cod().dim();
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Complex t = 0.0;
      for (std::size_t k = 0; k < db; ++k) t += f.choi()(i + da * k, j + da * k);
      if (std::abs(t - Complex(i == j ? 1.0 : 0.0)) > tol) return false;
    }
  return true;
}

bool is_cocausal(const Process& f, double tol) {
  const Process out = apply(f, mixed(f.dom()));
  return max_abs_diff(out.density(), mixed(f.cod()).density()) <= tol;
}

bool is_cp(const Process& f, double tol) {
  if (!f.choi().is_hermitian(tol)) return false;
  const auto eig = hermitian_eigenvalues(f.choi());
  return eig.empty() || eig.front() >= -tol;
}

bool is_cptp(const Process& f, double tol) { return is_cp(f, tol) && is_causal(f, tol); }

double mass(const Process& s) { return s.choi().trace().real(); }

bool is_zero(const Process& f, double tol) { return f.choi().max_abs() <= tol; }

bool approx_equal(const Process& f, const Process& g, double tol) {
  return f.dom() == g.dom() && f.cod() == g.cod() && max_abs_diff(f.choi(), g.choi()) <= tol;
}

bool is_density(const CMatrix& rho, double tol) {
  if (!rho.is_hermitian(1e-10)) return false;
  const auto eig = hermitian_eigenvalues(rho);
  return eig.empty() || eig.front() >= -tol;
}

Process apply(const Process& f, const Process& rho) { return compose(rho, f); }

Process reorder(const Process& rho, std::span<const std::size_t> perm) {
  const auto map = permutation_index_map(rho.cod(), perm);
  const std::size_t d = rho.cod().dim();
  CMatrix out(d, d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) out(map[x], map[y]) = rho.density()(x, y);
  return state(rho.cod().permuted(perm), std::move(out));
}

Process marginal(const Process& rho, ElementSet keep) {
  const Object& a = rho.cod();
  const Object kept = a.select(keep);
  const Object traced = a.select(keep.complement(a.num_factors()));
  // Permute kept factors first, then the density is a (kept, traced) block matrix.
  const auto order = split_order(a.num_factors(), keep);
  const Process p = reorder(rho, order);
  const std::size_t dk = kept.dim(), dt = traced.dim();
  CMatrix out(dk, dk);
  for (std::size_t x = 0; x < dk; ++x)
    for (std::size_t y = 0; y < dk; ++y) {
      Complex acc = 0.0;
      for (std::size_t z = 0; z < dt; ++z) acc += p.density()(x + dk * z, y + dk * z);
      out(x, y) = acc;
    }
  return state(kept, std::move(out));
}

Process partial_trace(const Process& rho, std::size_t split, Side keep) {
  const std::size_t n = rho.cod().num_factors();
  if (split > n) throw DomainError("partial_trace: split beyond factor count");
  const ElementSet first = ElementSet::all(split);
  return marginal(rho, keep == Side::first ? first : first.complement(n));
}

double trace_distance(const Process& rho, const Process& sigma) {
  if (!(rho.cod() == sigma.cod()) || rho.dom().dim() != 1 || sigma.dom().dim() != 1)
    throw DomainError("trace_distance: states live on different objects");
  return 0.5 * trace_norm(rho.density() - sigma.density());
}

}  // namespace procphi::quantum
