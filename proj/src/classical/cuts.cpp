#include "procphi/classical/cuts.hpp"

#include <cmath>

#include "procphi/errors.hpp"

namespace procphi::classical {

std::vector<Process> element_channels(const Process& evolution) {
  const Object& s = evolution.cod();
  const std::size_t n = s.num_factors();
  std::vector<std::vector<double>> tables(n);
  for (std::size_t i = 0; i < n; ++i) tables[i].assign(evolution.rows() * s.factor(i).dim, 0.0);
  for (std::size_t x = 0; x < evolution.rows(); ++x) {
    for (std::size_t y = 0; y < evolution.cols(); ++y) {
      const double v = evolution(x, y);
      std::size_t rest = y;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t di = s.factor(i).dim;
        auto& cell = tables[i][x * di + rest % di];
        cell = cell + v;
        rest /= di;
      }
    }
  }
  std::vector<Process> out;
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(evolution.dom(), s.select(ElementSet::single(i)), std::move(tables[i]));
  return out;
}

Process recombine(const std::vector<Process>& channels) {
  if (channels.empty()) throw DomainError("recombine needs at least one channel");
  const Object& dom = channels.front().dom();
  std::vector<Factor> factors;
  for (const auto& c : channels) {
    if (!(c.dom() == dom)) throw DomainError("recombine: channels disagree on their input");
    for (const auto& f : c.cod().factors()) factors.push_back(f);
  }
  const Object cod(std::move(factors), dom.product_metric());
  std::vector<double> t(dom.dim() * cod.dim());
  for (std::size_t x = 0; x < dom.dim(); ++x) {
    for (std::size_t y = 0; y < cod.dim(); ++y) {
      double p = 1.0;
      std::size_t rest = y;
      for (const auto& c : channels) {
        const std::size_t d = c.cols();
        p *= c(x, rest % d);
        rest /= d;
      }
      t[x * cod.dim() + y] = p;
    }
  }
  return Process(dom, cod, std::move(t));
}

bool is_conditionally_independent(const Process& evolution, double tol) {
  if (evolution.cod().num_factors() <= 1) return true;
  const Process rebuilt = recombine(element_channels(evolution));
  for (std::size_t k = 0; k < rebuilt.table().size(); ++k)
    if (std::abs(rebuilt.table()[k] - evolution.table()[k]) > tol) return false;
  return true;
}

Process directional_cut(const Process& evolution, ElementSet part, double tol) {
  if (!is_conditionally_independent(evolution, tol))
    throw ValidationError("directional cut needs conditionally independent dynamics");
  const Object& s = evolution.dom();
  const std::size_t n = s.num_factors();
  if (part == ElementSet::all(n)) return evolution;
  auto channels = element_channels(evolution);
  const auto noised_dims = part.indices();
  std::size_t noise_size = 1;
  for (auto i : noised_dims) noise_size *= s.factor(i).dim;
  const double w = 1.0 / static_cast<double>(noise_size);

  for (std::size_t i = 0; i < n; ++i) {
    if (part.contains(i)) continue;
    // T_i ∘ (⫞_C ∘ ⫠_C ⊗ id_C'): average T_i over the inputs of `part`.
    const Process& ti = channels[i];
    std::vector<double> t(ti.table().size(), 0.0);
    for (std::size_t x = 0; x < s.dim(); ++x) {
      auto digits = s.digits(x);
      for (std::size_t k = 0; k < noise_size; ++k) {
        std::size_t rest = k;
        for (auto j : noised_dims) {
          digits[j] = rest % s.factor(j).dim;
          rest /= s.factor(j).dim;
        }
        const std::size_t src = s.index(digits);
        for (std::size_t b = 0; b < ti.cols(); ++b) {
          auto& cell = t[x * ti.cols() + b];
          cell = cell + w * ti(src, b);
        }
      }
    }
    channels[i] = Process(ti.dom(), ti.cod(), std::move(t));
  }
  Process out = recombine(channels);
  return Process(evolution.dom(), evolution.cod(), std::vector<double>(out.table().begin(), out.table().end()));
}

}  // namespace procphi::classical
