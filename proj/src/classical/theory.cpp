#include "procphi/classical/theory.hpp"

#include "procphi/errors.hpp"
#include "procphi/kernels.hpp"

namespace procphi::classical {

static_assert(ProcessTheory<Theory>);

Process Theory::hadamard(const Process& a, const Process& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) throw DomainError("hadamard: shape mismatch");
  std::vector<double> out(a.table().size());
  kernels::hadamard(a.table().data(), b.table().data(), out.data(), out.size());
  return Process(a.dom(), a.cod(), std::move(out));
}

}  // namespace procphi::classical
