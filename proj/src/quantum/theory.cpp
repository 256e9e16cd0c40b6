#include "procphi/quantum/theory.hpp"

namespace procphi::quantum {

static_assert(ProcessTheory<Theory>);

}  // namespace procphi::quantum
