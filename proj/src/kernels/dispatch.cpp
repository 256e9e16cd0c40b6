#include <atomic>
#include <cstdlib>
#include <string>

#include "procphi/errors.hpp"
#include "procphi/kernels.hpp"

namespace procphi::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("PROCPHI_KERNELS")) {
    const std::string v(env);
    if (v == "scalar") return Isa::scalar;
    if (v == "avx2" && supported(Isa::avx2)) return Isa::avx2;
    if (v == "neon" && supported(Isa::neon)) return Isa::neon;
  }
  if (supported(Isa::avx2)) return Isa::avx2;
  if (supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detect()};
  return slot;
}

}  // namespace

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return detail::avx2_table() != nullptr && cpu_has_avx2();
    case Isa::neon: return detail::neon_table() != nullptr;
  }
  return false;
}

const Table& table(Isa isa) {
  switch (isa) {
    case Isa::avx2:
      if (supported(isa)) return *detail::avx2_table();
      break;
    case Isa::neon:
      if (supported(isa)) return *detail::neon_table();
      break;
    case Isa::scalar:
      break;
  }
  return detail::scalar_table();
}

Isa active() { return active_slot().load(std::memory_order_relaxed); }

void set_active(Isa isa) {
  if (!supported(isa)) throw UnsupportedError("kernel ISA not supported: " + std::string(name(isa)));
  active_slot().store(isa, std::memory_order_relaxed);
}

}  // namespace procphi::kernels
