#include <atomic>

#include "detail.hpp"
#include "pldual/errors.hpp"

namespace pldual::kernels {

#ifndef PLDUAL_HAVE_AVX2_TU
namespace detail {
const KernelTable* avx2_table_if_built() { return nullptr; }
}  // namespace detail
#endif

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* best() {
  if (const KernelTable* t = avx2_table()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{best()};
  return table;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable* avx2_table() {
  static const bool ok = cpu_has_avx2_fma();
  return ok ? detail::avx2_table_if_built() : nullptr;
}

bool supported(Isa isa) { return isa == Isa::scalar || avx2_table() != nullptr; }

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

void force(Isa isa) {
  if (isa == Isa::scalar) {
    current().store(&scalar_table());
    return;
  }
  const KernelTable* t = avx2_table();
  if (t == nullptr) fail(ErrorKind::usage, "AVX2 kernels are not available on this machine");
  current().store(t);
}

}  // namespace pldual::kernels
