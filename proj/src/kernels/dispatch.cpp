#include <atomic>
#include <cstdlib>
#include <string>

#include "cliquescope/error.hpp"
#include "cliquescope/kernels.hpp"

namespace cliquescope::kernels {

#ifdef CLIQUESCOPE_HAVE_AVX2
const KernelTable& avx2_kernels() noexcept;
#endif

const KernelTable* avx2_table() noexcept {
#ifdef CLIQUESCOPE_HAVE_AVX2
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &avx2_kernels() : nullptr;
#else
  return nullptr;
#endif
}

bool backend_supported(Backend b) noexcept {
  return b == Backend::scalar || avx2_table() != nullptr;
}

namespace {

// CLIQUESCOPE_SIMD=scalar forces the reference path.
const KernelTable* initial_table() noexcept {
  const char* env = std::getenv("CLIQUESCOPE_SIMD");
  if (env != nullptr && std::string(env) == "scalar") return &scalar_table();
  if (const KernelTable* t = avx2_table()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

void select_backend(Backend b) {
  if (!backend_supported(b)) throw ArgumentError(std::string("SIMD backend not supported: ") + std::string(backend_name(b)));
  current().store(b == Backend::scalar ? &scalar_table() : avx2_table());
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_relaxed); }

std::string_view backend_name(Backend b) noexcept { return b == Backend::scalar ? "scalar" : "avx2"; }

}  // namespace cliquescope::kernels
