#include <atomic>
#include <cstring>

#include "ptt/kernels.hpp"

namespace ptt::kernels {

namespace {

const Ops* pick_default() {
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_supported()) return &avx2_ops();
#endif
#if defined(__aarch64__)
  return &neon_ops();
#endif
  return &scalar_ops();
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

const Ops& active() {
  const Ops* ops = g_active.load(std::memory_order_acquire);
  if (ops == nullptr) {
    ops = pick_default();
    g_active.store(ops, std::memory_order_release);
  }
  return *ops;
}

bool force_backend(const char* name) {
  const Ops* ops = nullptr;
  if (std::strcmp(name, "scalar") == 0) ops = &scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
  else if (std::strcmp(name, "avx2") == 0 && avx2_supported()) ops = &avx2_ops();
#endif
#if defined(__aarch64__)
  else if (std::strcmp(name, "neon") == 0) ops = &neon_ops();
#endif
  if (ops == nullptr) return false;
  g_active.store(ops, std::memory_order_release);
  return true;
}

}  // namespace ptt::kernels
