#include <cstdlib>
#include <string_view>

#include "tdom/kernels.hpp"

namespace tdom::kernels {

const KernelTable& active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* force = std::getenv("TDOM_SIMD");
    if (force != nullptr && std::string_view(force) == "scalar") return scalar();
    if (const KernelTable* t = avx2()) return *t;
    return scalar();
  }();
  return chosen;
}

}  // namespace tdom::kernels
