#include <cstdlib>
#include <string_view>

#include "zetacone/kernels.hpp"

namespace zetacone::kernels {

const KernelTable& active() {
  static const KernelTable table = [] {
    const char* env = std::getenv("ZETACONE_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar();
    if (auto simd = avx2()) return *simd;
    return scalar();
  }();
  return table;
}

}  // namespace zetacone::kernels
