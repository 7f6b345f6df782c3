#include "zetacone/kernels.hpp"

namespace zetacone::kernels {
namespace {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t k = 0; k < words; ++k) dst[k] ^= src[k];
}

void eval_rows_i32_scalar(const std::int32_t* rows, std::size_t num_rows, std::size_t stride,
                          const std::int32_t* x, std::int32_t* out) {
  for (std::size_t r = 0; r < num_rows; ++r) {
    const std::int32_t* row = rows + r * stride;
    std::int32_t acc = 0;
    for (std::size_t k = 0; k < stride; ++k) acc += row[k] * x[k];
    out[r] = acc;
  }
}

bool add_u16_scalar(std::uint16_t* dst, const std::uint16_t* a, const std::uint16_t* b,
                    std::size_t n) {
  bool ok = true;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint32_t s = std::uint32_t{a[k]} + b[k];
    ok &= s <= 0xFFFFu;
    dst[k] = static_cast<std::uint16_t>(s);
  }
  return ok;
}

bool dominated_u16_scalar(const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", xor_words_scalar, eval_rows_i32_scalar,
                                 add_u16_scalar, dominated_u16_scalar};
  return table;
}

}  // namespace zetacone::kernels
