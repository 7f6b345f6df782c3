#pragma once

// Data-parallel inner loops used by the exact algorithms.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2 variant is compiled with per-function target attributes and selected at
// runtime when the CPU supports it. Both variants must produce bit-identical
// results; tests/test_kernels.cpp checks this on random inputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace zetacone::kernels {

struct KernelTable {
  std::string_view name;

  // dst[k] ^= src[k] for k < words.
  void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

  // out[r] = sum_k rows[r * stride + k] * x[k] for r < num_rows. `stride` is a
  // multiple of 8 and both rows and x are zero-padded up to it. Products and
  // partial sums must fit in int32 (callers bound magnitudes beforehand).
  void (*eval_rows_i32)(const std::int32_t* rows, std::size_t num_rows, std::size_t stride,
                        const std::int32_t* x, std::int32_t* out);

  // dst[k] = a[k] + b[k]. Returns false if any lane overflowed 16 bits, in
  // which case dst is unspecified.
  bool (*add_u16)(std::uint16_t* dst, const std::uint16_t* a, const std::uint16_t* b,
                  std::size_t n);

  // True iff a[k] <= b[k] for all k < n.
  bool (*dominated_u16)(const std::uint16_t* a, const std::uint16_t* b, std::size_t n);
};

const KernelTable& scalar();

// nullopt when not built for x86-64 or the running CPU lacks AVX2.
std::optional<KernelTable> avx2();

// The table in use. Chosen once: AVX2 when available, overridable with
// ZETACONE_KERNELS=scalar.
const KernelTable& active();

}  // namespace zetacone::kernels
