#include "zetacone/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define ZETACONE_HAVE_X86 1
#include <immintrin.h>
#else
#define ZETACONE_HAVE_X86 0
#endif

namespace zetacone::kernels {

#if ZETACONE_HAVE_X86
namespace {

#define ZC_AVX2 __attribute__((target("avx2")))

ZC_AVX2 void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t k = 0;
  for (; k + 4 <= words; k += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + k);
    const auto* s = reinterpret_cast<const __m256i*>(src + k);
    _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; k < words; ++k) dst[k] ^= src[k];
}

ZC_AVX2 std::int32_t hsum_epi32(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi32(lo, hi);
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(s);
}

ZC_AVX2 void eval_rows_i32_avx2(const std::int32_t* rows, std::size_t num_rows,
                                std::size_t stride, const std::int32_t* x, std::int32_t* out) {
  for (std::size_t r = 0; r < num_rows; ++r) {
    const std::int32_t* row = rows + r * stride;
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t k = 0; k < stride; k += 8) {
      const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + k));
      acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(a, b));
    }
    out[r] = hsum_epi32(acc);
  }
}

ZC_AVX2 bool add_u16_avx2(std::uint16_t* dst, const std::uint16_t* a, const std::uint16_t* b,
                          std::size_t n) {
  std::size_t k = 0;
  // Saturating and wrapping sums differ exactly in the lanes that overflowed.
  __m256i bad = _mm256_setzero_si256();
  for (; k + 16 <= n; k += 16) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    const __m256i wrap = _mm256_add_epi16(va, vb);
    const __m256i sat = _mm256_adds_epu16(va, vb);
    bad = _mm256_or_si256(bad, _mm256_xor_si256(wrap, sat));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), wrap);
  }
  bool ok = _mm256_testz_si256(bad, bad) != 0;
  for (; k < n; ++k) {
    const std::uint32_t s = std::uint32_t{a[k]} + b[k];
    ok &= s <= 0xFFFFu;
    dst[k] = static_cast<std::uint16_t>(s);
  }
  return ok;
}

ZC_AVX2 bool dominated_u16_avx2(const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + 16 <= n; k += 16) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    const __m256i eq = _mm256_cmpeq_epi16(_mm256_max_epu16(va, vb), vb);
    if (_mm256_movemask_epi8(eq) != -1) return false;
  }
  for (; k < n; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

#undef ZC_AVX2

}  // namespace

std::optional<KernelTable> avx2() {
  if (!__builtin_cpu_supports("avx2")) return std::nullopt;
  return KernelTable{"avx2", xor_words_avx2, eval_rows_i32_avx2, add_u16_avx2,
                     dominated_u16_avx2};
}

#else

std::optional<KernelTable> avx2() { return std::nullopt; }

#endif

}  // namespace zetacone::kernels
