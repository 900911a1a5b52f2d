#include "tdom/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define TDOM_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

#include <bit>

namespace tdom::kernels {

#ifdef TDOM_HAVE_AVX2_KERNELS
namespace {

#define TDOM_AVX2 __attribute__((target("avx2,popcnt")))

// Per-byte popcount through a nibble lookup (vpshufb), summed with vpsadbw.
TDOM_AVX2 inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

TDOM_AVX2 inline std::size_t horizontal_sum(__m256i acc) {
  return static_cast<std::size_t>(_mm256_extract_epi64(acc, 0)) +
         static_cast<std::size_t>(_mm256_extract_epi64(acc, 1)) +
         static_cast<std::size_t>(_mm256_extract_epi64(acc, 2)) +
         static_cast<std::size_t>(_mm256_extract_epi64(acc, 3));
}

TDOM_AVX2 inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

TDOM_AVX2 inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Short vectors (the common case below ~256 vertices) go straight to popcnt.
constexpr std::size_t kMinVectorWords = 8;

TDOM_AVX2 std::size_t popcount_avx2(std::span<const Word> a) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  std::size_t c = 0;
  if (n >= kMinVectorWords) {
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4)
      acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(load(a.data() + i)), _mm256_setzero_si256()));
    c = horizontal_sum(acc);
  }
  for (; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return c;
}

TDOM_AVX2 std::size_t and_popcount_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  std::size_t c = 0;
  if (n >= kMinVectorWords) {
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) {
      const __m256i v = _mm256_and_si256(load(a.data() + i), load(b.data() + i));
      acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
    }
    c = horizontal_sum(acc);
  }
  for (; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return c;
}

TDOM_AVX2 std::size_t andnot_popcount_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  std::size_t c = 0;
  if (n >= kMinVectorWords) {
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= n; i += 4) {
      // andnot(x, y) computes ~x & y
      const __m256i v = _mm256_andnot_si256(load(b.data() + i), load(a.data() + i));
      acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
    }
    c = horizontal_sum(acc);
  }
  for (; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & ~b[i]));
  return c;
}

TDOM_AVX2 bool intersects_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_and_si256(load(a.data() + i), load(b.data() + i));
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

TDOM_AVX2 bool is_subset_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // testc(b, a) is 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b.data() + i), load(a.data() + i))) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

TDOM_AVX2 void or_into_avx2(std::span<Word> dst, std::span<const Word> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), load(src.data() + i)));
  for (; i < n; ++i) dst[i] |= src[i];
}

TDOM_AVX2 void and_into_avx2(std::span<Word> dst, std::span<const Word> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst.data() + i, _mm256_and_si256(load(dst.data() + i), load(src.data() + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

TDOM_AVX2 void andnot_into_avx2(std::span<Word> dst, std::span<const Word> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    store(dst.data() + i, _mm256_andnot_si256(load(src.data() + i), load(dst.data() + i)));
  for (; i < n; ++i) dst[i] &= ~src[i];
}

#undef TDOM_AVX2

}  // namespace

const KernelTable* avx2() {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  static const KernelTable table{
      "avx2",          popcount_avx2,  and_popcount_avx2, andnot_popcount_avx2,
      intersects_avx2, is_subset_avx2, or_into_avx2,      and_into_avx2,
      andnot_into_avx2,
  };
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2() { return nullptr; }

#endif

}  // namespace tdom::kernels
