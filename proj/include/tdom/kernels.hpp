#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace tdom::kernels {

using Word = std::uint64_t;

// Word-array primitives behind every bitset operation in the library.
// All spans passed to one call must have equal length.
struct KernelTable {
  std::string_view name;
  std::size_t (*popcount)(std::span<const Word> a);
  std::size_t (*and_popcount)(std::span<const Word> a, std::span<const Word> b);
  std::size_t (*andnot_popcount)(std::span<const Word> a, std::span<const Word> b);
  bool (*intersects)(std::span<const Word> a, std::span<const Word> b);
  bool (*is_subset)(std::span<const Word> a, std::span<const Word> b);
  void (*or_into)(std::span<Word> dst, std::span<const Word> src);
  void (*and_into)(std::span<Word> dst, std::span<const Word> src);
  void (*andnot_into)(std::span<Word> dst, std::span<const Word> src);
};

const KernelTable& scalar();

// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2();

// Selected once on first use: AVX2 when available, unless the environment
// variable TDOM_SIMD=scalar forces the reference kernels.
const KernelTable& active();

}  // namespace tdom::kernels
