// Compiled with -mavx2; only reached when the CPU reports AVX2 support.

#include <immintrin.h>

#include "permatch/kernels.hpp"

namespace permatch::kernels::avx2 {

  namespace {

    constexpr std::size_t kLanes = 8;

    inline __m256i load(Element const* p) {
      return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(p));
    }

    inline __m256i gather(Element const* base, __m256i idx) {
      return _mm256_i32gather_epi32(reinterpret_cast<int const*>(base), idx, 4);
    }

    // Packs eight 32-bit lane masks (all ones / all zeros) into bytes 0/1.
    inline void store_mask_bytes(__m256i mask, std::uint8_t* out) {
      int const bits = _mm256_movemask_ps(_mm256_castsi256_ps(mask));
      for (std::size_t k = 0; k < kLanes; ++k) {
        out[k] = static_cast<std::uint8_t>((bits >> k) & 1);
      }
    }

  }  // namespace

  std::size_t compose_mismatch(std::span<Element const> row,
                               std::span<Element const> col) {
    std::size_t const n = row.size();
    std::size_t       b = 0;
    for (; b + kLanes <= n; b += kLanes) {
      __m256i const r   = load(row.data() + b);
      __m256i const c   = load(col.data() + b);
      __m256i const lhs = gather(col.data(), r);
      __m256i const rhs = gather(row.data(), c);
      __m256i const eq  = _mm256_cmpeq_epi32(lhs, rhs);
      int const     bits = _mm256_movemask_ps(_mm256_castsi256_ps(eq));
      if (bits != 0xFF) {
        return b + static_cast<std::size_t>(__builtin_ctz(~bits & 0xFF));
      }
    }
    for (; b < n; ++b) {
      if (col[row[b]] != row[col[b]]) {
        return b;
      }
    }
    return n;
  }

  void sandwich_mask(std::span<Element const> row,
                     std::span<Element const> col,
                     Element                  a,
                     std::span<std::uint8_t>  out) {
    std::size_t const n  = row.size();
    __m256i const     av = _mm256_set1_epi32(static_cast<int>(a));
    std::size_t       b  = 0;
    for (; b + kLanes <= n; b += kLanes) {
      __m256i const aba = gather(col.data(), load(row.data() + b));
      store_mask_bytes(_mm256_cmpeq_epi32(aba, av), out.data() + b);
    }
    for (; b < n; ++b) {
      out[b] = col[row[b]] == a;
    }
  }

  void inverse_mask(std::span<Element const> table,
                    std::size_t              n,
                    Element                  a,
                    std::span<Element const> col,
                    std::span<std::uint8_t>  out) {
    Element const* row  = table.data() + a * n;
    __m256i const  av   = _mm256_set1_epi32(static_cast<int>(a));
    __m256i const  nv   = _mm256_set1_epi32(static_cast<int>(n));
    __m256i const  step = _mm256_set1_epi32(static_cast<int>(kLanes));
    __m256i        bv   = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    std::size_t    b    = 0;
    for (; b + kLanes <= n; b += kLanes) {
      __m256i const aba = gather(col.data(), load(row + b));
      // (b*a)*b lives at table[(b*a) * n + b]
      __m256i const ba  = load(col.data() + b);
      __m256i const idx = _mm256_add_epi32(_mm256_mullo_epi32(ba, nv), bv);
      __m256i const bab = gather(table.data(), idx);
      __m256i const ok  = _mm256_and_si256(_mm256_cmpeq_epi32(aba, av),
                                          _mm256_cmpeq_epi32(bab, bv));
      store_mask_bytes(ok, out.data() + b);
      bv = _mm256_add_epi32(bv, step);
    }
    for (; b < n; ++b) {
      bool const aba = col[row[b]] == a;
      bool const bab = table[col[b] * n + b] == b;
      out[b]         = aba && bab;
    }
  }

}  // namespace permatch::kernels::avx2
