#include "permatch/kernels.hpp"

#include <atomic>

namespace permatch::kernels {

  namespace scalar {

    std::size_t compose_mismatch(std::span<Element const> row,
                                 std::span<Element const> col) {
      std::size_t const n = row.size();
      for (std::size_t b = 0; b < n; ++b) {
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
      for (std::size_t b = 0; b < row.size(); ++b) {
        out[b] = col[row[b]] == a;
      }
    }

    void inverse_mask(std::span<Element const> table,
                      std::size_t              n,
                      Element                  a,
                      std::span<Element const> col,
                      std::span<std::uint8_t>  out) {
      auto const row = table.subspan(a * n, n);
      for (std::size_t b = 0; b < n; ++b) {
        bool const aba = col[row[b]] == a;
        bool const bab = table[col[b] * n + b] == b;
        out[b]         = aba && bab;
      }
    }

  }  // namespace scalar

#ifndef PERMATCH_HAVE_AVX2
  namespace avx2 {
    std::size_t compose_mismatch(std::span<Element const> row,
                                 std::span<Element const> col) {
      return scalar::compose_mismatch(row, col);
    }
    void sandwich_mask(std::span<Element const> row,
                       std::span<Element const> col,
                       Element                  a,
                       std::span<std::uint8_t>  out) {
      scalar::sandwich_mask(row, col, a, out);
    }
    void inverse_mask(std::span<Element const> table,
                      std::size_t              n,
                      Element                  a,
                      std::span<Element const> col,
                      std::span<std::uint8_t>  out) {
      scalar::inverse_mask(table, n, a, col, out);
    }
  }  // namespace avx2
#endif

  namespace {

    bool cpu_has_avx2() noexcept {
#if defined(PERMATCH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    }

    std::atomic<Isa>& current() noexcept {
      static std::atomic<Isa> isa{cpu_has_avx2() ? Isa::avx2 : Isa::scalar};
      return isa;
    }

  }  // namespace

  std::string_view isa_name(Isa isa) noexcept {
    return isa == Isa::avx2 ? "avx2" : "scalar";
  }

  bool isa_available(Isa isa) noexcept {
    return isa == Isa::scalar || cpu_has_avx2();
  }

  Isa active_isa() noexcept {
    return current().load(std::memory_order_relaxed);
  }

  bool force_isa(Isa isa) noexcept {
    if (!isa_available(isa)) {
      return false;
    }
    current().store(isa, std::memory_order_relaxed);
    return true;
  }

  std::size_t compose_mismatch(std::span<Element const> row,
                               std::span<Element const> col) {
    return active_isa() == Isa::avx2 ? avx2::compose_mismatch(row, col)
                                     : scalar::compose_mismatch(row, col);
  }

  void sandwich_mask(std::span<Element const> row,
                     std::span<Element const> col,
                     Element                  a,
                     std::span<std::uint8_t>  out) {
    if (active_isa() == Isa::avx2) {
      avx2::sandwich_mask(row, col, a, out);
    } else {
      scalar::sandwich_mask(row, col, a, out);
    }
  }

  void inverse_mask(std::span<Element const> table,
                    std::size_t              n,
                    Element                  a,
                    std::span<Element const> col,
                    std::span<std::uint8_t>  out) {
    if (active_isa() == Isa::avx2) {
      avx2::inverse_mask(table, n, a, col, out);
    } else {
      scalar::inverse_mask(table, n, a, col, out);
    }
  }

}  // namespace permatch::kernels
