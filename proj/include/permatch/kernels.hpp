#pragma once

// Inner loops over Cayley table rows and columns.
//
// Each kernel has a portable scalar reference and, on x86-64, an AVX2 variant
// built from 32-bit gathers. The variant is chosen once at first use from the
// running CPU; force_isa() overrides the choice (used by the equivalence
// tests). All variants return bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "permatch/types.hpp"

namespace permatch::kernels {

  enum class Isa { scalar, avx2 };

  std::string_view isa_name(Isa isa) noexcept;

  //! True if the variant was compiled in and the CPU supports it.
  bool isa_available(Isa isa) noexcept;

  //! The variant the dispatching entry points currently use.
  Isa active_isa() noexcept;

  //! Select a variant; returns false (and changes nothing) if unavailable.
  bool force_isa(Isa isa) noexcept;

  // Associativity of a row against a column.
  //
  // With row = (a*0, ..., a*(n-1)) and col = (0*g, ..., (n-1)*g) both over the
  // same table, returns the first b with (a*b)*g != a*(b*g), i.e. with
  // col[row[b]] != row[col[b]], or row.size() if there is none.
  std::size_t compose_mismatch(std::span<Element const> row,
                               std::span<Element const> col);

  //! out[b] = 1 iff a*b*a == a, given row = row a and col = column a.
  void sandwich_mask(std::span<Element const> row,
                     std::span<Element const> col,
                     Element                  a,
                     std::span<std::uint8_t>  out);

  //! out[b] = 1 iff a and b are mutual inverses (aba = a and bab = b).
  //! table is the full n x n table, col is column a.
  void inverse_mask(std::span<Element const> table,
                    std::size_t              n,
                    Element                  a,
                    std::span<Element const> col,
                    std::span<std::uint8_t>  out);

  namespace scalar {
    std::size_t compose_mismatch(std::span<Element const> row,
                                 std::span<Element const> col);
    void        sandwich_mask(std::span<Element const> row,
                              std::span<Element const> col,
                              Element                  a,
                              std::span<std::uint8_t>  out);
    void        inverse_mask(std::span<Element const> table,
                             std::size_t              n,
                             Element                  a,
                             std::span<Element const> col,
                             std::span<std::uint8_t>  out);
  }  // namespace scalar

  namespace avx2 {
    std::size_t compose_mismatch(std::span<Element const> row,
                                 std::span<Element const> col);
    void        sandwich_mask(std::span<Element const> row,
                              std::span<Element const> col,
                              Element                  a,
                              std::span<std::uint8_t>  out);
    void        inverse_mask(std::span<Element const> table,
                             std::size_t              n,
                             Element                  a,
                             std::span<Element const> col,
                             std::span<std::uint8_t>  out);
  }  // namespace avx2

}  // namespace permatch::kernels
