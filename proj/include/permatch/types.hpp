#pragma once

#include <cstdint>
#include <limits>

namespace permatch {

  //! Elements of a finite semigroup are 0-based indices into its Cayley table.
  using Element = std::uint32_t;

  inline constexpr Element kNoElement = std::numeric_limits<Element>::max();

}  // namespace permatch
