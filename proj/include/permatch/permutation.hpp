#pragma once

#include <cstddef>
#include <vector>

#include "permatch/types.hpp"

namespace permatch {

  //! A bijection p of S with p[a] ∈ V(a) for every a.
  struct PermutationMatching {
    std::vector<Element> image;

    std::size_t size() const noexcept {
      return image.size();
    }
    Element operator[](Element a) const {
      return image[a];
    }
    bool operator==(PermutationMatching const&) const = default;
  };

  //! A permutation matching that is its own inverse.
  struct InvolutionMatching {
    std::vector<Element> image;

    std::size_t size() const noexcept {
      return image.size();
    }
    Element operator[](Element a) const {
      return image[a];
    }
    PermutationMatching as_permutation() const {
      return {image};
    }
    bool operator==(InvolutionMatching const&) const = default;
  };

  bool is_permutation(std::vector<Element> const& p);
  bool is_involution(std::vector<Element> const& p);

  //! Cycles of a permutation, each starting at its least element, ordered by
  //! that element.
  std::vector<std::vector<Element>> cycles(std::vector<Element> const& p);

}  // namespace permatch
