#pragma once

// Small hand-built semigroups shared by the unit tests.

#include <cstdint>
#include <random>
#include <vector>

#include "permatch/semigroup.hpp"

namespace permatch::test {

  //! Rectangular band on rows x cols with (i,j)(k,l) = (i,l); element i*cols+j.
  inline FiniteSemigroup rectangular_band(std::size_t rows, std::size_t cols) {
    std::size_t const    n = rows * cols;
    std::vector<Element> t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x * n + y] = static_cast<Element>((x / cols) * cols + y % cols);
      }
    }
    return FiniteSemigroup(n, std::move(t));
  }

  //! {0, x} with every product 0.
  inline FiniteSemigroup null_semigroup() {
    return FiniteSemigroup(2, {0, 0, 0, 0});
  }

  //! Chain semilattice 0 < 1 < ... < n-1 under min.
  inline FiniteSemigroup chain(std::size_t n) {
    std::vector<Element> t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x * n + y] = static_cast<Element>(std::min(x, y));
      }
    }
    return FiniteSemigroup(n, std::move(t));
  }

  inline std::vector<Element> random_table(std::size_t n, std::mt19937_64& rng) {
    std::vector<Element> t(n * n);
    for (auto& e : t) {
      e = static_cast<Element>(rng() % n);
    }
    return t;
  }

}  // namespace permatch::test
