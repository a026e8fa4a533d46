#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permatch/permutation.hpp"
#include "permatch/semigroup.hpp"

namespace permatch {

  //! A 0-rectangular band: an m x n grid of non-zero elements (i, j) plus a
  //! zero, with (i, j)(k, l) = (i, l) if E[k][j] and 0 otherwise.
  //!
  //! Elements of to_semigroup() are numbered 0 for the zero and
  //! 1 + i * n + j for (i, j).
  class ZeroRectBand {
   public:
    ZeroRectBand() = default;
    ZeroRectBand(std::size_t rows, std::size_t cols);
    ZeroRectBand(std::size_t rows, std::size_t cols, std::vector<bool> pattern);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    //! Number of elements including the zero.
    std::size_t order() const noexcept {
      return _rows * _cols + 1;
    }

    bool idempotent(std::size_t i, std::size_t j) const {
      return _pattern[i * _cols + j];
    }
    void set_idempotent(std::size_t i, std::size_t j, bool value) {
      _pattern[i * _cols + j] = value;
    }
    std::vector<bool> const& pattern() const noexcept {
      return _pattern;
    }

    //! Every row and every column of E has an idempotent.
    bool regular_pattern() const;
    void require_regular_pattern() const;

    //! n / m when m divides n.
    std::optional<std::size_t> aspect_ratio() const;

    Element element(std::size_t i, std::size_t j) const noexcept {
      return static_cast<Element>(1 + i * _cols + j);
    }
    std::size_t row_of(Element x) const noexcept {
      return (x - 1) / _cols;
    }
    std::size_t col_of(Element x) const noexcept {
      return (x - 1) % _cols;
    }

    bool operator==(ZeroRectBand const&) const = default;

   private:
    std::size_t       _rows = 0;
    std::size_t       _cols = 0;
    std::vector<bool> _pattern;
  };

  //! The 7-element orthodox band with no permutation matching: 2 x 3 with
  //! idempotents at (1,2), (1,3), (2,1) in 1-based coordinates.
  ZeroRectBand builtin_B7();

  //! Labels "0" and "(i,j)" with 1-based coordinates.
  std::vector<std::string> band_labels(ZeroRectBand const& B);

  //! Cayley table of the band; throws NotRegularPattern.
  FiniteSemigroup to_semigroup(ZeroRectBand const& B);

  //! (i, j) and (k, l) are mutual inverses iff E[k][j] and E[i][l].
  bool band_mutual_inverses(ZeroRectBand const&                 B,
                            std::pair<std::size_t, std::size_t> x,
                            std::pair<std::size_t, std::size_t> y);

  struct ExpansionResult {
    bool holds = true;
    //! When the check fails: a row set T adjacent to fewer than a|T| columns,
    //! and those columns.
    std::vector<std::size_t> violating_rows;
    std::vector<std::size_t> adjacent_columns;
  };

  //! Checks that every set T of rows meets at least a|T| columns and every
  //! set of t columns meets at least t/a rows, through E. Decided by a single
  //! max-flow (rows have capacity a, columns capacity 1): both families of
  //! inequalities hold iff the flow saturates all n columns. A failing row set
  //! is read off the minimum cut. Throws NotDivisible when m does not divide n.
  ExpansionResult row_expansion_check(ZeroRectBand const& B);

  //! a injections from rows to columns, with disjoint ranges covering all
  //! columns, each sending row i to an idempotent position of row i.
  struct HaremFamily {
    //! maps[t][i] = column of pi_t(i)
    std::vector<std::vector<std::size_t>> maps;

    std::size_t count() const noexcept {
      return maps.size();
    }
  };

  //! Degree-constrained subgraph (rows degree a, columns degree 1) found by
  //! augmenting paths over a copies of each row, copy-major, preferring free
  //! columns and then lower indices. Each row's columns are then given to
  //! slots 0..a-1 in increasing column order. Throws NotDivisible.
  std::optional<HaremFamily> harem_functions(ZeroRectBand const& B);

  struct HaremInvolution {
    InvolutionMatching   involution;  // on to_semigroup(B)
    HaremFamily          harem;
    //! column j -> t*m + r where pi_t(r) = j
    std::vector<std::size_t> column_label;
  };

  //! The involution (i, j) -> (r, pi_t(i)) where pi_t(r) = j, with 0 fixed.
  //! Throws NotDivisible; empty when no harem family exists.
  std::optional<HaremInvolution> harem_involution(ZeroRectBand const& B);

  struct SimilarityResult {
    bool similar         = false;
    bool matching_exists = false;
    //! (rows, columns) of each maximal rectangle of idempotents
    std::vector<std::pair<std::size_t, std::size_t>> blocks;

    bool agree() const noexcept {
      return similar == matching_exists;
    }
  };

  //! For orthodox bands: whether all maximal rectangular subbands have the
  //! same columns-to-rows ratio, alongside the direct matching verdict.
  //! Throws NotOrthodox.
  SimilarityResult similarity_check(ZeroRectBand const& B);

  //! Each cell of E set independently with probability density; resampled
  //! until every row and column is non-empty. Deterministic per seed.
  ZeroRectBand random_band(std::size_t   rows,
                           std::size_t   cols,
                           double        density,
                           std::uint64_t seed);

  //! Every regular pattern of the given shape, in increasing bit order.
  std::vector<ZeroRectBand> all_regular_bands(std::size_t rows,
                                              std::size_t cols);

}  // namespace permatch
