#pragma once

// Slow, obviously-correct reference procedures. They share no code with the
// matching engine beyond the semigroup table itself and are meant for small
// inputs (a dozen or so elements, bands up to 12 rows or columns).

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "permatch/band.hpp"
#include "permatch/semigroup.hpp"

namespace permatch::oracle {

  //! V(a) straight from the definition.
  std::vector<Element> inverses(FiniteSemigroup const& S, Element a);

  //! First (a, b, c) in lexicographic order with (ab)c != a(bc).
  std::optional<std::array<Element, 3>> associativity_failure(FiniteSemigroup const& S);

  bool is_regular(FiniteSemigroup const& S);

  //! Green's relations from principal one-sided ideals S^1 a and a S^1.
  bool same_r(FiniteSemigroup const& S, Element a, Element b);
  bool same_l(FiniteSemigroup const& S, Element a, Element b);
  //! D = R o L, found by searching for an intermediate element.
  bool same_d(FiniteSemigroup const& S, Element a, Element b);

  //! Backtracking search for a bijection p with p(a) ∈ V(a).
  std::optional<std::vector<Element>> permutation_matching(FiniteSemigroup const& S);

  //! Backtracking search for such a bijection with p o p = id.
  std::optional<std::vector<Element>> involution_matching(FiniteSemigroup const& S);

  //! Checks every non-empty row set T and column set U of B by enumeration:
  //! |N(T)| >= a|T| and a|N(U)| >= |U|, where a = n / m. Requires m | n and
  //! max(m, n) <= 20.
  struct ExpansionVerdict {
    bool rows_ok    = true;
    bool columns_ok = true;
  };
  ExpansionVerdict row_expansion(ZeroRectBand const& B);

}  // namespace permatch::oracle
