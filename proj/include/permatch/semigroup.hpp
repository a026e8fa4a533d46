#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permatch/error.hpp"
#include "permatch/types.hpp"

namespace permatch {

  //! A finite semigroup given by its Cayley table.
  //!
  //! The table is stored row-major: product(a, b) == table()[a * size() + b].
  //! Construction only checks the dimensions; call validate() (or
  //! make_semigroup()) before trusting the table to be associative.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    FiniteSemigroup(std::size_t              order,
                    std::vector<Element>     table,
                    std::vector<std::string> labels = {});

    std::size_t size() const noexcept {
      return _order;
    }

    Element product(Element a, Element b) const noexcept {
      return _table[a * _order + b];
    }

    Element product(Element a, Element b, Element c) const noexcept {
      return product(product(a, b), c);
    }

    std::span<Element const> row(Element a) const noexcept {
      return {_table.data() + a * _order, _order};
    }

    std::vector<Element> column(Element a) const;

    std::span<Element const> table() const noexcept {
      return _table;
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    //! The display label of a, or its index when unlabelled.
    std::string label(Element a) const;

    bool is_idempotent(Element a) const noexcept {
      return product(a, a) == a;
    }

   private:
    std::size_t              _order = 0;
    std::vector<Element>     _table;
    std::vector<std::string> _labels;
  };

  struct ValidationError {
    ErrorCode code;
    //! (a, b) for an entry out of range, (a, b, c) with (ab)c != a(bc) for a
    //! failed associativity check.
    Element a = 0, b = 0, c = 0;

    std::string message() const;
  };

  //! Range check followed by an associativity check.
  //!
  //! Associativity uses Light's test: with a generating set G picked greedily
  //! it suffices to check (ab)g = a(bg) for all a, b in S and g in G, since the
  //! elements g satisfying this for all a, b form a subsemigroup. The cost is
  //! O(n^2 |G|) instead of O(n^3).
  std::optional<ValidationError> validate(FiniteSemigroup const& S);

  //! Throws Error with the failing code when validate() reports a problem.
  void require_valid(FiniteSemigroup const& S);

  //! Builds and validates.
  FiniteSemigroup make_semigroup(std::size_t              order,
                                 std::vector<Element>     table,
                                 std::vector<std::string> labels = {});

  //! A small generating set chosen greedily, elements with larger right
  //! ideals first. Works for any magma: every element is a left-normed
  //! product of the returned generators.
  std::vector<Element> greedy_generators(FiniteSemigroup const& S);

  bool mutually_inverse(FiniteSemigroup const& S, Element a, Element b);

  //! V(a) = { b : aba = a and bab = b }, increasing.
  std::vector<Element> inverses_of(FiniteSemigroup const& S, Element a);

  //! V(a) for every a at once.
  std::vector<std::vector<Element>> all_inverses(FiniteSemigroup const& S);

  struct RegularityResult {
    bool                   regular = true;
    std::optional<Element> witness;  // an element with no inverse
  };

  RegularityResult regularity_check(FiniteSemigroup const& S);

  //! Throws Error(not_regular) naming the witness.
  void require_regular(FiniteSemigroup const& S);

  std::vector<Element> idempotents(FiniteSemigroup const& S);

  //! The subsemigroup generated by gens, increasing.
  std::vector<Element> generated_subsemigroup(FiniteSemigroup const&   S,
                                              std::span<Element const> gens);

  struct StructureReport {
    bool        regular                = false;
    bool        inverse                = false;
    bool        union_of_groups        = false;
    bool        orthodox               = false;
    bool        e_solid                = false;
    bool        rectangular_band       = false;
    bool        satisfies_x_eq_x3      = false;
    std::size_t idempotent_count       = 0;
    std::size_t d_class_count          = 0;
  };

  StructureReport structure_report(FiniteSemigroup const& S);

}  // namespace permatch
