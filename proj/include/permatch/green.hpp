#pragma once

#include <cstddef>
#include <vector>

#include "permatch/band.hpp"
#include "permatch/semigroup.hpp"

namespace permatch {

  //! One D-class laid out as an egg-box: rows are its R-classes, columns its
  //! L-classes, and each cell is an H-class.
  struct DClass {
    std::vector<Element>     elements;   // increasing
    std::vector<std::size_t> r_classes;  // global R-class ids, row order
    std::vector<std::size_t> l_classes;  // global L-class ids, column order
    //! cells[i * cols() + j] = R_i ∩ L_j, increasing.
    std::vector<std::vector<Element>> cells;
    //! group_h[i * cols() + j]: the cell contains an idempotent.
    std::vector<bool> group_h;

    std::size_t rows() const noexcept {
      return r_classes.size();
    }
    std::size_t cols() const noexcept {
      return l_classes.size();
    }
    std::vector<Element> const& cell(std::size_t i, std::size_t j) const {
      return cells[i * cols() + j];
    }
    bool is_group(std::size_t i, std::size_t j) const {
      return group_h[i * cols() + j];
    }
    bool regular() const;
  };

  //! Green's relations of a finite semigroup.
  //!
  //! R-, L- and D-classes are numbered in order of their least element, and
  //! the rows/columns of each D-class follow the same rule, so the layout is
  //! a deterministic function of the table.
  struct EggBox {
    std::vector<DClass> d_classes;

    std::vector<std::size_t> d_of;  // element -> D-class
    std::vector<std::size_t> r_of;  // element -> global R-class
    std::vector<std::size_t> l_of;  // element -> global L-class
    std::vector<std::size_t> row_of;  // element -> row within its D-class
    std::vector<std::size_t> col_of;  // element -> column within its D-class

    std::size_t r_class_count = 0;
    std::size_t l_class_count = 0;

    bool same_r(Element a, Element b) const {
      return r_of[a] == r_of[b];
    }
    bool same_l(Element a, Element b) const {
      return l_of[a] == l_of[b];
    }
    bool same_h(Element a, Element b) const {
      return same_r(a, b) && same_l(a, b);
    }
    //! The H-class of a.
    std::vector<Element> const& h_class(Element a) const {
      return d_classes[d_of[a]].cell(row_of[a], col_of[a]);
    }
    bool in_group_h(Element a) const {
      return d_classes[d_of[a]].is_group(row_of[a], col_of[a]);
    }
  };

  //! R via equality of aS ∪ {a}, L via Sa ∪ {a}, D as the join of R and L.
  EggBox green_relations(FiniteSemigroup const& S);

  //! D_a ∪ {0} with products leaving D_a sent to 0, or D_a alone when D_a is
  //! the minimal ideal of S.
  struct PrincipalFactor {
    FiniteSemigroup semigroup;
    std::size_t     source_d_class = 0;
    bool            zero_adjoined  = true;
    //! factor index -> element of S (kNoElement for the adjoined zero)
    std::vector<Element> to_source;
    //! element of S -> factor index (kNoElement outside the D-class)
    std::vector<Element> from_source;

    //! Index of the adjoined zero, or kNoElement.
    Element zero() const noexcept {
      return zero_adjoined ? Element{0} : kNoElement;
    }
  };

  //! One factor per D-class, in D-class order. The adjoined zero, when
  //! present, has factor index 0; the D-class follows in increasing order.
  std::vector<PrincipalFactor> principal_factors(FiniteSemigroup const& S,
                                                 EggBox const&          eggs);
  std::vector<PrincipalFactor> principal_factors(FiniteSemigroup const& S);

  //! The quotient of a completely 0-simple factor by H, together with the
  //! H-cell behind each band coordinate (factor indices).
  struct HCellGrid {
    ZeroRectBand                      band;
    std::vector<std::vector<Element>> cells;  // cells[i * band.cols() + j]

    std::vector<Element> const& cell(std::size_t i, std::size_t j) const {
      return cells[i * band.cols() + j];
    }
  };

  HCellGrid    h_cell_grid(PrincipalFactor const& F);
  ZeroRectBand h_quotient(PrincipalFactor const& F);

}  // namespace permatch
