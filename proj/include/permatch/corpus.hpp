#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "permatch/semigroup.hpp"

namespace permatch::corpus {

  FiniteSemigroup cyclic_group(std::size_t k);
  FiniteSemigroup direct_product(FiniteSemigroup const& A, FiniteSemigroup const& B);
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S);

  //! M^0[Z_k; I, L; P] with P an |L| x |I| matrix over Z_k; entries equal to
  //! k stand for the zero of the sandwich matrix. Element 0 is the zero.
  FiniteSemigroup rees_matrix_semigroup(std::size_t                     group_order,
                                        std::size_t                     rows,
                                        std::size_t                     cols,
                                        std::vector<std::size_t> const& sandwich);

  //! The five-element Brandt semigroup B_2.
  FiniteSemigroup brandt_b2();

  //! Free semilattice on the given number of generators under union, i.e.
  //! all subsets of a k-set.
  FiniteSemigroup subset_semilattice(std::size_t k);

  struct Entry {
    std::string     name;
    std::uint64_t   seed = 0;
    FiniteSemigroup semigroup;
  };

  //! A random regular semigroup of order at most max_order, deterministic in
  //! the seed. Mixes Rees matrix semigroups (with and without zero) over
  //! small cyclic groups, random 0-rectangular bands, regular subsemigroups
  //! of T_3 and PT_2, semilattices, direct products and identity adjunctions.
  Entry random_regular(std::uint64_t seed, std::size_t max_order = 12);

  //! random_regular for seeds first_seed, first_seed + 1, ...
  std::vector<Entry> regular_corpus(std::size_t   count,
                                    std::uint64_t first_seed = 0,
                                    std::size_t   max_order  = 12);

}  // namespace permatch::corpus
