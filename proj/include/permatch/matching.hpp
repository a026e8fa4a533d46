#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "permatch/band.hpp"
#include "permatch/green.hpp"
#include "permatch/permutation.hpp"
#include "permatch/semigroup.hpp"

namespace permatch {

  //! Mutual-inverse graph of a regular semigroup: an edge {a, b} for each
  //! pair of distinct mutual inverses, and a loop flag where a ∈ V(a).
  struct InverseGraph {
    std::vector<std::vector<Element>> adjacency;      // increasing, no loops
    std::vector<bool>                 self_eligible;  // a = a^3

    std::size_t size() const noexcept {
      return adjacency.size();
    }
    //! V(a), increasing.
    std::vector<Element> inverses(Element a) const;
    std::size_t          degree(Element a) const {
      return adjacency[a].size() + (self_eligible[a] ? 1 : 0);
    }
  };

  //! Throws NotRegular.
  InverseGraph build_inverse_graph(FiniteSemigroup const& S);

  //! A set A with |V(A)| < |A|.
  struct HallViolator {
    std::vector<Element> subset;
    std::vector<Element> image;
  };

  //! Perfect matching of a vs V(a) by Hopcroft-Karp. Throws NotRegular.
  std::optional<PermutationMatching> find_permutation_matching(FiniteSemigroup const& S);
  std::optional<PermutationMatching> find_permutation_matching(InverseGraph const& G);

  //! Present iff no permutation matching exists. Throws NotRegular.
  std::optional<HallViolator> hall_violator(FiniteSemigroup const& S);
  std::optional<HallViolator> hall_violator(InverseGraph const& G);

  //! Throws NotAPermutation if p is not a permutation of the elements.
  bool verify_permutation_matching(FiniteSemigroup const& S,
                                   std::vector<Element> const& p);
  //! verify_permutation_matching plus p∘p = id.
  bool verify_involution_matching(FiniteSemigroup const& S,
                                  std::vector<Element> const& p);

  //! a H b implies p[a] H p[b].
  bool is_h_preserving(FiniteSemigroup const& S, std::vector<Element> const& p);
  bool is_h_preserving(EggBox const& eggs, std::vector<Element> const& p);

  //! Sends each element of F to its unique inverse in the H-cell chosen by a
  //! matching q of h_quotient(F) (elements numbered as in to_semigroup).
  //! Throws NoInverseInTargetCell, DomainMismatch.
  PermutationMatching lift_h_matching(PrincipalFactor const&     F,
                                      PermutationMatching const& q);

  //! Union of one matching per principal factor, in principal_factors order.
  //! Throws DomainMismatch.
  PermutationMatching assemble_global_matching(
      FiniteSemigroup const&                 S,
      std::span<PrincipalFactor const>       factors,
      std::span<PermutationMatching const>   parts);

  //! Splits the cycles of a matching into mutually inverse pairs, fixing one
  //! self-inverse element in each odd cycle. Empty when some odd cycle has
  //! no element with a ∈ V(a).
  std::optional<InvolutionMatching> involution_from_cycles(FiniteSemigroup const& S,
                                                           PermutationMatching const& p);
  std::optional<InvolutionMatching> involution_from_cycles(InverseGraph const& G,
                                                           PermutationMatching const& p);

  //! Decides involution matchings with a two-copy gadget: each connected
  //! component of the inverse graph is doubled, the copies joined at every
  //! self-inverse vertex, and a maximum matching of the result computed. An
  //! involution matching exists iff that matching is perfect; the first copy
  //! then gives the pairs and the fixed points. Throws NotRegular.
  std::optional<InvolutionMatching> find_involution_matching(FiniteSemigroup const& S);
  std::optional<InvolutionMatching> find_involution_matching(InverseGraph const& G);

  struct FactorVerdict {
    std::size_t                        d_class = 0;
    std::size_t                        order   = 0;  // factor order
    bool                               zero_adjoined = true;
    bool                               has_matching  = false;
    ZeroRectBand                       quotient;
    bool                               quotient_has_matching = false;
    std::optional<PermutationMatching> quotient_matching;
  };

  //! Six matching criteria evaluated independently where possible:
  //! Hopcroft-Karp on S, a max-flow transversal of {V(a)}, absence of a Hall
  //! violator, an H-preserving matching lifted from quotient matchings,
  //! matchings of every principal factor, and matchings of every H-quotient
  //! band. They must all agree.
  struct CriteriaReport {
    bool matching        = false;
    bool transversal     = false;
    bool hall_condition  = false;
    bool h_preserving    = false;
    bool factors_match   = false;
    bool quotients_match = false;

    std::optional<PermutationMatching> witness;
    std::optional<PermutationMatching> h_preserving_witness;
    std::optional<HallViolator>        violator;
    std::vector<FactorVerdict>         factors;

    bool consistent() const noexcept;
  };

  //! Throws NotRegular, and EquivalenceViolation if the verdicts disagree.
  CriteriaReport matching_criteria(FiniteSemigroup const& S);

}  // namespace permatch
