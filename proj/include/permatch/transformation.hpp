#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permatch/matching.hpp"
#include "permatch/semigroup.hpp"

namespace permatch {

  enum class Family { Tn, PTn, On, OPn, Pn };

  std::string_view      family_name(Family f) noexcept;
  std::optional<Family> parse_family(std::string_view name) noexcept;

  //! A (partial) map of {0, ..., n-1}, acting on the right: x(ab) = (xa)b.
  struct Transformation {
    static constexpr std::uint8_t kUndefined = 0xFF;

    std::vector<std::uint8_t> images;

    std::size_t degree() const noexcept {
      return images.size();
    }
    std::size_t rank() const;
    bool        total() const;
    //! Sizes of the kernel classes of a total map, increasing.
    std::vector<std::size_t> kernel_signature() const;
    //! "012" style, '-' for undefined.
    std::string to_string() const;

    bool operator==(Transformation const&) const = default;
    auto operator<=>(Transformation const&) const = default;
  };

  Transformation compose(Transformation const& a, Transformation const& b);

  bool is_order_preserving(Transformation const& t);
  bool is_orientation_preserving(Transformation const& t);
  bool is_orientation_reversing(Transformation const& t);

  struct TransformationMonoid {
    Family                      family = Family::Tn;
    std::size_t                 degree = 0;
    FiniteSemigroup             semigroup;
    std::vector<Transformation> elements;  // index -> map, increasing
  };

  inline constexpr std::size_t kDefaultEnumerationCap = 10'000;

  //! All maps of the family in lexicographic order of image sequences, with
  //! the Cayley table of composition. Throws TooLarge past the cap.
  TransformationMonoid enumerate(Family      family,
                                 std::size_t n,
                                 std::size_t cap = kDefaultEnumerationCap);

  //! Union of the R-classes of a D-class of T_n that share a kernel
  //! signature.
  struct QClass {
    std::size_t              rank = 0;
    std::vector<std::size_t> signature;
    std::vector<Element>     elements;  // increasing
  };

  //! Q-classes of the rank-r D-class, ordered by signature. Throws NotTn.
  std::vector<QClass> q_class_partition(TransformationMonoid const& M, std::size_t rank);

  //! inverses of each member of Q that lie in Q; entry k belongs to
  //! Q.elements[k].
  std::vector<std::vector<Element>> q_class_inverses(FiniteSemigroup const& S,
                                                     QClass const&          Q);

  //! Common degree of the within-Q mutual-inverse bipartite graph, or empty
  //! if the degrees differ.
  std::optional<std::size_t> q_class_regular_degree(FiniteSemigroup const& S,
                                                    QClass const&          Q);

  //! A perfect matching of the within-Q graph: entry k is the partner of
  //! Q.elements[k]. Empty if none exists.
  std::optional<std::vector<Element>> q_perfect_matching(FiniteSemigroup const& S,
                                                         QClass const&          Q);

  struct QCycleChase {
    std::vector<std::vector<Element>> cycles;
    //! element of S -> its partner, kNoElement outside Q
    std::vector<Element> image;
  };

  //! Follows a1, a2 = pm(a1), a3 = pm(a2), ... until the walk closes, then
  //! restarts from the least unvisited member. Consecutive members of each
  //! cycle are mutual inverses. Throws NotPerfect when pm is not a perfect
  //! matching of the within-Q graph.
  QCycleChase matching_from_q_perfect_matching(FiniteSemigroup const&      S,
                                               QClass const&               Q,
                                               std::vector<Element> const& pm);

  struct TnMatchingResult {
    PermutationMatching matching;
    struct QSummary {
      std::size_t                rank = 0;
      std::vector<std::size_t>   signature;
      std::size_t                size = 0;
      std::optional<std::size_t> degree;
    };
    std::vector<QSummary> q_classes;
    bool                  all_regular = true;
  };

  //! Matching of T_n assembled from the Q-class perfect matchings.
  //! Throws NotTn, NotPerfect.
  TnMatchingResult tn_matching(TransformationMonoid const& M);

  //! Whether the elements of U (increasing) form an inverse subsemigroup:
  //! regular within U with commuting idempotents.
  bool is_inverse_subsemigroup(FiniteSemigroup const& S, std::vector<Element> const& U);

  //! Mutual-inverse pairs {a, b} (loops included) with <a, b> an inverse
  //! subsemigroup. Throws TooLarge when |S| > cap, NotRegular.
  InverseGraph strong_inverse_pairs(FiniteSemigroup const& S,
                                    std::size_t            cap = 1024);

}  // namespace permatch
