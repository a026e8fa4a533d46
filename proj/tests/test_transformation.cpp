#include "doctest.h"

#include <algorithm>

#include "permatch/green.hpp"
#include "permatch/matching.hpp"
#include "permatch/transformation.hpp"

using namespace permatch;

namespace {

  std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  Transformation map(std::vector<std::uint8_t> images) {
    return Transformation{std::move(images)};
  }

  std::vector<std::vector<std::size_t>> signatures(std::vector<QClass> const& qs) {
    std::vector<std::vector<std::size_t>> out;
    for (auto const& q : qs) {
      out.push_back(q.signature);
    }
    return out;
  }

}  // namespace

TEST_CASE("family sizes") {
  CHECK(enumerate(Family::Tn, 3).semigroup.size() == 27);
  CHECK(enumerate(Family::On, 3).semigroup.size() == 10);
  CHECK(enumerate(Family::PTn, 2).semigroup.size() == 9);
  CHECK(enumerate(Family::Pn, 3).semigroup.size() == 27);
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(enumerate(Family::On, n).semigroup.size() == binomial(2 * n - 1, n - 1));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    CHECK(enumerate(Family::OPn, n).semigroup.size() == n * binomial(2 * n - 1, n - 1) - n * (n - 1));
  }
  CHECK_THROWS_AS(enumerate(Family::Tn, 6), Error);  // 46656 > default cap
}

TEST_CASE("enumerated tables are valid and ordered") {
  for (Family f : {Family::Tn, Family::PTn, Family::On, Family::OPn, Family::Pn}) {
    auto const M = enumerate(f, 3);
    CHECK_FALSE(validate(M.semigroup).has_value());
    CHECK(std::is_sorted(M.elements.begin(), M.elements.end()));
    for (Element a = 0; a < M.semigroup.size(); ++a) {
      for (Element b = 0; b < M.semigroup.size(); ++b) {
        CHECK(M.elements[M.semigroup.product(a, b)] == compose(M.elements[a], M.elements[b]));
      }
    }
  }
}

TEST_CASE("maps act on the right") {
  // x(ab) = (xa)b
  auto const a = map({1, 2, 0});
  auto const b = map({0, 0, 2});
  auto const c = compose(a, b);
  for (std::uint8_t x = 0; x < 3; ++x) {
    CHECK(c.images[x] == b.images[a.images[x]]);
  }
  auto const p = compose(map({1, Transformation::kUndefined, 0}), map({Transformation::kUndefined, 2, 1}));
  CHECK(p.to_string() == "2--");
}

TEST_CASE("order and orientation predicates") {
  CHECK(is_order_preserving(map({0, 0, 2})));
  CHECK_FALSE(is_order_preserving(map({1, 0, 2})));
  CHECK(is_orientation_preserving(map({1, 2, 0})));
  CHECK_FALSE(is_orientation_preserving(map({2, 1, 0})));
  CHECK(is_orientation_reversing(map({2, 1, 0})));
  CHECK(is_orientation_preserving(map({2, 3, 0, 0})));
  CHECK_FALSE(is_orientation_preserving(map({0, 2, 1, 3})));
  for (Family f : {Family::On, Family::OPn, Family::Pn}) {
    for (auto const& t : enumerate(f, 4).elements) {
      if (f == Family::On) {
        CHECK(is_order_preserving(t));
      } else if (f == Family::OPn) {
        CHECK(is_orientation_preserving(t));
      } else {
        CHECK((is_orientation_preserving(t) || is_orientation_reversing(t)));
      }
    }
  }
}

TEST_CASE("Q-classes") {
  auto const T3 = enumerate(Family::Tn, 3);
  CHECK(signatures(q_class_partition(T3, 2)) == std::vector<std::vector<std::size_t>>{{1, 2}});
  CHECK(signatures(q_class_partition(T3, 3)) == std::vector<std::vector<std::size_t>>{{1, 1, 1}});
  auto const T4 = enumerate(Family::Tn, 4);
  CHECK(signatures(q_class_partition(T4, 2)) == std::vector<std::vector<std::size_t>>{{1, 3}, {2, 2}});
  CHECK_THROWS_AS(q_class_partition(enumerate(Family::On, 3), 2), Error);

  // Q-classes are unions of R-classes
  auto const eggs = green_relations(T4.semigroup);
  for (std::size_t r = 1; r <= 4; ++r) {
    for (auto const& Q : q_class_partition(T4, r)) {
      for (Element a : Q.elements) {
        for (Element b = 0; b < T4.semigroup.size(); ++b) {
          if (eggs.same_r(a, b)) {
            CHECK(std::binary_search(Q.elements.begin(), Q.elements.end(), b));
          }
        }
      }
    }
  }
}

TEST_CASE("Q-class graphs are regular") {
  auto const T3 = enumerate(Family::Tn, 3);
  CHECK(q_class_regular_degree(T3.semigroup, q_class_partition(T3, 3)[0]) == 1);
  CHECK(q_class_regular_degree(T3.semigroup, q_class_partition(T3, 1)[0]) == 3);
  auto const T4 = enumerate(Family::Tn, 4);
  for (std::size_t r = 1; r <= 4; ++r) {
    for (auto const& Q : q_class_partition(T4, r)) {
      auto const d = q_class_regular_degree(T4.semigroup, Q);
      REQUIRE(d.has_value());
      CHECK(*d >= 1);
    }
  }
}

TEST_CASE("cycle chase over a Q-class perfect matching") {
  auto const T3 = enumerate(Family::Tn, 3);
  auto const Q  = q_class_partition(T3, 1)[0];
  auto const pm = q_perfect_matching(T3.semigroup, Q);
  REQUIRE(pm.has_value());
  auto const chase = matching_from_q_perfect_matching(T3.semigroup, Q, *pm);
  for (auto const& cycle : chase.cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      CHECK(mutually_inverse(T3.semigroup, cycle[k], cycle[(k + 1) % cycle.size()]));
    }
  }
  for (Element a : Q.elements) {
    CHECK(mutually_inverse(T3.semigroup, a, chase.image[a]));
  }

  // a symmetric pairing chases into 2-cycles
  auto const S3 = q_class_partition(T3, 3)[0];
  auto const sp = q_perfect_matching(T3.semigroup, S3);
  REQUIRE(sp.has_value());
  for (auto const& cycle : matching_from_q_perfect_matching(T3.semigroup, S3, *sp).cycles) {
    CHECK(cycle.size() <= 2);
  }

  std::vector<Element> bogus(Q.elements.size(), Q.elements[0]);
  CHECK_THROWS_AS(matching_from_q_perfect_matching(T3.semigroup, Q, bogus), Error);
}

TEST_CASE("T_n matchings from Q-classes") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto const M = enumerate(Family::Tn, n);
    auto const r = tn_matching(M);
    CHECK(r.all_regular);
    CHECK(verify_permutation_matching(M.semigroup, r.matching.image));
  }
}

TEST_CASE("strong inverses") {
  auto const T3 = enumerate(Family::Tn, 3);
  auto const& S = T3.semigroup;
  auto const  G = strong_inverse_pairs(S);
  // every idempotent e generates {e}, an inverse subsemigroup
  for (Element e : idempotents(S)) {
    CHECK(G.self_eligible[e]);
  }
  // a permutation and its group inverse generate a cyclic group
  for (Element a = 0; a < S.size(); ++a) {
    if (T3.elements[a].rank() == 3) {
      auto const V = inverses_of(S, a);
      REQUIRE(V.size() == 1);
      if (V[0] != a) {
        CHECK(std::count(G.adjacency[a].begin(), G.adjacency[a].end(), V[0]) == 1);
      }
    }
  }
  // strong pairs are mutual inverses
  for (Element a = 0; a < S.size(); ++a) {
    for (Element b : G.adjacency[a]) {
      CHECK(mutually_inverse(S, a, b));
    }
  }
  CHECK_THROWS_AS(strong_inverse_pairs(enumerate(Family::Tn, 4).semigroup, 100), Error);
  // whether the strong subgraph admits a matching is decided, not assumed
  auto const p = find_permutation_matching(G);
  MESSAGE("T_3 strong inverse matching: " << std::string(p ? "present" : "absent"));
}
