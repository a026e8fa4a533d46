#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "permatch/band.hpp"
#include "permatch/corpus.hpp"
#include "permatch/green.hpp"
#include "permatch/matching.hpp"
#include "permatch/oracle.hpp"
#include "permatch/transformation.hpp"
#include "support.hpp"

using namespace permatch;

namespace {

  std::vector<Element> identity(std::size_t n) {
    std::vector<Element> p(n);
    std::iota(p.begin(), p.end(), Element{0});
    return p;
  }

  InverseGraph triangle(bool first_self_inverse) {
    InverseGraph G;
    G.adjacency     = {{1, 2}, {0, 2}, {0, 1}};
    G.self_eligible = {first_self_inverse, false, false};
    return G;
  }

}  // namespace

TEST_CASE("inverse graph of the seven-element band") {
  auto const B = builtin_B7();
  auto const G = build_inverse_graph(to_semigroup(B));
  Element const x = B.element(1, 1);
  CHECK(G.degree(x) == 1);
  CHECK(G.inverses(x) == std::vector<Element>{B.element(0, 0)});
  CHECK_FALSE(G.self_eligible[x]);
}

TEST_CASE("inverse graph of a semilattice has only loops") {
  auto const G = build_inverse_graph(test::chain(5));
  for (Element a = 0; a < 5; ++a) {
    CHECK(G.adjacency[a].empty());
    CHECK(G.self_eligible[a]);
  }
}

TEST_CASE("inverse graph of T_3") {
  auto const M = enumerate(Family::Tn, 3);
  auto const G = build_inverse_graph(M.semigroup);
  CHECK(G.size() == 27);
  Element const id = static_cast<Element>(
      std::find_if(M.elements.begin(), M.elements.end(),
                   [](Transformation const& t) { return t.to_string() == "012"; })
      - M.elements.begin());
  CHECK(G.degree(id) == 1);
  CHECK_THROWS_AS(build_inverse_graph(test::null_semigroup()), Error);
}

TEST_CASE("seven-element band has no matching and a two-element violator") {
  auto const B = builtin_B7();
  auto const S = to_semigroup(B);
  CHECK_FALSE(find_permutation_matching(S).has_value());
  auto const v = hall_violator(S);
  REQUIRE(v.has_value());
  CHECK(v->subset == std::vector<Element>{B.element(1, 1), B.element(1, 2)});
  CHECK(v->image == std::vector<Element>{B.element(0, 0)});
  CHECK_FALSE(find_involution_matching(S).has_value());
}

TEST_CASE("Hall violators are genuine and appear exactly without a matching") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto const S = corpus::random_regular(seed).semigroup;
    auto const p = find_permutation_matching(S);
    auto const v = hall_violator(S);
    CHECK(p.has_value() != v.has_value());
    if (p) {
      CHECK(verify_permutation_matching(S, p->image));
    } else {
      std::set<Element> image;
      for (Element a : v->subset) {
        for (Element b : oracle::inverses(S, a)) {
          image.insert(b);
        }
      }
      CHECK(std::vector<Element>(image.begin(), image.end()) == v->image);
      CHECK(v->image.size() < v->subset.size());
    }
  }
}

TEST_CASE("matchings on bands and unions of groups") {
  SUBCASE("2x2 full band: identity is a matching") {
    ZeroRectBand B(2, 2, std::vector<bool>(4, true));
    auto const   S = to_semigroup(B);
    CHECK(verify_permutation_matching(S, identity(5)));
    CHECK(find_permutation_matching(S).has_value());
  }
  SUBCASE("rectangular band: every bijection is a matching") {
    auto const S = test::rectangular_band(2, 3);
    auto       p = identity(6);
    do {
      CHECK(verify_permutation_matching(S, p));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  SUBCASE("union of groups has no violator") {
    auto const S = corpus::direct_product(corpus::cyclic_group(3), test::chain(2));
    CHECK_FALSE(hall_violator(S).has_value());
  }
  SUBCASE("swapping two elements of a semilattice is not a matching") {
    auto p = identity(4);
    std::swap(p[1], p[2]);
    CHECK_FALSE(verify_permutation_matching(test::chain(4), p));
  }
  SUBCASE("non-bijections are rejected loudly") {
    CHECK_THROWS_AS(verify_permutation_matching(test::chain(3), {0, 0, 1}), Error);
    CHECK_THROWS_AS(verify_permutation_matching(test::chain(3), {0, 1}), Error);
  }
  SUBCASE("T_3 has a matching") {
    auto const S = enumerate(Family::Tn, 3).semigroup;
    auto const p = find_permutation_matching(S);
    REQUIRE(p.has_value());
    CHECK(verify_permutation_matching(S, p->image));
  }
}

TEST_CASE("H-preservation") {
  auto const S = test::rectangular_band(2, 2);
  CHECK(is_h_preserving(S, identity(4)));

  // 2x2 rectangular band of 2-element groups: group inverse maps each H-class to itself
  auto const G = corpus::direct_product(test::rectangular_band(2, 2), corpus::cyclic_group(2));
  std::vector<Element> inv(G.size());
  for (Element a = 0; a < G.size(); ++a) {
    inv[a] = static_cast<Element>((a / 2) * 2 + (2 - a % 2) % 2);
  }
  CHECK(verify_permutation_matching(G, inv));
  CHECK(is_h_preserving(G, inv));

  // swap the two elements of one H-class and the other H-classes stay put
  auto scrambled = identity(G.size());
  std::swap(scrambled[0], scrambled[1]);
  CHECK(is_h_preserving(G, scrambled));

  // sending one H-class into two different ones is not
  auto split = identity(G.size());
  std::swap(split[1], split[2]);
  CHECK_FALSE(is_h_preserving(G, split));
}

TEST_CASE("lifting quotient matchings") {
  SUBCASE("a group lifts to inversion") {
    auto const S  = corpus::cyclic_group(5);
    auto const Fs = principal_factors(S);
    REQUIRE(Fs.size() == 1);
    auto const lifted = lift_h_matching(Fs[0], {{0, 1}});
    for (Element a = 0; a < 5; ++a) {
      CHECK(Fs[0].to_source[lifted.image[a]] == (5 - Fs[0].to_source[a]) % 5);
    }
  }
  SUBCASE("2x2 band of trivial groups: the lift is the quotient matching") {
    auto const S  = test::rectangular_band(2, 2);
    auto const Fs = principal_factors(S);
    REQUIRE(Fs.size() == 1);
    // transpose (i,j) -> (j,i) on the band numbering 1 + 2i + j
    PermutationMatching const q{{0, 1, 3, 2, 4}};
    auto const                lifted = lift_h_matching(Fs[0], q);
    auto const                grid   = h_cell_grid(Fs[0]);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(lifted.image[grid.cell(i, j)[0]] == grid.cell(j, i)[0]);
      }
    }
  }
  SUBCASE("Brandt B_2: the lift is the unique inverse matching") {
    auto const S  = corpus::brandt_b2();
    auto const Fs = principal_factors(S);
    std::vector<PermutationMatching> parts;
    for (auto const& F : Fs) {
      auto const q = find_permutation_matching(to_semigroup(h_quotient(F)));
      REQUIRE(q.has_value());
      parts.push_back(lift_h_matching(F, *q));
    }
    auto const global = assemble_global_matching(S, Fs, parts);
    for (Element a = 0; a < S.size(); ++a) {
      CHECK(std::vector<Element>{global.image[a]} == inverses_of(S, a));
    }
  }
}

TEST_CASE("assembling per-factor matchings") {
  auto const S  = enumerate(Family::Tn, 3).semigroup;
  auto const Fs = principal_factors(S);
  std::vector<PermutationMatching> parts;
  for (auto const& F : Fs) {
    auto const p = find_permutation_matching(F.semigroup);
    REQUIRE(p.has_value());
    parts.push_back(*p);
  }
  auto const global = assemble_global_matching(S, Fs, parts);
  CHECK(verify_permutation_matching(S, global.image));

  parts.pop_back();
  CHECK_THROWS_AS(assemble_global_matching(S, Fs, parts), Error);

  auto const R   = test::rectangular_band(2, 3);
  auto const RFs = principal_factors(R);
  std::vector<PermutationMatching> one{{identity(6)}};
  CHECK(assemble_global_matching(R, RFs, one).image == identity(6));
}

TEST_CASE("splitting cycles into mutually inverse pairs") {
  SUBCASE("short cycles are kept") {
    auto const S = test::rectangular_band(2, 2);
    PermutationMatching const p{{1, 0, 2, 3}};
    auto const                q = involution_from_cycles(S, p);
    REQUIRE(q.has_value());
    CHECK(q->image == p.image);
  }
  SUBCASE("a 3-cycle of idempotents fixes one and pairs two") {
    auto const S = test::rectangular_band(3, 3);
    auto       p = identity(9);
    p[0] = 1, p[1] = 2, p[2] = 0;
    auto const q = involution_from_cycles(S, {p});
    REQUIRE(q.has_value());
    CHECK(verify_involution_matching(S, q->image));
    std::size_t fixed = 0;
    for (Element a = 0; a < 3; ++a) {
      fixed += q->image[a] == a ? 1 : 0;
      CHECK(q->image[a] < 3);
    }
    CHECK(fixed == 1);
  }
  SUBCASE("an odd cycle without a self-inverse element fails") {
    PermutationMatching const p{{1, 2, 0}};
    CHECK_FALSE(involution_from_cycles(triangle(false), p).has_value());
    auto const q = involution_from_cycles(triangle(true), p);
    REQUIRE(q.has_value());
    CHECK(q->image == std::vector<Element>{0, 2, 1});
  }
}

TEST_CASE("involution decision") {
  SUBCASE("semilattice gives the identity") {
    auto const q = find_involution_matching(test::chain(6));
    REQUIRE(q.has_value());
    CHECK(q->image == identity(6));
  }
  SUBCASE("a lone triangle needs a loop") {
    CHECK_FALSE(find_involution_matching(triangle(false)).has_value());
    auto const q = find_involution_matching(triangle(true));
    REQUIRE(q.has_value());
    CHECK(q->image[0] == 0);
  }
  SUBCASE("agrees with backtracking on the corpus") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      auto const S = corpus::random_regular(seed, 10).semigroup;
      auto const q = find_involution_matching(S);
      CHECK(q.has_value() == oracle::involution_matching(S).has_value());
      if (q) {
        CHECK(verify_involution_matching(S, q->image));
      }
    }
  }
}

TEST_CASE("matching criteria agree") {
  auto const b7 = matching_criteria(to_semigroup(builtin_B7()));
  CHECK(b7.consistent());
  CHECK_FALSE(b7.matching);
  CHECK(b7.violator.has_value());

  auto const t3 = matching_criteria(enumerate(Family::Tn, 3).semigroup);
  CHECK(t3.consistent());
  CHECK(t3.matching);
  REQUIRE(t3.h_preserving_witness.has_value());
  CHECK(is_h_preserving(enumerate(Family::Tn, 3).semigroup, t3.h_preserving_witness->image));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto const S = corpus::random_regular(seed).semigroup;
    auto const r = matching_criteria(S);
    CHECK(r.matching == oracle::permutation_matching(S).has_value());
  }
}
