#include "doctest.h"

#include <algorithm>

#include "permatch/band.hpp"
#include "permatch/corpus.hpp"
#include "permatch/green.hpp"
#include "permatch/oracle.hpp"
#include "permatch/transformation.hpp"
#include "support.hpp"

using namespace permatch;

namespace {

  std::vector<std::size_t> d_class_sizes(EggBox const& eggs) {
    std::vector<std::size_t> sizes;
    for (auto const& D : eggs.d_classes) {
      sizes.push_back(D.elements.size());
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

}  // namespace

TEST_CASE("Green's relations agree with the ideal-based definitions") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto const S    = corpus::random_regular(seed, 10).semigroup;
    auto const eggs = green_relations(S);
    for (Element a = 0; a < S.size(); ++a) {
      for (Element b = 0; b < S.size(); ++b) {
        CHECK(eggs.same_r(a, b) == oracle::same_r(S, a, b));
        CHECK(eggs.same_l(a, b) == oracle::same_l(S, a, b));
        CHECK((eggs.d_of[a] == eggs.d_of[b]) == oracle::same_d(S, a, b));
      }
    }
  }
}

TEST_CASE("egg-box cells are the H-classes") {
  auto const S    = enumerate(Family::Tn, 3).semigroup;
  auto const eggs = green_relations(S);
  for (Element a = 0; a < S.size(); ++a) {
    auto const& H = eggs.h_class(a);
    CHECK(std::find(H.begin(), H.end(), a) != H.end());
    for (Element b : H) {
      CHECK(eggs.same_h(a, b));
    }
    bool has_idempotent = false;
    for (Element b : H) {
      has_idempotent = has_idempotent || S.is_idempotent(b);
    }
    CHECK(eggs.in_group_h(a) == has_idempotent);
  }
}

TEST_CASE("rectangular band is a single D-class") {
  auto const eggs = green_relations(test::rectangular_band(2, 3));
  REQUIRE(eggs.d_classes.size() == 1);
  auto const& D = eggs.d_classes[0];
  CHECK(D.rows() == 2);
  CHECK(D.cols() == 3);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(D.cell(i, j).size() == 1);
      CHECK(D.is_group(i, j));
    }
  }
}

TEST_CASE("T_3 has D-classes of sizes 3, 6 and 18") {
  auto const eggs = green_relations(enumerate(Family::Tn, 3).semigroup);
  CHECK(d_class_sizes(eggs) == std::vector<std::size_t>{3, 6, 18});
}

TEST_CASE("seven-element band: zero plus one 2x3 D-class") {
  auto const eggs = green_relations(to_semigroup(builtin_B7()));
  CHECK(d_class_sizes(eggs) == std::vector<std::size_t>{1, 6});
  for (auto const& D : eggs.d_classes) {
    if (D.elements.size() == 6) {
      CHECK(D.rows() == 2);
      CHECK(D.cols() == 3);
    }
  }
}

TEST_CASE("principal factors") {
  SUBCASE("rectangular band is its own minimal ideal") {
    auto const S  = test::rectangular_band(2, 3);
    auto const Fs = principal_factors(S);
    REQUIRE(Fs.size() == 1);
    CHECK_FALSE(Fs[0].zero_adjoined);
    CHECK(Fs[0].semigroup.size() == 6);
    CHECK(Fs[0].zero() == kNoElement);
  }
  SUBCASE("T_3: three factors, the constants without a zero") {
    auto const M  = enumerate(Family::Tn, 3);
    auto const Fs = principal_factors(M.semigroup);
    REQUIRE(Fs.size() == 3);
    std::size_t zero_free = 0;
    for (auto const& F : Fs) {
      CHECK_FALSE(validate(F.semigroup).has_value());
      if (!F.zero_adjoined) {
        ++zero_free;
        CHECK(F.semigroup.size() == 3);
        CHECK(M.elements[F.to_source[0]].rank() == 1);
      }
    }
    CHECK(zero_free == 1);
  }
  SUBCASE("seven-element band: the nonzero factor is the band itself") {
    auto const S  = to_semigroup(builtin_B7());
    auto const Fs = principal_factors(S);
    REQUIRE(Fs.size() == 2);
    for (auto const& F : Fs) {
      if (F.semigroup.size() == 7) {
        CHECK(F.zero_adjoined);
        // index maps preserve the table once the zero is identified
        for (Element x = 1; x < 7; ++x) {
          for (Element y = 1; y < 7; ++y) {
            Element const p = F.semigroup.product(x, y);
            Element const q = S.product(F.to_source[x], F.to_source[y]);
            CHECK((p == 0 ? Element{0} : F.to_source[p]) == q);
          }
        }
        auto const Q = h_quotient(F);
        CHECK(Q == builtin_B7());
      } else {
        CHECK(F.semigroup.size() == 1);
        CHECK_FALSE(F.zero_adjoined);
      }
    }
  }
  SUBCASE("top of a chain keeps its adjoined zero") {
    auto const Fs = principal_factors(test::chain(3));
    REQUIRE(Fs.size() == 3);
    std::size_t zero_free = 0;
    for (auto const& F : Fs) {
      zero_free += F.zero_adjoined ? 0 : 1;
    }
    CHECK(zero_free == 1);
  }
}

TEST_CASE("H-quotients") {
  SUBCASE("a group collapses to a 1x1 band") {
    auto const Fs = principal_factors(corpus::cyclic_group(4));
    REQUIRE(Fs.size() == 1);
    auto const Q = h_quotient(Fs[0]);
    CHECK(Q.rows() == 1);
    CHECK(Q.cols() == 1);
    CHECK(Q.idempotent(0, 0));
  }
  SUBCASE("rank-2 factor of T_3") {
    auto const M = enumerate(Family::Tn, 3);
    for (auto const& F : principal_factors(M.semigroup)) {
      if (M.elements[F.to_source[F.zero_adjoined ? 1 : 0]].rank() != 2) {
        continue;
      }
      auto const grid = h_cell_grid(F);
      auto const& Q   = grid.band;
      REQUIRE(Q.rows() == 3);
      REQUIRE(Q.cols() == 3);
      // an image is a transversal of a two-class kernel unless it lies in
      // the doubleton class, so each row and column misses exactly one cell
      for (std::size_t i = 0; i < 3; ++i) {
        std::size_t row = 0, col = 0;
        for (std::size_t j = 0; j < 3; ++j) {
          row += Q.idempotent(i, j);
          col += Q.idempotent(j, i);
          bool idem = false;
          for (Element x : grid.cell(i, j)) {
            idem = idem || F.semigroup.is_idempotent(x);
          }
          CHECK(idem == Q.idempotent(i, j));
          CHECK(grid.cell(i, j).size() == 2);
        }
        CHECK(row == 2);
        CHECK(col == 2);
      }
    }
  }
  SUBCASE("non-regular input is rejected") {
    CHECK_THROWS_AS(principal_factors(test::null_semigroup()), Error);
  }
}
