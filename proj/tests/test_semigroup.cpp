#include "doctest.h"

#include "permatch/band.hpp"
#include "permatch/corpus.hpp"
#include "permatch/oracle.hpp"
#include "permatch/semigroup.hpp"
#include "permatch/transformation.hpp"
#include "support.hpp"

using namespace permatch;

TEST_CASE("validate accepts a rectangular band") {
  CHECK_FALSE(validate(test::rectangular_band(2, 3)).has_value());
}

TEST_CASE("validate reports an out-of-range entry") {
  FiniteSemigroup S(2, {0, 1, 1, 2});
  auto const      err = validate(S);
  REQUIRE(err.has_value());
  CHECK(err->code == ErrorCode::entry_out_of_range);
  CHECK(err->a == 1);
  CHECK(err->b == 1);
  CHECK_THROWS_AS(require_valid(S), Error);
}

TEST_CASE("validate finds the non-associative triple of a small magma") {
  // 0*1 = 2 and 2*1 = 1, everything else 0: (0*1)*1 = 1 but 0*(1*1) = 0.
  FiniteSemigroup S(3, {0, 2, 0, 0, 0, 0, 0, 1, 0});
  CHECK(S.product(S.product(0, 1), 1) != S.product(0, S.product(1, 1)));
  auto const naive = oracle::associativity_failure(S);
  REQUIRE(naive.has_value());
  CHECK(*naive == std::array<Element, 3>{0, 0, 1});  // lexicographically first
  auto const err = validate(S);
  REQUIRE(err.has_value());
  CHECK(err->code == ErrorCode::not_associative);
  CHECK(S.product(S.product(err->a, err->b), err->c)
        != S.product(err->a, S.product(err->b, err->c)));
  try {
    require_valid(S);
    FAIL("expected NotAssociative");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::not_associative);
    CHECK(exit_code(e.code()) == 3);
  }
}

TEST_CASE("validate agrees with the cubic check on perturbed tables") {
  std::mt19937_64 rng(7);
  std::size_t     associative = 0, broken = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto const           base = corpus::random_regular(seed, 10).semigroup;
    std::vector<Element> t(base.table().begin(), base.table().end());
    std::size_t const    n = base.size();
    if (seed % 3 != 0) {
      t[rng() % t.size()] = static_cast<Element>(rng() % n);
    }
    FiniteSemigroup S(n, t);
    bool const      fast  = !validate(S).has_value();
    bool const      naive = !oracle::associativity_failure(S).has_value();
    CHECK(fast == naive);
    (naive ? associative : broken) += 1;
  }
  CHECK(associative > 50);
  CHECK(broken > 50);
}

TEST_CASE("random magmas are rejected exactly when the cubic check fails") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    std::size_t const n = 1 + rng() % 5;
    FiniteSemigroup   S(n, test::random_table(n, rng));
    CHECK(validate(S).has_value() == oracle::associativity_failure(S).has_value());
  }
}

TEST_CASE("greedy generators generate the whole semigroup") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto const S    = corpus::random_regular(seed).semigroup;
    auto const gens = greedy_generators(S);
    CHECK(generated_subsemigroup(S, gens).size() == S.size());
  }
}

TEST_CASE("inverses in the seven-element band") {
  auto const B = builtin_B7();
  auto const S = to_semigroup(B);
  CHECK(S.size() == 7);
  // (2,2) has the single inverse (1,1)
  CHECK(inverses_of(S, B.element(1, 1)) == std::vector<Element>{B.element(0, 0)});
  CHECK(inverses_of(S, B.element(1, 2)) == std::vector<Element>{B.element(0, 0)});
  for (Element a = 0; a < S.size(); ++a) {
    CHECK(inverses_of(S, a) == oracle::inverses(S, a));
  }
}

TEST_CASE("every idempotent is its own inverse") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto const S = corpus::random_regular(seed).semigroup;
    for (Element e : idempotents(S)) {
      auto const V = inverses_of(S, e);
      CHECK(std::find(V.begin(), V.end(), e) != V.end());
    }
  }
}

TEST_CASE("inverses of a constant map in T_3") {
  auto const  M = enumerate(Family::Tn, 3);
  auto const& S = M.semigroup;
  std::vector<Element> constants;
  for (Element a = 0; a < S.size(); ++a) {
    if (M.elements[a].rank() == 1) {
      constants.push_back(a);
    }
  }
  REQUIRE(constants.size() == 3);
  for (Element c : constants) {
    CHECK(inverses_of(S, c) == constants);
    CHECK(oracle::inverses(S, c) == constants);
  }
}

TEST_CASE("all_inverses matches inverses_of") {
  auto const S   = enumerate(Family::Tn, 3).semigroup;
  auto const all = all_inverses(S);
  for (Element a = 0; a < S.size(); ++a) {
    CHECK(all[a] == inverses_of(S, a));
  }
}

TEST_CASE("regularity") {
  CHECK(regularity_check(to_semigroup(builtin_B7())).regular);
  auto const r = regularity_check(test::null_semigroup());
  CHECK_FALSE(r.regular);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == 1);
  CHECK_THROWS_AS(require_regular(test::null_semigroup()), Error);
  CHECK(regularity_check(enumerate(Family::On, 3).semigroup).regular);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    CHECK(oracle::is_regular(corpus::random_regular(seed).semigroup));
  }
}

TEST_CASE("structure report") {
  auto const rb = structure_report(test::rectangular_band(2, 3));
  CHECK(rb.rectangular_band);
  CHECK(rb.satisfies_x_eq_x3);
  CHECK(rb.orthodox);
  CHECK_FALSE(rb.inverse);

  auto const b7 = structure_report(to_semigroup(builtin_B7()));
  CHECK(b7.orthodox);
  CHECK_FALSE(b7.inverse);
  CHECK(b7.d_class_count == 2);

  auto const sl = structure_report(test::chain(4));
  CHECK(sl.inverse);
  CHECK(sl.union_of_groups);
  CHECK(sl.idempotent_count == 4);

  auto const g = structure_report(corpus::cyclic_group(5));
  CHECK(g.inverse);
  CHECK(g.union_of_groups);
  CHECK_FALSE(g.satisfies_x_eq_x3);

  auto const t3 = structure_report(enumerate(Family::Tn, 3).semigroup);
  CHECK(t3.regular);
  CHECK_FALSE(t3.orthodox);
  CHECK(t3.d_class_count == 3);
}

TEST_CASE("malformed tables are parse errors") {
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 1, 1}), Error);
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 0, 0, 0}, {"a"}), Error);
}
