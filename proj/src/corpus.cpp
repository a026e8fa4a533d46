#include "permatch/corpus.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "permatch/band.hpp"
#include "permatch/transformation.hpp"

namespace permatch::corpus {

  FiniteSemigroup cyclic_group(std::size_t k) {
    std::vector<Element> table(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        table[a * k + b] = static_cast<Element>((a + b) % k);
      }
    }
    return FiniteSemigroup(k, std::move(table));
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& A, FiniteSemigroup const& B) {
    std::size_t const    p = A.size(), q = B.size(), n = p * q;
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Element const a = A.product(static_cast<Element>(x / q), static_cast<Element>(y / q));
        Element const b = B.product(static_cast<Element>(x % q), static_cast<Element>(y % q));
        table[x * n + y] = static_cast<Element>(a * q + b);
      }
    }
    return FiniteSemigroup(n, std::move(table));
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S) {
    std::size_t const    n = S.size() + 1;
    std::vector<Element> table(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (x == S.size()) {
          table[x * n + y] = y;
        } else if (y == S.size()) {
          table[x * n + y] = x;
        } else {
          table[x * n + y] = S.product(x, y);
        }
      }
    }
    return FiniteSemigroup(n, std::move(table));
  }

  FiniteSemigroup rees_matrix_semigroup(std::size_t                     k,
                                        std::size_t                     rows,
                                        std::size_t                     cols,
                                        std::vector<std::size_t> const& P) {
    std::size_t const n     = rows * k * cols + 1;
    auto const        index = [&](std::size_t i, std::size_t g, std::size_t l) {
      return static_cast<Element>(1 + (i * k + g) * cols + l);
    };
    std::vector<Element> table(n * n, 0);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t g = 0; g < k; ++g) {
        for (std::size_t l = 0; l < cols; ++l) {
          for (std::size_t j = 0; j < rows; ++j) {
            std::size_t const p = P[l * rows + j];
            if (p == k) {
              continue;
            }
            for (std::size_t h = 0; h < k; ++h) {
              for (std::size_t mu = 0; mu < cols; ++mu) {
                table[index(i, g, l) * n + index(j, h, mu)]
                    = index(i, (g + p + h) % k, mu);
              }
            }
          }
        }
      }
    }
    return FiniteSemigroup(n, std::move(table));
  }

  FiniteSemigroup brandt_b2() {
    return rees_matrix_semigroup(1, 2, 2, {0, 1, 1, 0});
  }

  FiniteSemigroup subset_semilattice(std::size_t k) {
    std::size_t const    n = std::size_t{1} << k;
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<Element>(a | b);
      }
    }
    return FiniteSemigroup(n, std::move(table));
  }

  namespace {

    using Rng = std::mt19937_64;

    std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
      return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
    }

    // Restriction of S to the sorted element set U (closed under product).
    FiniteSemigroup restrict_to(FiniteSemigroup const& S, std::vector<Element> const& U) {
      std::size_t const    n = U.size();
      std::vector<Element> table(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Element const p  = S.product(U[x], U[y]);
          table[x * n + y] = static_cast<Element>(
              std::lower_bound(U.begin(), U.end(), p) - U.begin());
        }
      }
      std::vector<std::string> labels;
      for (Element u : U) {
        labels.push_back(S.label(u));
      }
      return FiniteSemigroup(n, std::move(table), std::move(labels));
    }

    FiniteSemigroup const& t3() {
      static TransformationMonoid const M = enumerate(Family::Tn, 3);
      return M.semigroup;
    }

    FiniteSemigroup const& pt2() {
      static TransformationMonoid const M = enumerate(Family::PTn, 2);
      return M.semigroup;
    }

    std::optional<FiniteSemigroup> try_rees(Rng& rng, std::size_t max_order, bool zero) {
      std::size_t const k    = pick(rng, 1, 3);
      std::size_t const rows = pick(rng, 1, 3);
      std::size_t const cols = pick(rng, 1, 3);
      if (rows * cols * k + (zero ? 1 : 0) > max_order) {
        return std::nullopt;
      }
      std::vector<std::size_t> P(rows * cols);
      for (auto& p : P) {
        p = (zero && rng() % 5 < 2) ? k : pick(rng, 0, k - 1);
      }
      for (std::size_t l = 0; l < cols; ++l) {
        bool any = false;
        for (std::size_t j = 0; j < rows; ++j) {
          any = any || P[l * rows + j] != k;
        }
        if (!any) {
          return std::nullopt;
        }
      }
      for (std::size_t j = 0; j < rows; ++j) {
        bool any = false;
        for (std::size_t l = 0; l < cols; ++l) {
          any = any || P[l * rows + j] != k;
        }
        if (!any) {
          return std::nullopt;
        }
      }
      FiniteSemigroup S = rees_matrix_semigroup(k, rows, cols, P);
      if (!zero) {
        // drop the unreachable zero: all products are non-zero
        std::vector<Element> U;
        for (Element x = 1; x < S.size(); ++x) {
          U.push_back(x);
        }
        return restrict_to(S, U);
      }
      return S;
    }

    std::optional<FiniteSemigroup> try_transformations(Rng& rng, std::size_t max_order) {
      FiniteSemigroup const& T     = rng() % 3 == 0 ? pt2() : t3();
      std::size_t const      ngens = pick(rng, 1, 3);
      std::vector<Element>   gens;
      for (std::size_t k = 0; k < ngens; ++k) {
        gens.push_back(static_cast<Element>(pick(rng, 0, T.size() - 1)));
      }
      auto const U = generated_subsemigroup(T, gens);
      if (U.size() > max_order) {
        return std::nullopt;
      }
      return restrict_to(T, U);
    }

    std::optional<FiniteSemigroup> try_semilattice(Rng& rng, std::size_t max_order) {
      // random union-closed family of subsets of a 4-set
      FiniteSemigroup const& L     = [] () -> FiniteSemigroup const& {
        static FiniteSemigroup const s = subset_semilattice(4);
        return s;
      }();
      std::size_t const      ngens = pick(rng, 1, 4);
      std::vector<Element>   gens;
      for (std::size_t k = 0; k < ngens; ++k) {
        gens.push_back(static_cast<Element>(pick(rng, 0, L.size() - 1)));
      }
      auto const U = generated_subsemigroup(L, gens);
      if (U.size() > max_order) {
        return std::nullopt;
      }
      return restrict_to(L, U);
    }

    std::optional<FiniteSemigroup> try_band(Rng& rng, std::size_t max_order) {
      std::size_t const rows = pick(rng, 1, 3), cols = pick(rng, 1, 4);
      if (rows * cols + 1 > max_order) {
        return std::nullopt;
      }
      double const density = 0.25 + 0.1 * static_cast<double>(pick(rng, 0, 5));
      return to_semigroup(random_band(rows, cols, density, rng()));
    }

    std::optional<FiniteSemigroup> attempt(Rng& rng, std::size_t max_order, int depth);

    std::optional<FiniteSemigroup> try_product(Rng& rng, std::size_t max_order, int depth) {
      if (max_order < 4) {
        return std::nullopt;
      }
      auto A = attempt(rng, max_order / 2, depth + 1);
      if (!A || A->size() < 2) {
        return std::nullopt;
      }
      auto B = attempt(rng, max_order / A->size(), depth + 1);
      if (!B) {
        return std::nullopt;
      }
      return direct_product(*A, *B);
    }

    std::optional<FiniteSemigroup> attempt(Rng& rng, std::size_t max_order, int depth) {
      if (max_order == 0) {
        return std::nullopt;
      }
      std::size_t const kinds = depth > 1 ? 5 : 7;
      switch (rng() % kinds) {
        case 0: return try_rees(rng, max_order, true);
        case 1: return try_rees(rng, max_order, false);
        case 2: return try_transformations(rng, max_order);
        case 3: return try_semilattice(rng, max_order);
        case 4: return try_band(rng, max_order);
        case 5: return try_product(rng, max_order, depth);
        default: {
          if (max_order < 2) {
            return std::nullopt;
          }
          auto S = attempt(rng, max_order - 1, depth + 1);
          if (!S) {
            return std::nullopt;
          }
          return adjoin_identity(*S);
        }
      }
    }

  }  // namespace

  Entry random_regular(std::uint64_t seed, std::size_t max_order) {
    Rng rng(seed);
    for (;;) {
      auto S = attempt(rng, max_order, 0);
      if (S && regularity_check(*S).regular) {
        return {"random-" + std::to_string(seed), seed, std::move(*S)};
      }
    }
  }

  std::vector<Entry> regular_corpus(std::size_t   count,
                                    std::uint64_t first_seed,
                                    std::size_t   max_order) {
    std::vector<Entry> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      out.push_back(random_regular(first_seed + k, max_order));
    }
    return out;
  }

}  // namespace permatch::corpus
