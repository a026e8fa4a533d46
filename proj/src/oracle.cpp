#include "permatch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "permatch/error.hpp"

namespace permatch::oracle {

  std::vector<Element> inverses(FiniteSemigroup const& S, Element a) {
    std::vector<Element> out;
    for (Element b = 0; b < S.size(); ++b) {
      if (S.product(S.product(a, b), a) == a && S.product(S.product(b, a), b) == b) {
        out.push_back(b);
      }
    }
    return out;
  }

  std::optional<std::array<Element, 3>> associativity_failure(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (S.product(S.product(a, b), c) != S.product(a, S.product(b, c))) {
            return std::array<Element, 3>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_regular(FiniteSemigroup const& S) {
    for (Element a = 0; a < S.size(); ++a) {
      bool found = false;
      for (Element x = 0; x < S.size() && !found; ++x) {
        found = S.product(S.product(a, x), a) == a;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  namespace {

    std::vector<bool> right_ideal(FiniteSemigroup const& S, Element a) {
      std::vector<bool> in(S.size(), false);
      in[a] = true;
      for (Element x = 0; x < S.size(); ++x) {
        in[S.product(a, x)] = true;
      }
      return in;
    }

    std::vector<bool> left_ideal(FiniteSemigroup const& S, Element a) {
      std::vector<bool> in(S.size(), false);
      in[a] = true;
      for (Element x = 0; x < S.size(); ++x) {
        in[S.product(x, a)] = true;
      }
      return in;
    }

  }  // namespace

  bool same_r(FiniteSemigroup const& S, Element a, Element b) {
    return right_ideal(S, a) == right_ideal(S, b);
  }

  bool same_l(FiniteSemigroup const& S, Element a, Element b) {
    return left_ideal(S, a) == left_ideal(S, b);
  }

  bool same_d(FiniteSemigroup const& S, Element a, Element b) {
    for (Element c = 0; c < S.size(); ++c) {
      if (same_r(S, a, c) && same_l(S, c, b)) {
        return true;
      }
    }
    return false;
  }

  namespace {

    std::vector<std::vector<Element>> inverse_lists(FiniteSemigroup const& S) {
      std::vector<std::vector<Element>> V(S.size());
      for (Element a = 0; a < S.size(); ++a) {
        V[a] = inverses(S, a);
      }
      return V;
    }

    // Most-constrained-first search for an injective choice p(a) ∈ V(a).
    bool extend_permutation(std::vector<std::vector<Element>> const& V,
                            std::vector<Element>&                    p,
                            std::vector<bool>&                       used,
                            std::size_t                              remaining) {
      if (remaining == 0) {
        return true;
      }
      std::size_t best = V.size(), best_options = SIZE_MAX;
      for (std::size_t a = 0; a < V.size(); ++a) {
        if (p[a] != kNoElement) {
          continue;
        }
        std::size_t options = 0;
        for (Element b : V[a]) {
          options += used[b] ? 0 : 1;
        }
        if (options < best_options) {
          best = a, best_options = options;
        }
      }
      if (best_options == 0) {
        return false;
      }
      for (Element b : V[best]) {
        if (used[b]) {
          continue;
        }
        p[best] = b, used[b] = true;
        if (extend_permutation(V, p, used, remaining - 1)) {
          return true;
        }
        p[best] = kNoElement, used[b] = false;
      }
      return false;
    }

    bool extend_involution(std::vector<std::vector<Element>> const& V,
                           std::vector<Element>&                    p,
                           std::size_t                              remaining) {
      if (remaining == 0) {
        return true;
      }
      std::size_t best = V.size(), best_options = SIZE_MAX;
      for (std::size_t a = 0; a < V.size(); ++a) {
        if (p[a] != kNoElement) {
          continue;
        }
        std::size_t options = 0;
        for (Element b : V[a]) {
          options += p[b] == kNoElement ? 1 : 0;
        }
        if (options < best_options) {
          best = a, best_options = options;
        }
      }
      if (best_options == 0) {
        return false;
      }
      Element const a = static_cast<Element>(best);
      for (Element b : V[a]) {
        if (p[b] != kNoElement) {
          continue;
        }
        p[a] = b, p[b] = a;
        if (extend_involution(V, p, remaining - (a == b ? 1 : 2))) {
          return true;
        }
        p[a] = kNoElement, p[b] = kNoElement;
      }
      return false;
    }

  }  // namespace

  std::optional<std::vector<Element>> permutation_matching(FiniteSemigroup const& S) {
    auto const           V = inverse_lists(S);
    std::vector<Element> p(S.size(), kNoElement);
    std::vector<bool>    used(S.size(), false);
    if (extend_permutation(V, p, used, S.size())) {
      return p;
    }
    return std::nullopt;
  }

  std::optional<std::vector<Element>> involution_matching(FiniteSemigroup const& S) {
    auto const           V = inverse_lists(S);
    std::vector<Element> p(S.size(), kNoElement);
    if (extend_involution(V, p, S.size())) {
      return p;
    }
    return std::nullopt;
  }

  ExpansionVerdict row_expansion(ZeroRectBand const& B) {
    std::size_t const m = B.rows(), n = B.cols();
    if (n % m != 0) {
      throw Error(ErrorCode::not_divisible, "column count is not a multiple of the row count");
    }
    if (std::max(m, n) > 20) {
      throw Error(ErrorCode::too_large, "exhaustive subset check limited to 20 rows and columns");
    }
    std::size_t const          a = n / m;
    std::vector<std::uint32_t> row_nbrs(m, 0), col_nbrs(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (B.idempotent(i, j)) {
          row_nbrs[i] |= std::uint32_t{1} << j;
          col_nbrs[j] |= std::uint32_t{1} << i;
        }
      }
    }
    ExpansionVerdict v;
    for (std::uint32_t T = 1; T < (std::uint32_t{1} << m) && v.rows_ok; ++T) {
      std::uint32_t N = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (T >> i & 1) {
          N |= row_nbrs[i];
        }
      }
      v.rows_ok = static_cast<std::size_t>(std::popcount(N))
                  >= a * static_cast<std::size_t>(std::popcount(T));
    }
    for (std::uint32_t U = 1; U < (std::uint32_t{1} << n) && v.columns_ok; ++U) {
      std::uint32_t N = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (U >> j & 1) {
          N |= col_nbrs[j];
        }
      }
      v.columns_ok = a * static_cast<std::size_t>(std::popcount(N))
                     >= static_cast<std::size_t>(std::popcount(U));
    }
    return v;
  }

}  // namespace permatch::oracle
