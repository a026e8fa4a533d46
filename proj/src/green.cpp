#include "permatch/green.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <numeric>

namespace permatch {

  namespace {

    // Partitions elements by equality of the bitsets in `bits` (one row of
    // `words` 64-bit words per element). Class ids follow least elements.
    std::vector<std::size_t> classes_by_bitset(std::vector<std::uint64_t> const& bits,
                                               std::size_t                       n,
                                               std::size_t                       words,
                                               std::size_t&                      count) {
      auto const key = [&](Element a) { return bits.data() + a * words; };
      std::vector<Element> order(n);
      std::iota(order.begin(), order.end(), Element{0});
      std::sort(order.begin(), order.end(), [&](Element x, Element y) {
        int const c = std::memcmp(key(x), key(y), words * sizeof(std::uint64_t));
        return c < 0 || (c == 0 && x < y);
      });
      std::vector<std::size_t> run(n);
      std::size_t              runs = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k > 0
            && std::memcmp(key(order[k - 1]),
                           key(order[k]),
                           words * sizeof(std::uint64_t))
                   != 0) {
          ++runs;
        }
        run[order[k]] = runs;
      }
      std::vector<std::size_t> renumber(runs + 1, SIZE_MAX);
      std::vector<std::size_t> result(n);
      count = 0;
      for (Element a = 0; a < n; ++a) {
        if (renumber[run[a]] == SIZE_MAX) {
          renumber[run[a]] = count++;
        }
        result[a] = renumber[run[a]];
      }
      return result;
    }

    struct DisjointSets {
      std::vector<std::size_t> parent;
      explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
        }
      }
    };

  }  // namespace

  bool DClass::regular() const {
    return std::find(group_h.begin(), group_h.end(), true) != group_h.end();
  }

  EggBox green_relations(FiniteSemigroup const& S) {
    std::size_t const n     = S.size();
    std::size_t const words = (n + 63) / 64;
    EggBox            eggs;

    std::vector<std::uint64_t> bits(n * words);
    auto set = [&](Element a, Element x) {
      bits[a * words + x / 64] |= std::uint64_t{1} << (x % 64);
    };
    for (Element a = 0; a < n; ++a) {
      set(a, a);
      for (Element x : S.row(a)) {
        set(a, x);
      }
    }
    eggs.r_of = classes_by_bitset(bits, n, words, eggs.r_class_count);

    std::fill(bits.begin(), bits.end(), 0);
    for (Element b = 0; b < n; ++b) {
      auto const row = S.row(b);
      for (Element a = 0; a < n; ++a) {
        set(a, row[a]);  // b*a ∈ Sa
      }
    }
    for (Element a = 0; a < n; ++a) {
      set(a, a);
    }
    eggs.l_of = classes_by_bitset(bits, n, words, eggs.l_class_count);

    DisjointSets joins(eggs.r_class_count + eggs.l_class_count);
    for (Element a = 0; a < n; ++a) {
      joins.unite(eggs.r_of[a], eggs.r_class_count + eggs.l_of[a]);
    }

    eggs.d_of.assign(n, 0);
    eggs.row_of.assign(n, 0);
    eggs.col_of.assign(n, 0);
    std::vector<std::size_t> d_of_root(eggs.r_class_count + eggs.l_class_count,
                                       SIZE_MAX);
    std::vector<std::size_t> row_of_r(eggs.r_class_count, SIZE_MAX);
    std::vector<std::size_t> col_of_l(eggs.l_class_count, SIZE_MAX);
    for (Element a = 0; a < n; ++a) {
      std::size_t const root = joins.find(eggs.r_of[a]);
      if (d_of_root[root] == SIZE_MAX) {
        d_of_root[root] = eggs.d_classes.size();
        eggs.d_classes.emplace_back();
      }
      std::size_t const d  = d_of_root[root];
      DClass&           dc = eggs.d_classes[d];
      eggs.d_of[a]         = d;
      dc.elements.push_back(a);
      if (row_of_r[eggs.r_of[a]] == SIZE_MAX) {
        row_of_r[eggs.r_of[a]] = dc.r_classes.size();
        dc.r_classes.push_back(eggs.r_of[a]);
      }
      if (col_of_l[eggs.l_of[a]] == SIZE_MAX) {
        col_of_l[eggs.l_of[a]] = dc.l_classes.size();
        dc.l_classes.push_back(eggs.l_of[a]);
      }
      eggs.row_of[a] = row_of_r[eggs.r_of[a]];
      eggs.col_of[a] = col_of_l[eggs.l_of[a]];
    }

    for (DClass& dc : eggs.d_classes) {
      dc.cells.assign(dc.rows() * dc.cols(), {});
      dc.group_h.assign(dc.rows() * dc.cols(), false);
      for (Element a : dc.elements) {
        std::size_t const k = eggs.row_of[a] * dc.cols() + eggs.col_of[a];
        dc.cells[k].push_back(a);
        if (S.is_idempotent(a)) {
          dc.group_h[k] = true;
        }
      }
    }
    return eggs;
  }

  std::vector<PrincipalFactor> principal_factors(FiniteSemigroup const& S,
                                                 EggBox const&          eggs) {
    require_regular(S);
    std::size_t const            n = S.size();
    std::vector<PrincipalFactor> factors;
    factors.reserve(eggs.d_classes.size());

    for (std::size_t d = 0; d < eggs.d_classes.size(); ++d) {
      auto const& members = eggs.d_classes[d].elements;

      bool is_ideal = true;
      for (Element x : members) {
        for (Element s = 0; s < n && is_ideal; ++s) {
          is_ideal = eggs.d_of[S.product(s, x)] == d
                     && eggs.d_of[S.product(x, s)] == d;
        }
        if (!is_ideal) {
          break;
        }
      }

      PrincipalFactor F;
      F.source_d_class = d;
      F.zero_adjoined  = !is_ideal;
      F.from_source.assign(n, kNoElement);
      std::vector<std::string> labels;
      if (F.zero_adjoined) {
        F.to_source.push_back(kNoElement);
        labels.emplace_back("0");
      }
      for (Element x : members) {
        F.from_source[x] = static_cast<Element>(F.to_source.size());
        F.to_source.push_back(x);
        labels.push_back(S.label(x));
      }

      std::size_t const    m = F.to_source.size();
      std::vector<Element> table(m * m, 0);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          Element const x = F.to_source[i], y = F.to_source[j];
          if (x == kNoElement || y == kNoElement) {
            continue;  // zero row/column
          }
          Element const p = S.product(x, y);
          table[i * m + j] = eggs.d_of[p] == d ? F.from_source[p] : 0;
        }
      }
      F.semigroup = FiniteSemigroup(m, std::move(table), std::move(labels));
      factors.push_back(std::move(F));
    }
    return factors;
  }

  std::vector<PrincipalFactor> principal_factors(FiniteSemigroup const& S) {
    return principal_factors(S, green_relations(S));
  }

  HCellGrid h_cell_grid(PrincipalFactor const& F) {
    EggBox const eggs = green_relations(F.semigroup);
    std::size_t  main = SIZE_MAX;
    for (std::size_t d = 0; d < eggs.d_classes.size(); ++d) {
      auto const& dc = eggs.d_classes[d];
      if (F.zero_adjoined && dc.elements.size() == 1
          && dc.elements.front() == F.zero()) {
        continue;
      }
      if (main != SIZE_MAX) {
        throw Error(ErrorCode::not_zero_simple,
                    "factor has more than one non-zero D-class");
      }
      main = d;
    }
    if (main == SIZE_MAX || !eggs.d_classes[main].regular()) {
      throw Error(ErrorCode::not_zero_simple,
                  "factor has no regular non-zero D-class");
    }
    DClass const& dc = eggs.d_classes[main];
    HCellGrid     grid;
    grid.band  = ZeroRectBand(dc.rows(), dc.cols(), dc.group_h);
    grid.cells = dc.cells;
    return grid;
  }

  ZeroRectBand h_quotient(PrincipalFactor const& F) {
    return h_cell_grid(F).band;
  }

}  // namespace permatch
