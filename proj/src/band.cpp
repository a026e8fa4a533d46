#include "permatch/band.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "permatch/graph.hpp"
#include "permatch/matching.hpp"

namespace permatch {

  ZeroRectBand::ZeroRectBand(std::size_t rows, std::size_t cols)
      : ZeroRectBand(rows, cols, std::vector<bool>(rows * cols, true)) {}

  ZeroRectBand::ZeroRectBand(std::size_t rows, std::size_t cols, std::vector<bool> pattern)
      : _rows(rows), _cols(cols), _pattern(std::move(pattern)) {
    if (rows == 0 || cols == 0) {
      throw Error(ErrorCode::parameter_out_of_range, "band needs m, n >= 1");
    }
    if (_pattern.size() != rows * cols) {
      throw Error(ErrorCode::parse, "idempotent pattern has the wrong size");
    }
  }

  bool ZeroRectBand::regular_pattern() const {
    std::vector<bool> row_hit(_rows, false), col_hit(_cols, false);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if (idempotent(i, j)) {
          row_hit[i] = col_hit[j] = true;
        }
      }
    }
    return std::find(row_hit.begin(), row_hit.end(), false) == row_hit.end()
           && std::find(col_hit.begin(), col_hit.end(), false) == col_hit.end();
  }

  void ZeroRectBand::require_regular_pattern() const {
    if (!regular_pattern()) {
      throw Error(ErrorCode::not_regular_pattern,
                  "every row and column of E needs an idempotent");
    }
  }

  std::optional<std::size_t> ZeroRectBand::aspect_ratio() const {
    if (_rows == 0 || _cols % _rows != 0) {
      return std::nullopt;
    }
    return _cols / _rows;
  }

  ZeroRectBand builtin_B7() {
    ZeroRectBand B(2, 3, std::vector<bool>(6, false));
    B.set_idempotent(0, 1, true);
    B.set_idempotent(0, 2, true);
    B.set_idempotent(1, 0, true);
    return B;
  }

  std::vector<std::string> band_labels(ZeroRectBand const& B) {
    std::vector<std::string> labels{"0"};
    for (std::size_t i = 0; i < B.rows(); ++i) {
      for (std::size_t j = 0; j < B.cols(); ++j) {
        labels.push_back("(" + std::to_string(i + 1) + ","
                         + std::to_string(j + 1) + ")");
      }
    }
    return labels;
  }

  FiniteSemigroup to_semigroup(ZeroRectBand const& B) {
    B.require_regular_pattern();
    std::size_t const    order = B.order();
    std::vector<Element> table(order * order, 0);
    for (Element x = 1; x < order; ++x) {
      for (Element y = 1; y < order; ++y) {
        if (B.idempotent(B.row_of(y), B.col_of(x))) {
          table[x * order + y] = B.element(B.row_of(x), B.col_of(y));
        }
      }
    }
    return FiniteSemigroup(order, std::move(table), band_labels(B));
  }

  bool band_mutual_inverses(ZeroRectBand const&                 B,
                            std::pair<std::size_t, std::size_t> x,
                            std::pair<std::size_t, std::size_t> y) {
    return B.idempotent(y.first, x.second) && B.idempotent(x.first, y.second);
  }

  namespace {
    std::size_t require_ratio(ZeroRectBand const& B) {
      auto const a = B.aspect_ratio();
      if (!a) {
        throw Error(ErrorCode::not_divisible,
                    std::to_string(B.rows()) + " does not divide "
                        + std::to_string(B.cols()));
      }
      return *a;
    }
  }  // namespace

  ExpansionResult row_expansion_check(ZeroRectBand const& B) {
    std::size_t const a = require_ratio(B);
    B.require_regular_pattern();
    std::size_t const m = B.rows(), n = B.cols();
    std::size_t const source = m + n, sink = m + n + 1;
    graph::FlowNetwork net(m + n + 2);
    for (std::size_t i = 0; i < m; ++i) {
      net.add_edge(source, i, static_cast<std::int64_t>(a));
      for (std::size_t j = 0; j < n; ++j) {
        if (B.idempotent(i, j)) {
          net.add_edge(i, m + j, static_cast<std::int64_t>(n));
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      net.add_edge(m + j, sink, 1);
    }
    ExpansionResult result;
    if (net.max_flow(source, sink) == static_cast<std::int64_t>(n)) {
      return result;
    }
    result.holds    = false;
    auto const side = net.source_side(source);
    for (std::size_t i = 0; i < m; ++i) {
      if (side[i]) {
        result.violating_rows.push_back(i);
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      bool adjacent = false;
      for (std::size_t i : result.violating_rows) {
        adjacent = adjacent || B.idempotent(i, j);
      }
      if (adjacent) {
        result.adjacent_columns.push_back(j);
      }
    }
    return result;
  }

  namespace {

    class SlotAssigner {
     public:
      SlotAssigner(ZeroRectBand const& B, std::size_t copies)
          : _B(B),
            _copies(copies),
            _owner(B.cols(), kUnowned),
            _visited(B.cols(), false) {}

      bool run() {
        std::size_t const m = _B.rows();
        for (std::size_t slot = 0; slot < m * _copies; ++slot) {
          std::fill(_visited.begin(), _visited.end(), false);
          if (!place(slot)) {
            return false;
          }
        }
        return true;
      }

      // slot t*m + i stands for copy t of row i
      std::size_t owner_row(std::size_t col) const {
        return _owner[col] % _B.rows();
      }

     private:
      static constexpr std::size_t kUnowned = static_cast<std::size_t>(-1);

      bool place(std::size_t slot) {
        std::size_t const row = slot % _B.rows();
        for (std::size_t j = 0; j < _B.cols(); ++j) {
          if (_B.idempotent(row, j) && _owner[j] == kUnowned) {
            _owner[j] = slot;
            return true;
          }
        }
        for (std::size_t j = 0; j < _B.cols(); ++j) {
          if (_B.idempotent(row, j) && !_visited[j]) {
            _visited[j] = true;
            if (place(_owner[j])) {
              _owner[j] = slot;
              return true;
            }
          }
        }
        return false;
      }

      ZeroRectBand const&      _B;
      std::size_t              _copies;
      std::vector<std::size_t> _owner;
      std::vector<bool>        _visited;
    };

  }  // namespace

  std::optional<HaremFamily> harem_functions(ZeroRectBand const& B) {
    std::size_t const a = require_ratio(B);
    SlotAssigner      assigner(B, a);
    if (!assigner.run()) {
      return std::nullopt;
    }
    std::vector<std::vector<std::size_t>> per_row(B.rows());
    for (std::size_t j = 0; j < B.cols(); ++j) {
      per_row[assigner.owner_row(j)].push_back(j);  // increasing j
    }
    HaremFamily family;
    family.maps.assign(a, std::vector<std::size_t>(B.rows()));
    for (std::size_t i = 0; i < B.rows(); ++i) {
      for (std::size_t t = 0; t < a; ++t) {
        family.maps[t][i] = per_row[i][t];
      }
    }
    return family;
  }

  std::optional<HaremInvolution> harem_involution(ZeroRectBand const& B) {
    auto harem = harem_functions(B);
    if (!harem) {
      return std::nullopt;
    }
    std::size_t const m = B.rows();
    HaremInvolution      result;
    result.column_label.assign(B.cols(), 0);
    // inverse_of[j] = (t, r) with pi_t(r) = j
    std::vector<std::pair<std::size_t, std::size_t>> inverse_of(B.cols());
    for (std::size_t t = 0; t < harem->count(); ++t) {
      for (std::size_t r = 0; r < m; ++r) {
        std::size_t const j    = harem->maps[t][r];
        inverse_of[j]          = {t, r};
        result.column_label[j] = t * m + r;
      }
    }
    result.involution.image.assign(B.order(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < B.cols(); ++j) {
        auto const [t, r] = inverse_of[j];
        result.involution.image[B.element(i, j)]
            = B.element(r, harem->maps[t][i]);
      }
    }
    result.harem = std::move(*harem);
    return result;
  }

  SimilarityResult similarity_check(ZeroRectBand const& B) {
    FiniteSemigroup const S = to_semigroup(B);
    if (!structure_report(S).orthodox) {
      throw Error(ErrorCode::not_orthodox, "idempotents are not closed");
    }
    std::size_t const m = B.rows(), n = B.cols();
    // component labels over rows 0..m-1 and columns m..m+n-1
    std::vector<std::size_t> comp(m + n, SIZE_MAX);
    SimilarityResult         result;
    for (std::size_t start = 0; start < m; ++start) {
      if (comp[start] != SIZE_MAX) {
        continue;
      }
      std::size_t const        id = result.blocks.size();
      std::vector<std::size_t> stack{start};
      comp[start]          = id;
      std::size_t rows = 0, cols = 0;
      while (!stack.empty()) {
        std::size_t const v = stack.back();
        stack.pop_back();
        (v < m ? rows : cols) += 1;
        for (std::size_t w = 0; w < (v < m ? n : m); ++w) {
          std::size_t const other = v < m ? m + w : w;
          bool const edge = v < m ? B.idempotent(v, w) : B.idempotent(w, v - m);
          if (edge && comp[other] == SIZE_MAX) {
            comp[other] = id;
            stack.push_back(other);
          }
        }
      }
      result.blocks.emplace_back(rows, cols);
    }
    result.similar = std::all_of(
        result.blocks.begin(), result.blocks.end(), [&](auto const& blk) {
          return blk.second * result.blocks.front().first
                 == result.blocks.front().second * blk.first;
        });
    result.matching_exists = find_permutation_matching(S).has_value();
    return result;
  }

  ZeroRectBand random_band(std::size_t   rows,
                           std::size_t   cols,
                           double        density,
                           std::uint64_t seed) {
    if (rows == 0 || cols == 0 || !(density > 0.0 && density <= 1.0)) {
      throw Error(ErrorCode::parameter_out_of_range,
                  "random_band needs m, n >= 1 and 0 < density <= 1");
    }
    std::mt19937_64 rng(seed);
    for (;;) {
      std::vector<bool> pattern(rows * cols);
      for (std::size_t k = 0; k < pattern.size(); ++k) {
        double const u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        pattern[k]     = u < density;
      }
      ZeroRectBand B(rows, cols, std::move(pattern));
      if (B.regular_pattern()) {
        return B;
      }
    }
  }

  std::vector<ZeroRectBand> all_regular_bands(std::size_t rows, std::size_t cols) {
    std::size_t const cells = rows * cols;
    if (rows == 0 || cols == 0 || cells > 24) {
      throw Error(ErrorCode::parameter_out_of_range,
                  "exhaustive enumeration needs 1 <= m*n <= 24");
    }
    std::vector<ZeroRectBand> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
      std::vector<bool> pattern(cells);
      for (std::size_t k = 0; k < cells; ++k) {
        pattern[k] = (bits >> k) & 1;
      }
      ZeroRectBand B(rows, cols, std::move(pattern));
      if (B.regular_pattern()) {
        out.push_back(std::move(B));
      }
    }
    return out;
  }

}  // namespace permatch
