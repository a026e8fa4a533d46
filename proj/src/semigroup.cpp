#include "permatch/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "permatch/green.hpp"
#include "permatch/kernels.hpp"

namespace permatch {

  FiniteSemigroup::FiniteSemigroup(std::size_t              order,
                                   std::vector<Element>     table,
                                   std::vector<std::string> labels)
      : _order(order), _table(std::move(table)), _labels(std::move(labels)) {
    if (_order == 0) {
      throw Error(ErrorCode::parse, "a semigroup needs at least one element");
    }
    if (_table.size() != _order * _order) {
      std::ostringstream os;
      os << "expected " << _order * _order << " table entries, got "
         << _table.size();
      throw Error(ErrorCode::parse, os.str());
    }
    if (!_labels.empty() && _labels.size() != _order) {
      throw Error(ErrorCode::parse, "label count does not match the order");
    }
  }

  std::vector<Element> FiniteSemigroup::column(Element a) const {
    std::vector<Element> col(_order);
    for (std::size_t b = 0; b < _order; ++b) {
      col[b] = _table[b * _order + a];
    }
    return col;
  }

  std::string FiniteSemigroup::label(Element a) const {
    return _labels.empty() ? std::to_string(a) : _labels[a];
  }

  std::string ValidationError::message() const {
    std::ostringstream os;
    if (code == ErrorCode::entry_out_of_range) {
      os << "table entry at (" << a << ", " << b << ") is out of range";
    } else {
      os << "(" << a << "*" << b << ")*" << c << " != " << a << "*(" << b
         << "*" << c << ")";
    }
    return os.str();
  }

  std::vector<Element> greedy_generators(FiniteSemigroup const& S) {
    std::size_t const    n = S.size();
    std::vector<size_t>  right_ideal_size(n, 0);
    std::vector<Element> stamp(n, kNoElement);
    for (Element a = 0; a < n; ++a) {
      for (Element x : S.row(a)) {
        if (stamp[x] != a) {
          stamp[x] = a;
          ++right_ideal_size[a];
        }
      }
    }
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
      return right_ideal_size[x] > right_ideal_size[y];
    });

    std::vector<char>    in(n, 0);
    std::vector<Element> closure;
    std::vector<Element> gens;
    closure.reserve(n);
    for (Element x : order) {
      if (in[x]) {
        continue;
      }
      gens.push_back(x);
      std::size_t const old = closure.size();
      auto              add = [&](Element z) {
        if (!in[z]) {
          in[z] = 1;
          closure.push_back(z);
        }
      };
      add(x);
      for (std::size_t k = 0; k < old; ++k) {
        add(S.product(closure[k], x));
      }
      for (std::size_t k = old; k < closure.size(); ++k) {
        for (Element g : gens) {
          add(S.product(closure[k], g));
        }
      }
    }
    return gens;
  }

  std::optional<ValidationError> validate(FiniteSemigroup const& S) {
    std::size_t const n     = S.size();
    auto const        table = S.table();
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (table[k] >= n) {
        return ValidationError{ErrorCode::entry_out_of_range,
                               static_cast<Element>(k / n),
                               static_cast<Element>(k % n)};
      }
    }
    for (Element g : greedy_generators(S)) {
      std::vector<Element> const col = S.column(g);
      for (Element a = 0; a < n; ++a) {
        std::size_t const b = kernels::compose_mismatch(S.row(a), col);
        if (b != n) {
          return ValidationError{
              ErrorCode::not_associative, a, static_cast<Element>(b), g};
        }
      }
    }
    return std::nullopt;
  }

  void require_valid(FiniteSemigroup const& S) {
    if (auto err = validate(S)) {
      throw Error(err->code, err->message());
    }
  }

  FiniteSemigroup make_semigroup(std::size_t              order,
                                 std::vector<Element>     table,
                                 std::vector<std::string> labels) {
    FiniteSemigroup S(order, std::move(table), std::move(labels));
    require_valid(S);
    return S;
  }

  bool mutually_inverse(FiniteSemigroup const& S, Element a, Element b) {
    return S.product(a, b, a) == a && S.product(b, a, b) == b;
  }

  namespace {
    std::vector<Element> mask_to_set(std::span<std::uint8_t const> mask) {
      std::vector<Element> out;
      for (std::size_t b = 0; b < mask.size(); ++b) {
        if (mask[b]) {
          out.push_back(static_cast<Element>(b));
        }
      }
      return out;
    }
  }  // namespace

  std::vector<Element> inverses_of(FiniteSemigroup const& S, Element a) {
    std::vector<std::uint8_t> mask(S.size());
    kernels::inverse_mask(S.table(), S.size(), a, S.column(a), mask);
    return mask_to_set(mask);
  }

  std::vector<std::vector<Element>> all_inverses(FiniteSemigroup const& S) {
    std::size_t const                 n = S.size();
    std::vector<std::vector<Element>> result(n);
    std::vector<std::uint8_t>         mask(n);
    for (Element a = 0; a < n; ++a) {
      kernels::inverse_mask(S.table(), n, a, S.column(a), mask);
      result[a] = mask_to_set(mask);
    }
    return result;
  }

  RegularityResult regularity_check(FiniteSemigroup const& S) {
    std::size_t const         n = S.size();
    std::vector<std::uint8_t> mask(n);
    for (Element a = 0; a < n; ++a) {
      kernels::sandwich_mask(S.row(a), S.column(a), a, mask);
      if (std::find(mask.begin(), mask.end(), 1) == mask.end()) {
        return {false, a};
      }
    }
    return {};
  }

  void require_regular(FiniteSemigroup const& S) {
    auto const r = regularity_check(S);
    if (!r.regular) {
      throw Error(ErrorCode::not_regular,
                  "element " + S.label(*r.witness) + " has no inverse");
    }
  }

  std::vector<Element> idempotents(FiniteSemigroup const& S) {
    std::vector<Element> out;
    for (Element a = 0; a < S.size(); ++a) {
      if (S.is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<Element> generated_subsemigroup(FiniteSemigroup const&   S,
                                              std::span<Element const> gens) {
    std::vector<char>    in(S.size(), 0);
    std::vector<Element> members;
    for (Element g : gens) {
      if (!in[g]) {
        in[g] = 1;
        members.push_back(g);
      }
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (Element g : gens) {
        Element const z = S.product(members[k], g);
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  StructureReport structure_report(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    StructureReport   report;

    auto const invs   = all_inverses(S);
    report.regular    = std::all_of(
        invs.begin(), invs.end(), [](auto const& v) { return !v.empty(); });
    report.inverse = report.regular
                     && std::all_of(invs.begin(), invs.end(), [](auto const& v) {
                          return v.size() == 1;
                        });

    EggBox const eggs      = green_relations(S);
    report.d_class_count   = eggs.d_classes.size();
    report.union_of_groups = true;
    for (Element a = 0; a < n; ++a) {
      if (!eggs.in_group_h(a)) {
        report.union_of_groups = false;
        break;
      }
    }

    auto const E            = idempotents(S);
    report.idempotent_count = E.size();
    bool closed             = true;
    for (Element e : E) {
      for (Element f : E) {
        if (!S.is_idempotent(S.product(e, f))) {
          closed = false;
          break;
        }
      }
      if (!closed) {
        break;
      }
    }
    report.orthodox = report.regular && closed;

    if (report.regular) {
      auto const generated = generated_subsemigroup(S, E);
      report.e_solid
          = std::all_of(generated.begin(), generated.end(), [&](Element x) {
              return eggs.in_group_h(x);
            });
    }

    std::vector<std::uint8_t> mask(n);
    report.rectangular_band  = true;
    report.satisfies_x_eq_x3 = true;
    for (Element x = 0; x < n; ++x) {
      if (report.rectangular_band) {
        kernels::sandwich_mask(S.row(x), S.column(x), x, mask);
        report.rectangular_band
            = std::find(mask.begin(), mask.end(), 0) == mask.end();
      }
      if (S.product(x, x, x) != x) {
        report.satisfies_x_eq_x3 = false;
      }
    }
    return report;
  }

}  // namespace permatch
