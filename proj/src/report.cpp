#include "permatch/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "permatch/error.hpp"
#include "permatch/green.hpp"
#include "permatch/oracle.hpp"
#include "permatch/transformation.hpp"

namespace permatch::report {

  json make(std::string const& command, std::string const& input_digest, std::uint64_t seed) {
    json r;
    r["schema"]       = kSchema;
    r["command"]      = command;
    r["input_digest"] = input_digest;
    r["seed"]         = seed;
    r["verdicts"]     = json::object();
    r["witnesses"]    = json::object();
    return r;
  }

  json elements(FiniteSemigroup const& S, std::vector<Element> const& xs) {
    json labels = json::array();
    for (Element x : xs) {
      labels.push_back(S.label(x));
    }
    return {{"elements", xs}, {"labels", labels}};
  }

  json matching(FiniteSemigroup const& S, std::vector<Element> const& image) {
    json pairs = json::array();
    for (Element a = 0; a < image.size(); ++a) {
      pairs.push_back({S.label(a), S.label(image[a])});
    }
    return {{"image", image}, {"labels", pairs}};
  }

  json violator(FiniteSemigroup const& S, HallViolator const& v) {
    return {{"subset", elements(S, v.subset)}, {"image", elements(S, v.image)}};
  }

  json band(ZeroRectBand const& B) {
    json rows = json::array();
    for (std::size_t i = 0; i < B.rows(); ++i) {
      std::string row;
      for (std::size_t j = 0; j < B.cols(); ++j) {
        row += B.idempotent(i, j) ? '1' : '0';
      }
      rows.push_back(row);
    }
    return {{"rows", B.rows()}, {"cols", B.cols()}, {"pattern", rows}};
  }

  json harem(HaremFamily const& H) {
    return {{"maps", H.maps}};
  }

  json instance(ColourInstance const& inst) {
    json balls = json::array();
    for (Ball const& b : inst.balls) {
      balls.push_back({b.girl, b.colour});
    }
    json j = {{"girls", inst.girls}, {"colours", inst.colours}, {"balls", balls}};
    if (inst.provenance) {
      json prov = json::array();
      for (auto const& [a, alpha] : *inst.provenance) {
        prov.push_back({a, alpha});
      }
      j["provenance"] = prov;
    }
    return j;
  }

  json plan(ExchangePlan const& p) {
    json ex = json::array();
    for (auto const& [i, j] : p.exchanges()) {
      ex.push_back({i, j});
    }
    return {{"exchanges", ex}};
  }

  ZeroRectBand band_from(json const& j) {
    ZeroRectBand B(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    auto const&  rows = j.at("pattern");
    if (rows.size() != B.rows()) {
      throw Error(ErrorCode::parse, "band pattern has the wrong number of rows");
    }
    for (std::size_t i = 0; i < B.rows(); ++i) {
      auto const row = rows[i].get<std::string>();
      if (row.size() != B.cols()) {
        throw Error(ErrorCode::parse, "band pattern row has the wrong length");
      }
      for (std::size_t c = 0; c < B.cols(); ++c) {
        B.set_idempotent(i, c, row[c] == '1');
      }
    }
    return B;
  }

  std::vector<Element> image_from(json const& j) {
    return j.at("image").get<std::vector<Element>>();
  }

  ColourInstance instance_from(json const& j) {
    ColourInstance inst;
    inst.girls   = j.at("girls").get<std::size_t>();
    inst.colours = j.at("colours").get<std::size_t>();
    for (auto const& b : j.at("balls")) {
      inst.balls.push_back({b.at(0).get<std::size_t>(), b.at(1).get<std::size_t>()});
    }
    if (j.contains("provenance")) {
      inst.provenance.emplace();
      for (auto const& p : j["provenance"]) {
        inst.provenance->emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
      }
    }
    return inst;
  }

  ExchangePlan plan_from(json const& j, std::size_t balls) {
    ExchangePlan p = ExchangePlan::vacuous(balls);
    for (auto const& e : j.at("exchanges")) {
      auto const x = e.at(0).get<std::size_t>(), y = e.at(1).get<std::size_t>();
      if (x >= balls || y >= balls) {
        throw Error(ErrorCode::index_out_of_range, "ball index out of range in plan");
      }
      p.partner[x] = y;
      p.partner[y] = x;
    }
    return p;
  }

  namespace {

    class Checker {
     public:
      explicit Checker(VerifyOutcome& out) : _out(out) {}

      template <typename F>
      void check(std::string const& what, F&& f) {
        ++_out.checked;
        try {
          if (!f()) {
            _out.failures.push_back(what + ": does not verify");
          }
        } catch (std::exception const& e) {
          _out.failures.push_back(what + ": " + e.what());
        }
      }

     private:
      VerifyOutcome& _out;
    };

    bool violator_holds(FiniteSemigroup const& S, json const& v) {
      auto const       subset = v.at("subset").at("elements").get<std::vector<Element>>();
      auto const       image  = v.at("image").at("elements").get<std::vector<Element>>();
      std::set<Element> nbrs;
      for (Element a : subset) {
        if (a >= S.size()) {
          return false;
        }
        for (Element b : inverses_of(S, a)) {
          nbrs.insert(b);
        }
      }
      return std::vector<Element>(nbrs.begin(), nbrs.end()) == image
             && image.size() < std::set<Element>(subset.begin(), subset.end()).size();
    }

    bool harem_holds(ZeroRectBand const& B, json const& h) {
      auto const maps = h.at("maps").get<std::vector<std::vector<std::size_t>>>();
      if (B.cols() % B.rows() != 0 || maps.size() != B.cols() / B.rows()) {
        return false;
      }
      std::vector<bool> hit(B.cols(), false);
      for (auto const& pi : maps) {
        if (pi.size() != B.rows()) {
          return false;
        }
        for (std::size_t i = 0; i < B.rows(); ++i) {
          if (pi[i] >= B.cols() || hit[pi[i]] || !B.idempotent(i, pi[i])) {
            return false;
          }
          hit[pi[i]] = true;
        }
      }
      return true;
    }

    // Witnesses that refer to a semigroup S (and its band, when it has one).
    void check_semigroup_witnesses(Checker&                           c,
                                   json const&                        w,
                                   FiniteSemigroup const&             S,
                                   std::optional<ZeroRectBand> const& B,
                                   std::string const&                 where) {
      if (w.contains("permutation_matching")) {
        c.check(where + "permutation_matching", [&] {
          return verify_permutation_matching(S, image_from(w["permutation_matching"]));
        });
      }
      if (w.contains("h_preserving_matching")) {
        c.check(where + "h_preserving_matching", [&] {
          auto const p = image_from(w["h_preserving_matching"]);
          return verify_permutation_matching(S, p) && is_h_preserving(S, p);
        });
      }
      if (w.contains("involution_matching")) {
        c.check(where + "involution_matching", [&] {
          return verify_involution_matching(S, image_from(w["involution_matching"]));
        });
      }
      if (w.contains("hall_violator")) {
        c.check(where + "hall_violator", [&] { return violator_holds(S, w["hall_violator"]); });
      }
      if (w.contains("factors")) {
        for (auto const& f : w["factors"]) {
          if (!f.contains("quotient_matching")) {
            continue;
          }
          c.check(where + "factor quotient matching", [&] {
            auto const Q = band_from(f.at("quotient"));
            return verify_permutation_matching(to_semigroup(Q), image_from(f["quotient_matching"]));
          });
        }
      }
      if (B && w.contains("harem")) {
        c.check(where + "harem", [&] { return harem_holds(*B, w["harem"]); });
      }
      if (w.contains("colour")) {
        auto const& col = w["colour"];
        c.check(where + "colour plan", [&] {
          auto const inst = instance_from(col.at("instance"));
          return verify_plan(inst, plan_from(col.at("plan"), inst.balls.size()));
        });
        if (col.contains("involution_matching")) {
          c.check(where + "colour involution", [&] {
            return verify_involution_matching(S, image_from(col["involution_matching"]));
          });
        }
      }
    }

  }  // namespace

  VerifyOutcome verify(json const& r, std::string const& input_text) {
    VerifyOutcome out;
    Checker       c(out);
    c.check("schema", [&] { return r.value("schema", "") == kSchema; });
    if (!out.ok()) {
      return out;
    }
    std::string const command = r.at("command").get<std::string>();
    json const&       w       = r.at("witnesses");

    if (command == "search-q4") {
      for (auto const& s : w.value("separators", json::array())) {
        auto const B = band_from(s.at("band"));
        auto const S = to_semigroup(B);
        check_semigroup_witnesses(c, s, S, B, "separator ");
        if (S.size() <= 16) {
          c.check("separator has no involution matching",
                  [&] { return !oracle::involution_matching(S).has_value(); });
        }
      }
      return out;
    }
    if (command == "search-on") {
      for (auto const& entry : w.value("instances", json::array())) {
        auto const family = parse_family(entry.at("family").get<std::string>());
        if (!family) {
          out.failures.push_back("unknown family in search report");
          continue;
        }
        auto const M = enumerate(*family, entry.at("n").get<std::size_t>());
        check_semigroup_witnesses(c, entry, M.semigroup, std::nullopt,
                                  entry["family"].get<std::string>() + " ");
      }
      return out;
    }

    c.check("input digest", [&] { return io::digest(input_text) == r.at("input_digest"); });
    if (command == "colour solve") {
      c.check("colour plan", [&] {
        std::istringstream in(input_text);
        auto const         inst = io::read_instance(in);
        if (!w.contains("plan")) {
          return true;
        }
        return verify_plan(inst, plan_from(w["plan"], inst.balls.size()));
      });
      return out;
    }
    auto                        input = io::read_semigroup_input(input_text);
    std::optional<ZeroRectBand> B;
    if (auto const* b = std::get_if<ZeroRectBand>(&input)) {
      B = *b;
    }
    FiniteSemigroup const S = B ? to_semigroup(*B) : std::get<FiniteSemigroup>(input);
    check_semigroup_witnesses(c, w, S, B, "");
    return out;
  }

}  // namespace permatch::report
