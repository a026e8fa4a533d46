#include "permatch/commands.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "permatch/band.hpp"
#include "permatch/error.hpp"
#include "permatch/graph.hpp"
#include "permatch/green.hpp"
#include "permatch/io.hpp"
#include "permatch/matching.hpp"
#include "permatch/oracle.hpp"

namespace permatch::cli {

  using report::json;

  namespace {

    using Clock = std::chrono::steady_clock;

    struct Input {
      FiniteSemigroup             semigroup;
      std::optional<ZeroRectBand> band;
    };

    // Parses, range-checks and tests associativity; regularity is left to
    // the caller.
    Input load(std::string const& text) {
      auto parsed = io::read_semigroup_input(text);
      if (auto* B = std::get_if<ZeroRectBand>(&parsed)) {
        FiniteSemigroup S = to_semigroup(*B);
        return {std::move(S), *B};
      }
      FiniteSemigroup& S = std::get<FiniteSemigroup>(parsed);
      require_valid(S);
      return {std::move(S), std::nullopt};
    }

    ZeroRectBand load_band(std::string const& text) {
      std::istringstream in(text);
      return io::read_band(in);
    }

    void finish(Outcome& out, Clock::time_point start, Options const& opts) {
      if (opts.timing) {
        out.report["timing_ms"]
            = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      }
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    // Whether the perfect matching p is the only one: it is unless removing
    // some edge a -> p[a] still leaves a perfect matching.
    bool unique_matching(InverseGraph const& G, std::vector<Element> const& p) {
      graph::Bipartite g{G.size(), G.size(), {}};
      for (Element a = 0; a < G.size(); ++a) {
        auto const nbrs = G.inverses(a);
        g.adj.emplace_back(nbrs.begin(), nbrs.end());
      }
      for (Element a = 0; a < G.size(); ++a) {
        if (G.degree(a) < 2) {
          continue;
        }
        auto  saved = g.adj[a];
        auto& nbrs  = g.adj[a];
        nbrs.erase(std::find(nbrs.begin(), nbrs.end(), p[a]));
        bool const other = graph::hopcroft_karp(g).perfect();
        g.adj[a]         = std::move(saved);
        if (other) {
          return false;
        }
      }
      return true;
    }

    void oracle_cross_check(FiniteSemigroup const& S,
                            bool                   has_matching,
                            std::optional<bool>    has_involution,
                            json&                  verdicts) {
      if (S.size() > kOracleMaxOrder) {
        verdicts["oracle"] = "skipped: order above " + std::to_string(kOracleMaxOrder);
        return;
      }
      bool const pm = oracle::permutation_matching(S).has_value();
      json       o  = {{"permutation_matching", pm}};
      if (pm != has_matching) {
        throw Error(ErrorCode::equivalence_violation,
                    "backtracking oracle disagrees on permutation matching");
      }
      if (has_involution) {
        bool const im           = oracle::involution_matching(S).has_value();
        o["involution_matching"] = im;
        if (im != *has_involution) {
          throw Error(ErrorCode::equivalence_violation,
                      "backtracking oracle disagrees on involution matching");
        }
      }
      verdicts["oracle"] = o;
    }

    json band_verdicts(ZeroRectBand const& B, FiniteSemigroup const& S) {
      json v = {{"rows", B.rows()}, {"cols", B.cols()}, {"regular_pattern", B.regular_pattern()}};
      auto const structure = structure_report(S);
      if (structure.orthodox) {
        auto const sim = similarity_check(B);
        json       blocks = json::array();
        for (auto const& [r, c] : sim.blocks) {
          blocks.push_back({r, c});
        }
        v["similarity"] = {{"similar", sim.similar}, {"blocks", blocks}};
      }
      if (B.aspect_ratio()) {
        auto const ex = row_expansion_check(B);
        v["row_expansion"] = {{"holds", ex.holds}};
        if (!ex.holds) {
          v["row_expansion"]["violating_rows"]   = ex.violating_rows;
          v["row_expansion"]["adjacent_columns"] = ex.adjacent_columns;
        }
      }
      return v;
    }

    json structure_json(StructureReport const& s) {
      return {{"regular", s.regular},
              {"inverse", s.inverse},
              {"union_of_groups", s.union_of_groups},
              {"orthodox", s.orthodox},
              {"e_solid", s.e_solid},
              {"rectangular_band", s.rectangular_band},
              {"satisfies_x_eq_x3", s.satisfies_x_eq_x3},
              {"idempotents", s.idempotent_count},
              {"d_classes", s.d_class_count}};
    }

  }  // namespace

  Outcome analyze(std::string const& text, Options const& opts) {
    auto const start = Clock::now();
    Input      in    = load(text);
    auto const& S    = in.semigroup;
    require_regular(S);

    Outcome out;
    out.report      = report::make("analyze", io::digest(text), opts.seed);
    json& v         = out.report["verdicts"];
    json& w         = out.report["witnesses"];
    auto const st   = structure_report(S);
    v["order"]      = S.size();
    v["structure"]  = structure_json(st);

    EggBox const eggs = green_relations(S);
    json         dcs  = json::array();
    for (DClass const& D : eggs.d_classes) {
      dcs.push_back({{"size", D.elements.size()},
                     {"rows", D.rows()},
                     {"cols", D.cols()},
                     {"group_cells", std::count(D.group_h.begin(), D.group_h.end(), true)}});
    }
    v["d_classes"] = dcs;

    auto const crit = matching_criteria(S);
    v["criteria"]   = {{"hopcroft_karp", crit.matching},
                       {"transversal", crit.transversal},
                       {"hall_condition", crit.hall_condition},
                       {"h_preserving", crit.h_preserving},
                       {"principal_factors", crit.factors_match},
                       {"h_quotients", crit.quotients_match}};
    v["permutation_matching"] = crit.matching;
    if (crit.witness) {
      w["permutation_matching"] = report::matching(S, crit.witness->image);
      if (S.size() <= 512) {
        v["unique_matching"] = unique_matching(build_inverse_graph(S), crit.witness->image);
      }
    }
    if (crit.h_preserving_witness) {
      w["h_preserving_matching"] = report::matching(S, crit.h_preserving_witness->image);
    }
    if (crit.violator) {
      w["hall_violator"] = report::violator(S, *crit.violator);
    }
    auto const inv             = find_involution_matching(S);
    v["involution_matching"]   = inv.has_value();
    if (inv) {
      w["involution_matching"] = report::matching(S, inv->image);
    }
    if (in.band) {
      v["band"] = band_verdicts(*in.band, S);
    }
    if (opts.oracle) {
      oracle_cross_check(S, crit.matching, inv.has_value(), v);
    }

    std::ostringstream os;
    os << "order: " << S.size() << "\n"
       << "regular: yes, inverse: " << yes_no(st.inverse)
       << ", orthodox: " << yes_no(st.orthodox) << "\n"
       << "D-classes: " << eggs.d_classes.size() << "\n"
       << "permutation matching: " << (crit.matching ? "present" : "absent") << "\n"
       << "involution matching: " << (inv ? "present" : "absent") << "\n";
    if (crit.violator) {
      os << "Hall violator: " << crit.violator->subset.size() << " elements with "
         << crit.violator->image.size() << " inverses\n";
    }
    out.text = os.str();
    finish(out, start, opts);
    return out;
  }

  Outcome match(std::string const& text, Options const& opts) {
    auto const  start = Clock::now();
    Input       in    = load(text);
    auto const& S     = in.semigroup;
    InverseGraph const G = build_inverse_graph(S);

    Outcome out;
    out.report   = report::make("match", io::digest(text), opts.seed);
    json& v      = out.report["verdicts"];
    json& w      = out.report["witnesses"];
    auto const p = find_permutation_matching(G);
    v["permutation_matching"] = p.has_value();
    std::ostringstream os;
    if (p) {
      w["permutation_matching"] = report::matching(S, p->image);
      os << "permutation matching: present\n";
      for (Element a = 0; a < S.size(); ++a) {
        os << "  " << S.label(a) << " -> " << S.label(p->image[a]) << "\n";
      }
    } else {
      auto const hv      = hall_violator(G);
      w["hall_violator"] = report::violator(S, *hv);
      os << "permutation matching: absent\nHall violator A = {";
      for (std::size_t k = 0; k < hv->subset.size(); ++k) {
        os << (k ? ", " : "") << S.label(hv->subset[k]);
      }
      os << "}, V(A) = {";
      for (std::size_t k = 0; k < hv->image.size(); ++k) {
        os << (k ? ", " : "") << S.label(hv->image[k]);
      }
      os << "}, |A| = " << hv->subset.size() << ", |V(A)| = " << hv->image.size() << "\n";
    }
    if (opts.oracle) {
      oracle_cross_check(S, p.has_value(), std::nullopt, v);
    }
    out.text = os.str();
    finish(out, start, opts);
    return out;
  }

  Outcome involution(std::string const& text, Options const& opts) {
    auto const  start = Clock::now();
    Input       in    = load(text);
    auto const& S     = in.semigroup;
    InverseGraph const G = build_inverse_graph(S);

    Outcome out;
    out.report   = report::make("involution", io::digest(text), opts.seed);
    json& v      = out.report["verdicts"];
    auto const p = find_permutation_matching(G);
    auto const q = find_involution_matching(G);
    v["permutation_matching"] = p.has_value();
    v["involution_matching"]  = q.has_value();
    std::ostringstream os;
    os << "involution matching: " << (q ? "present" : "absent") << "\n";
    if (q) {
      out.report["witnesses"]["involution_matching"] = report::matching(S, q->image);
      for (Element a = 0; a < S.size(); ++a) {
        if (a <= q->image[a]) {
          os << "  " << S.label(a) << " <-> " << S.label(q->image[a]) << "\n";
        }
      }
    }
    if (opts.oracle) {
      oracle_cross_check(S, p.has_value(), q.has_value(), v);
    }
    out.text = os.str();
    finish(out, start, opts);
    return out;
  }

  Outcome factors(std::string const& text, Options const& opts) {
    auto const  start = Clock::now();
    Input       in    = load(text);
    auto const& S     = in.semigroup;
    require_regular(S);

    Outcome out;
    out.report = report::make("factors", io::digest(text), opts.seed);
    auto const crit = matching_criteria(S);
    json       list = json::array();
    std::ostringstream os;
    for (FactorVerdict const& f : crit.factors) {
      json j = {{"d_class", f.d_class},
                {"order", f.order},
                {"zero_adjoined", f.zero_adjoined},
                {"has_matching", f.has_matching},
                {"quotient", report::band(f.quotient)},
                {"quotient_has_matching", f.quotient_has_matching}};
      if (f.quotient_matching) {
        j["quotient_matching"] = report::matching(to_semigroup(f.quotient),
                                                  f.quotient_matching->image);
      }
      list.push_back(j);
      os << "D-class " << f.d_class << ": factor order " << f.order
         << (f.zero_adjoined ? "" : " (minimal ideal, no zero)") << ", quotient "
         << f.quotient.rows() << "x" << f.quotient.cols()
         << ", matching " << (f.has_matching ? "present" : "absent") << "\n";
    }
    out.report["verdicts"]["factor_count"]     = crit.factors.size();
    out.report["verdicts"]["all_factors_match"] = crit.factors_match;
    out.report["witnesses"]["factors"]         = list;
    out.text                                   = os.str();
    finish(out, start, opts);
    return out;
  }

  Outcome band_check(std::string const& text, Options const& opts) {
    auto const         start = Clock::now();
    ZeroRectBand const B     = load_band(text);
    B.require_regular_pattern();
    FiniteSemigroup const S = to_semigroup(B);

    Outcome out;
    out.report = report::make("band check", io::digest(text), opts.seed);
    json& v    = out.report["verdicts"];
    v          = band_verdicts(B, S);
    auto const p = find_permutation_matching(S);
    v["permutation_matching"] = p.has_value();
    if (p) {
      out.report["witnesses"]["permutation_matching"] = report::matching(S, p->image);
    } else {
      out.report["witnesses"]["hall_violator"] = report::violator(S, *hall_violator(S));
    }
    if (opts.oracle && B.aspect_ratio() && std::max(B.rows(), B.cols()) <= 20) {
      auto const ov = oracle::row_expansion(B);
      v["oracle"]   = {{"rows_ok", ov.rows_ok}, {"columns_ok", ov.columns_ok}};
      if ((ov.rows_ok && ov.columns_ok) != v["row_expansion"]["holds"].get<bool>()) {
        throw Error(ErrorCode::equivalence_violation,
                    "exhaustive subset check disagrees with the flow check");
      }
    }
    std::ostringstream os;
    os << B.rows() << "x" << B.cols() << " band, permutation matching: "
       << (p ? "present" : "absent") << "\n";
    if (v.contains("row_expansion")) {
      os << "row expansion condition: " << (v["row_expansion"]["holds"].get<bool>() ? "holds" : "fails")
         << "\n";
    }
    if (v.contains("similarity")) {
      os << "similar rectangular components: " << yes_no(v["similarity"]["similar"].get<bool>())
         << "\n";
    }
    out.text = os.str();
    finish(out, start, opts);
    return out;
  }

  Outcome band_harem(std::string const& text, Options const& opts) {
    auto const         start = Clock::now();
    ZeroRectBand const B     = load_band(text);
    B.require_regular_pattern();

    Outcome out;
    out.report   = report::make("band harem", io::digest(text), opts.seed);
    auto const H = harem_functions(B);
    out.report["verdicts"]["harem_exists"] = H.has_value();
    std::ostringstream os;
    os << "harem family: " << (H ? "found" : "none") << "\n";
    if (H) {
      out.report["witnesses"]["harem"] = report::harem(*H);
      for (std::size_t t = 0; t < H->count(); ++t) {
        os << "  pi_" << t << ":";
        for (std::size_t i = 0; i < B.rows(); ++i) {
          os << " " << i + 1 << "->" << H->maps[t][i] + 1;
        }
        os << "\n";
      }
    }
    out.text = os.str();
    finish(out, start, opts);
    return out;
  }

  Outcome band_involution(std::string const& text, Options const& opts) {
    auto const         start = Clock::now();
    ZeroRectBand const B     = load_band(text);
    B.require_regular_pattern();
    FiniteSemigroup const S = to_semigroup(B);

    Outcome out;
    out.report   = report::make("band involution", io::digest(text), opts.seed);
    auto const r = harem_involution(B);
    out.report["verdicts"]["involution_matching"] = r.has_value();
    std::ostringstream os;
    os << "harem involution: " << (r ? "constructed" : "no harem family") << "\n";
    if (r) {
      out.report["witnesses"]["harem"]               = report::harem(r->harem);
      out.report["witnesses"]["involution_matching"] = report::matching(S, r->involution.image);
      out.report["witnesses"]["column_labels"]       = r->column_label;
      for (Element a = 0; a < S.size(); ++a) {
        if (a <= r->involution.image[a]) {
          os << "  " << S.label(a) << " <-> " << S.label(r->involution.image[a]) << "\n";
        }
      }
    }
    if (opts.oracle) {
      oracle_cross_check(S, find_permutation_matching(S).has_value(),
                         std::nullopt, out.report["verdicts"]);
    }
    out.text = os.str();
    finish(out, start, opts);
    return out;
  }

  namespace {

    std::string status_name(SolveStatus s) {
      switch (s) {
        case SolveStatus::solved: return "solved";
        case SolveStatus::unsolvable: return "unsolvable";
        case SolveStatus::budget_exhausted: return "budget-exhausted";
      }
      return "unknown";
    }

  }  // namespace

  Outcome colour_solve(std::string const& text, Options const& opts) {
    auto const         start = Clock::now();
    std::istringstream in(text);
    ColourInstance const inst = io::read_instance(in);

    Outcome out;
    out.report   = report::make("colour solve", io::digest(text), opts.seed);
    auto const r = solve(inst, opts.budget);
    out.report["verdicts"]["status"] = status_name(r.status);
    out.report["verdicts"]["nodes"]  = r.nodes;
    std::ostringstream os;
    os << "status: " << status_name(r.status) << " (" << r.nodes << " nodes)\n";
    if (r.plan) {
      out.report["verdicts"]["plan_verified"] = verify_plan(inst, *r.plan);
      out.report["witnesses"]["plan"]         = report::plan(*r.plan);
      auto const ex                           = r.plan->exchanges();
      os << "exchanges: " << ex.size() << (ex.empty() ? " (already aligned)" : "") << "\n";
      for (auto const& [i, j] : ex) {
        os << "  " << i << " " << j << "\n";
      }
    }
    if (r.status == SolveStatus::budget_exhausted) {
      out.exit_code = kExitBudget;
    }
    out.text = os.str();
    finish(out, start, opts);
    return out;
  }

  Outcome colour_reduce(std::string const&                band_text,
                        std::optional<std::string> const& matching_text,
                        Options const&                    opts) {
    auto const         start = Clock::now();
    ZeroRectBand const B     = load_band(band_text);
    B.require_regular_pattern();
    FiniteSemigroup const S = to_semigroup(B);

    PermutationMatching phi;
    if (matching_text) {
      std::istringstream in(*matching_text);
      phi.image = io::read_matching(in);
    } else {
      auto p = find_permutation_matching(S);
      if (!p) {
        throw Error(ErrorCode::not_a_matching, "band has no permutation matching to derive from");
      }
      phi = std::move(*p);
    }
    ColourInstance const inst = instance_from_matching(B, phi);

    Outcome out;
    out.report   = report::make("colour reduce", io::digest(band_text), opts.seed);
    json& v      = out.report["verdicts"];
    auto const r = solve(inst, opts.budget);
    v["status"]  = status_name(r.status);
    v["nodes"]   = r.nodes;
    out.report["witnesses"]["permutation_matching"] = report::matching(S, phi.image);
    std::ostringstream os;
    os << "instance: " << inst.girls << " girls, " << inst.colours << " colours\n"
       << "status: " << status_name(r.status) << " (" << r.nodes << " nodes)\n";
    if (r.plan) {
      auto const Phi = involution_from_plan(B, phi, inst, *r.plan);
      v["plan_verified"]       = verify_plan(inst, *r.plan);
      v["involution_verified"] = verify_involution_matching(S, Phi.image);
      out.report["witnesses"]["colour"] = {{"instance", report::instance(inst)},
                                           {"plan", report::plan(*r.plan)},
                                           {"involution_matching", report::matching(S, Phi.image)}};
      os << "exchanges: " << r.plan->exchanges().size() << "\ninvolution:\n";
      for (Element a = 0; a < S.size(); ++a) {
        if (a <= Phi.image[a]) {
          os << "  " << S.label(a) << " <-> " << S.label(Phi.image[a]) << "\n";
        }
      }
    }
    if (r.status == SolveStatus::budget_exhausted) {
      out.exit_code = kExitBudget;
    }
    out.text = os.str();
    finish(out, start, opts);
    return out;
  }

  Generated gen(Family family, std::size_t n, std::size_t cap) {
    auto const         M = enumerate(family, n, cap);
    std::ostringstream table, dict;
    io::write_cayley(table, M.semigroup);
    for (std::size_t k = 0; k < M.elements.size(); ++k) {
      dict << k << ' ' << M.elements[k].to_string() << '\n';
    }
    return {table.str(), dict.str()};
  }

  namespace {

    struct ShapeTally {
      std::size_t bands = 0, with_matching = 0, with_involution = 0, separators = 0;
      std::size_t oracle_checked = 0, divisible_checked = 0;
    };

  }  // namespace

  Outcome search_separators(SeparatorSearch const& q, Options const& opts) {
    auto const start = Clock::now();
    if (q.m_min < 1 || q.n_min < 1 || q.m_min > q.m_max || q.n_min > q.n_max || q.m_max > 6
        || q.n_max > 12 || q.exhaustive_cells > 24) {
      throw Error(ErrorCode::parameter_out_of_range,
                  "search-q4 needs 1 <= m <= 6, 1 <= n <= 12 and at most 24 exhaustive cells");
    }
    for (double d : q.densities) {
      if (!(d > 0.0 && d <= 1.0)) {
        throw Error(ErrorCode::parameter_out_of_range, "densities must lie in (0, 1]");
      }
    }

    Outcome out;
    out.report = report::make("search-q4", "", opts.seed);
    json shapes = json::array(), separators = json::array();
    ShapeTally total;

    for (std::size_t m = q.m_min; m <= q.m_max; ++m) {
      for (std::size_t n = q.n_min; n <= q.n_max; ++n) {
        bool const                exhaustive = m * n <= q.exhaustive_cells;
        std::vector<ZeroRectBand> bands;
        if (exhaustive) {
          bands = all_regular_bands(m, n);
        } else {
          for (std::size_t d = 0; d < q.densities.size(); ++d) {
            for (std::size_t k = 0; k < q.samples; ++k) {
              std::uint64_t const seed = opts.seed * 0x9E3779B97F4A7C15ull
                                         + ((m * 16 + n) * 64 + d) * 4096 + k;
              bands.push_back(random_band(m, n, q.densities[d], seed));
            }
          }
        }
        ShapeTally t;
        for (ZeroRectBand const& B : bands) {
          FiniteSemigroup const S = to_semigroup(B);
          InverseGraph const    G = build_inverse_graph(S);
          ++t.bands;
          auto const p = find_permutation_matching(G);
          if (!p) {
            continue;
          }
          ++t.with_matching;
          auto const inv = find_involution_matching(G);
          if (inv) {
            ++t.with_involution;
          }
          std::optional<bool> oracle_inv;
          if (opts.oracle && S.size() <= kOracleMaxOrder) {
            oracle_inv = oracle::involution_matching(S).has_value();
            ++t.oracle_checked;
            if (*oracle_inv != inv.has_value()) {
              throw Error(ErrorCode::equivalence_violation,
                          "backtracking oracle disagrees with the involution gadget");
            }
          }
          if (n % m == 0) {
            ++t.divisible_checked;
            if (!inv || !harem_involution(B)) {
              throw Error(ErrorCode::equivalence_violation,
                          "divisible band with a matching lacks the harem involution");
            }
          }
          if (!inv) {
            ++t.separators;
            json s = {{"band", report::band(B)},
                      {"permutation_matching", report::matching(S, p->image)},
                      {"involution_search", "two-copy gadget maximum matching is not perfect"}};
            if (oracle_inv) {
              s["oracle_confirms_no_involution"] = !*oracle_inv;
            }
            separators.push_back(s);
          }
        }
        shapes.push_back({{"m", m},
                          {"n", n},
                          {"mode", exhaustive ? "exhaustive" : "sampled"},
                          {"bands", t.bands},
                          {"with_matching", t.with_matching},
                          {"with_involution", t.with_involution},
                          {"separators", t.separators},
                          {"oracle_checked", t.oracle_checked},
                          {"divisible_checked", t.divisible_checked}});
        total.bands += t.bands;
        total.with_matching += t.with_matching;
        total.with_involution += t.with_involution;
        total.separators += t.separators;
      }
    }
    out.report["parameters"] = {{"m", {q.m_min, q.m_max}},
                                {"n", {q.n_min, q.n_max}},
                                {"exhaustive_cells", q.exhaustive_cells},
                                {"densities", q.densities},
                                {"samples", q.samples},
                                {"oracle", opts.oracle}};
    out.report["verdicts"] = {{"shapes", shapes},
                              {"bands", total.bands},
                              {"with_matching", total.with_matching},
                              {"with_involution", total.with_involution},
                              {"separators", total.separators}};
    out.report["witnesses"]["separators"] = separators;

    std::ostringstream os;
    for (auto const& s : shapes) {
      os << s["m"].get<std::size_t>() << "x" << s["n"].get<std::size_t>() << " ("
         << s["mode"].get<std::string>() << "): " << s["bands"].get<std::size_t>()
         << " bands, " << s["with_matching"].get<std::size_t>() << " with matching, "
         << s["separators"].get<std::size_t>() << " separators\n";
    }
    os << "total separators: " << total.separators << "\n";
    out.text = os.str();
    finish(out, start, opts);
    return out;
  }

  namespace {

    // Non-decreasing sequences of length n over {1..n}, counted by dynamic
    // programming over the last value.
    std::uint64_t count_monotone_maps(std::size_t n) {
      std::vector<std::uint64_t> ways(n + 1, 1);  // length 1, ending at v
      ways[0] = 0;
      for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t v = 2; v <= n; ++v) {
          ways[v] += ways[v - 1];
        }
      }
      std::uint64_t total = 0;
      for (std::size_t v = 1; v <= n; ++v) {
        total += ways[v];
      }
      return total;
    }

  }  // namespace

  Outcome search_family(FamilySearch const& q, Options const& opts) {
    auto const start = Clock::now();
    if (q.n_min < 1 || q.n_min > q.n_max || q.n_max > 8) {
      throw Error(ErrorCode::parameter_out_of_range, "search-on needs 1 <= n <= 8");
    }
    Outcome out;
    out.report = report::make("search-on", "", opts.seed);
    json rows = json::array(), instances = json::array();
    std::ostringstream os;
    for (std::size_t n = q.n_min; n <= q.n_max; ++n) {
      auto const  M = enumerate(q.family, n);
      auto const& S = M.semigroup;
      json        row = {{"family", family_name(q.family)}, {"n", n}, {"order", S.size()}};
      if (q.family == Family::On) {
        auto const count         = count_monotone_maps(n);
        row["independent_count"] = count;
        if (count != S.size()) {
          throw Error(ErrorCode::equivalence_violation,
                      "order-preserving enumeration disagrees with the monotone count");
        }
      }
      auto const reg = regularity_check(S);
      row["regular"] = reg.regular;
      json inst      = {{"family", family_name(q.family)}, {"n", n}};
      if (reg.regular) {
        auto const crit          = matching_criteria(S);
        row["hopcroft_karp"]     = crit.matching;
        row["h_quotients"]       = crit.quotients_match;
        row["principal_factors"] = crit.factors_match;
        if (crit.witness) {
          inst["permutation_matching"] = report::matching(S, crit.witness->image);
        } else {
          inst["hall_violator"] = report::violator(S, *crit.violator);
        }
        if (n <= q.involution_max_n) {
          auto const inv                 = find_involution_matching(S);
          row["involution_matching"]     = inv.has_value();
          if (inv) {
            inst["involution_matching"] = report::matching(S, inv->image);
          }
        }
        if (opts.oracle && n <= q.oracle_max_n) {
          bool const o         = oracle::permutation_matching(S).has_value();
          row["oracle_matching"] = o;
          if (o != crit.matching) {
            throw Error(ErrorCode::equivalence_violation,
                        "backtracking oracle disagrees on permutation matching");
          }
        }
        os << family_name(q.family) << " n=" << n << ": order " << S.size()
           << ", matching " << (crit.matching ? "present" : "absent") << "\n";
      } else {
        os << family_name(q.family) << " n=" << n << ": order " << S.size()
           << ", not regular\n";
      }
      rows.push_back(row);
      instances.push_back(inst);
    }
    out.report["parameters"] = {{"family", family_name(q.family)},
                                {"n", {q.n_min, q.n_max}},
                                {"oracle", opts.oracle}};
    out.report["verdicts"]["instances"]  = rows;
    out.report["witnesses"]["instances"] = instances;
    out.text                             = os.str();
    finish(out, start, opts);
    return out;
  }

  Outcome verify(std::string const& report_text, std::string const& input) {
    json const r = json::parse(report_text, nullptr, false);
    if (r.is_discarded()) {
      throw Error(ErrorCode::parse, "report is not valid JSON");
    }
    auto const res = report::verify(r, input);
    Outcome    out;
    out.report = report::make("verify", io::digest(report_text), 0);
    out.report["verdicts"] = {{"checked", res.checked}, {"ok", res.ok()}, {"failures", res.failures}};
    std::ostringstream os;
    os << res.checked << " checks, " << res.failures.size() << " failures\n";
    for (auto const& f : res.failures) {
      os << "  " << f << "\n";
    }
    out.text      = os.str();
    out.exit_code = res.ok() ? kExitOk : kExitPrecondition;
    return out;
  }

}  // namespace permatch::cli
