#include "permatch/matching.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "permatch/graph.hpp"

namespace permatch {

  bool is_permutation(std::vector<Element> const& p) {
    std::vector<bool> hit(p.size(), false);
    for (Element x : p) {
      if (x >= p.size() || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    return true;
  }

  bool is_involution(std::vector<Element> const& p) {
    if (!is_permutation(p)) {
      return false;
    }
    for (Element a = 0; a < p.size(); ++a) {
      if (p[p[a]] != a) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<Element>> cycles(std::vector<Element> const& p) {
    std::vector<std::vector<Element>> out;
    std::vector<bool>                 seen(p.size(), false);
    for (Element a = 0; a < p.size(); ++a) {
      if (seen[a]) {
        continue;
      }
      std::vector<Element> cycle;
      for (Element x = a; !seen[x]; x = p[x]) {
        seen[x] = true;
        cycle.push_back(x);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  std::vector<Element> InverseGraph::inverses(Element a) const {
    std::vector<Element> v = adjacency[a];
    if (self_eligible[a]) {
      v.insert(std::lower_bound(v.begin(), v.end(), a), a);
    }
    return v;
  }

  InverseGraph build_inverse_graph(FiniteSemigroup const& S) {
    auto         invs = all_inverses(S);
    InverseGraph G;
    G.adjacency.resize(S.size());
    G.self_eligible.assign(S.size(), false);
    for (Element a = 0; a < S.size(); ++a) {
      if (invs[a].empty()) {
        throw Error(ErrorCode::not_regular,
                    "element " + S.label(a) + " has no inverse");
      }
      auto& adj = G.adjacency[a];
      adj       = std::move(invs[a]);
      auto it   = std::lower_bound(adj.begin(), adj.end(), a);
      if (it != adj.end() && *it == a) {
        G.self_eligible[a] = true;
        adj.erase(it);
      }
    }
    return G;
  }

  namespace {

    bool inverse_in(InverseGraph const& G, Element a, Element b) {
      if (a == b) {
        return G.self_eligible[a];
      }
      auto const& adj = G.adjacency[a];
      return std::binary_search(adj.begin(), adj.end(), b);
    }

    graph::Bipartite two_copy_graph(InverseGraph const& G) {
      graph::Bipartite g;
      g.left = g.right = G.size();
      g.adj.resize(G.size());
      for (Element a = 0; a < G.size(); ++a) {
        g.adj[a] = G.inverses(a);
      }
      return g;
    }

  }  // namespace

  std::optional<PermutationMatching> find_permutation_matching(InverseGraph const& G) {
    auto const g = two_copy_graph(G);
    auto const m = graph::hopcroft_karp(g);
    if (!m.perfect()) {
      return std::nullopt;
    }
    return PermutationMatching{m.mate_left};
  }

  std::optional<PermutationMatching> find_permutation_matching(FiniteSemigroup const& S) {
    return find_permutation_matching(build_inverse_graph(S));
  }

  std::optional<HallViolator> hall_violator(InverseGraph const& G) {
    auto const g    = two_copy_graph(G);
    auto const m    = graph::hopcroft_karp(g);
    auto const cert = graph::hall_deficiency(g, m);
    if (!cert) {
      return std::nullopt;
    }
    return HallViolator{cert->subset, cert->neighbourhood};
  }

  std::optional<HallViolator> hall_violator(FiniteSemigroup const& S) {
    return hall_violator(build_inverse_graph(S));
  }

  bool verify_permutation_matching(FiniteSemigroup const&      S,
                                   std::vector<Element> const& p) {
    if (p.size() != S.size() || !is_permutation(p)) {
      throw Error(ErrorCode::not_a_permutation,
                  "expected a permutation of " + std::to_string(S.size())
                      + " elements");
    }
    for (Element a = 0; a < S.size(); ++a) {
      if (!mutually_inverse(S, a, p[a])) {
        return false;
      }
    }
    return true;
  }

  bool verify_involution_matching(FiniteSemigroup const&      S,
                                  std::vector<Element> const& p) {
    return verify_permutation_matching(S, p) && is_involution(p);
  }

  bool is_h_preserving(EggBox const& eggs, std::vector<Element> const& p) {
    for (auto const& dc : eggs.d_classes) {
      for (auto const& cell : dc.cells) {
        for (Element x : cell) {
          if (!eggs.same_h(p[cell.front()], p[x])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_h_preserving(FiniteSemigroup const& S, std::vector<Element> const& p) {
    return is_h_preserving(green_relations(S), p);
  }

  PermutationMatching lift_h_matching(PrincipalFactor const&     F,
                                      PermutationMatching const& q) {
    HCellGrid const     grid = h_cell_grid(F);
    ZeroRectBand const& band = grid.band;
    if (q.size() != band.order()) {
      throw Error(ErrorCode::domain_mismatch,
                  "quotient matching has the wrong size");
    }
    FiniteSemigroup const& T = F.semigroup;
    PermutationMatching    lifted{std::vector<Element>(T.size(), kNoElement)};
    if (F.zero_adjoined) {
      lifted.image[F.zero()] = F.zero();
    }
    for (std::size_t i = 0; i < band.rows(); ++i) {
      for (std::size_t j = 0; j < band.cols(); ++j) {
        Element const target = q[band.element(i, j)];
        if (target == 0 || target >= band.order()) {
          throw Error(ErrorCode::no_inverse_in_target_cell,
                      "quotient matching sends a non-zero cell to zero");
        }
        auto const& dest = grid.cell(band.row_of(target), band.col_of(target));
        for (Element x : grid.cell(i, j)) {
          auto it = std::find_if(dest.begin(), dest.end(), [&](Element y) {
            return mutually_inverse(T, x, y);
          });
          if (it == dest.end()) {
            throw Error(ErrorCode::no_inverse_in_target_cell,
                        "element " + T.label(x)
                            + " has no inverse in its target cell");
          }
          lifted.image[x] = *it;
        }
      }
    }
    return lifted;
  }

  PermutationMatching assemble_global_matching(
      FiniteSemigroup const&               S,
      std::span<PrincipalFactor const>     factors,
      std::span<PermutationMatching const> parts) {
    if (factors.size() != parts.size()) {
      throw Error(ErrorCode::domain_mismatch,
                  "expected one matching per principal factor");
    }
    PermutationMatching global{std::vector<Element>(S.size(), kNoElement)};
    for (std::size_t k = 0; k < factors.size(); ++k) {
      PrincipalFactor const&     F = factors[k];
      PermutationMatching const& p = parts[k];
      if (p.size() != F.semigroup.size()) {
        throw Error(ErrorCode::domain_mismatch,
                    "matching " + std::to_string(k)
                        + " does not fit its principal factor");
      }
      if (F.zero_adjoined && p[F.zero()] != F.zero()) {
        throw Error(ErrorCode::domain_mismatch,
                    "matching " + std::to_string(k) + " moves the zero");
      }
      for (Element x = 0; x < p.size(); ++x) {
        Element const src = F.to_source[x];
        if (src == kNoElement) {
          continue;
        }
        Element const dst = F.to_source[p[x]];
        if (dst == kNoElement || global.image[src] != kNoElement) {
          throw Error(ErrorCode::domain_mismatch,
                      "factor matchings overlap or leave their D-class");
        }
        global.image[src] = dst;
      }
    }
    if (std::find(global.image.begin(), global.image.end(), kNoElement)
        != global.image.end()) {
      throw Error(ErrorCode::domain_mismatch,
                  "factor matchings do not cover the semigroup");
    }
    if (!verify_permutation_matching(S, global.image)) {
      throw Error(ErrorCode::not_a_matching,
                  "assembled map sends an element outside its inverses");
    }
    return global;
  }

  std::optional<InvolutionMatching> involution_from_cycles(InverseGraph const& G,
                                                           PermutationMatching const& p) {
    InvolutionMatching result{std::vector<Element>(p.size(), kNoElement)};
    auto const pair = [&](Element a, Element b) {
      result.image[a] = b;
      result.image[b] = a;
    };
    for (auto const& cycle : cycles(p.image)) {
      std::size_t const r = cycle.size();
      std::size_t       start = 0;
      if (r % 2 == 1) {
        auto it = std::find_if(cycle.begin(), cycle.end(), [&](Element a) {
          return G.self_eligible[a];
        });
        if (it == cycle.end()) {
          return std::nullopt;
        }
        std::size_t const k = static_cast<std::size_t>(it - cycle.begin());
        result.image[cycle[k]] = cycle[k];
        start                  = k + 1;
      }
      for (std::size_t s = 0; s + 1 < r; s += 2) {
        pair(cycle[(start + s) % r], cycle[(start + s + 1) % r]);
      }
    }
    return result;
  }

  std::optional<InvolutionMatching> involution_from_cycles(FiniteSemigroup const& S,
                                                           PermutationMatching const& p) {
    if (!verify_permutation_matching(S, p.image)) {
      throw Error(ErrorCode::not_a_matching, "input is not a permutation matching");
    }
    return involution_from_cycles(build_inverse_graph(S), p);
  }

  std::optional<InvolutionMatching> find_involution_matching(InverseGraph const& G) {
    std::size_t const  n = G.size();
    InvolutionMatching result{std::vector<Element>(n, kNoElement)};
    std::vector<bool>  seen(n, false);
    for (Element root = 0; root < n; ++root) {
      if (seen[root]) {
        continue;
      }
      // connected component of root, in increasing order
      std::vector<Element> component{root};
      seen[root] = true;
      for (std::size_t k = 0; k < component.size(); ++k) {
        for (Element b : G.adjacency[component[k]]) {
          if (!seen[b]) {
            seen[b] = true;
            component.push_back(b);
          }
        }
      }
      std::sort(component.begin(), component.end());
      std::size_t const k = component.size();
      auto const local = [&](Element a) {
        return static_cast<graph::Vertex>(
            std::lower_bound(component.begin(), component.end(), a)
            - component.begin());
      };
      std::vector<std::vector<graph::Vertex>> gadget(2 * k);
      for (std::size_t i = 0; i < k; ++i) {
        for (Element b : G.adjacency[component[i]]) {
          graph::Vertex const j = local(b);
          gadget[i].push_back(j);
          gadget[k + i].push_back(static_cast<graph::Vertex>(k + j));
        }
        if (G.self_eligible[component[i]]) {
          gadget[i].push_back(static_cast<graph::Vertex>(k + i));
          gadget[k + i].push_back(static_cast<graph::Vertex>(i));
        }
      }
      for (auto& nbrs : gadget) {
        std::sort(nbrs.begin(), nbrs.end());
      }
      auto const mate = graph::maximum_matching(gadget);
      for (std::size_t i = 0; i < k; ++i) {
        graph::Vertex const m = mate[i];
        if (m == graph::kFree) {
          return std::nullopt;
        }
        result.image[component[i]] = m == k + i ? component[i] : component[m];
      }
    }
    return result;
  }

  std::optional<InvolutionMatching> find_involution_matching(FiniteSemigroup const& S) {
    return find_involution_matching(build_inverse_graph(S));
  }

  bool CriteriaReport::consistent() const noexcept {
    return matching == transversal && matching == hall_condition
           && matching == h_preserving && matching == factors_match
           && matching == quotients_match;
  }

  namespace {

    // A system of distinct representatives of {V(a)}, found
    // as a unit-capacity flow rather than through the bipartite matcher.
    bool has_transversal(InverseGraph const& G) {
      std::size_t const   n      = G.size();
      std::size_t const   source = 2 * n, sink = 2 * n + 1;
      graph::FlowNetwork  net(2 * n + 2);
      for (Element a = 0; a < n; ++a) {
        net.add_edge(source, a, 1);
        net.add_edge(n + a, sink, 1);
        for (Element b : G.inverses(a)) {
          net.add_edge(a, n + b, 1);
        }
      }
      return net.max_flow(source, sink) == static_cast<std::int64_t>(n);
    }

  }  // namespace

  CriteriaReport matching_criteria(FiniteSemigroup const& S) {
    InverseGraph const G = build_inverse_graph(S);
    CriteriaReport    report;

    report.witness        = find_permutation_matching(G);
    report.matching       = report.witness.has_value();
    report.transversal    = has_transversal(G);
    report.violator       = hall_violator(G);
    report.hall_condition = !report.violator.has_value();

    EggBox const eggs    = green_relations(S);
    auto const   factors = principal_factors(S, eggs);
    report.factors_match   = true;
    report.quotients_match = true;
    for (PrincipalFactor const& F : factors) {
      FactorVerdict v;
      v.d_class       = F.source_d_class;
      v.order         = F.semigroup.size();
      v.zero_adjoined = F.zero_adjoined;
      v.has_matching  = find_permutation_matching(F.semigroup).has_value();
      v.quotient      = h_quotient(F);
      v.quotient_matching = find_permutation_matching(to_semigroup(v.quotient));
      v.quotient_has_matching = v.quotient_matching.has_value();
      report.factors_match    = report.factors_match && v.has_matching;
      report.quotients_match  = report.quotients_match && v.quotient_has_matching;
      report.factors.push_back(std::move(v));
    }

    if (report.quotients_match) {
      std::vector<PermutationMatching> parts;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        parts.push_back(
            lift_h_matching(factors[k], *report.factors[k].quotient_matching));
      }
      auto global = assemble_global_matching(S, factors, parts);
      if (!is_h_preserving(eggs, global.image)) {
        throw Error(ErrorCode::equivalence_violation,
                    "lifted matching does not preserve H");
      }
      report.h_preserving_witness = std::move(global);
      report.h_preserving         = true;
    }

    if (!report.consistent()) {
      std::ostringstream os;
      os << "matching criteria disagree (HK, flow, Hall, H-lift, factors, quotients) = " << report.matching << report.transversal
         << report.hall_condition << report.h_preserving
         << report.factors_match << report.quotients_match;
      throw Error(ErrorCode::equivalence_violation, os.str());
    }
    return report;
  }

}  // namespace permatch
