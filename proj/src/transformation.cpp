#include "permatch/transformation.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "permatch/graph.hpp"

namespace permatch {

  std::string_view family_name(Family f) noexcept {
    switch (f) {
      case Family::Tn: return "Tn";
      case Family::PTn: return "PTn";
      case Family::On: return "On";
      case Family::OPn: return "OPn";
      case Family::Pn: return "Pn";
    }
    return "?";
  }

  std::optional<Family> parse_family(std::string_view name) noexcept {
    for (Family f : {Family::Tn, Family::PTn, Family::On, Family::OPn, Family::Pn}) {
      if (family_name(f) == name) {
        return f;
      }
    }
    return std::nullopt;
  }

  std::size_t Transformation::rank() const {
    std::vector<bool> hit(images.size(), false);
    std::size_t       r = 0;
    for (auto x : images) {
      if (x != kUndefined && !hit[x]) {
        hit[x] = true;
        ++r;
      }
    }
    return r;
  }

  bool Transformation::total() const {
    return std::find(images.begin(), images.end(), kUndefined) == images.end();
  }

  std::vector<std::size_t> Transformation::kernel_signature() const {
    std::vector<std::size_t> sizes(images.size(), 0);
    for (auto x : images) {
      if (x != kUndefined) {
        ++sizes[x];
      }
    }
    std::erase(sizes, 0);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

  std::string Transformation::to_string() const {
    std::string s;
    bool const  wide = images.size() > 10;
    for (std::size_t k = 0; k < images.size(); ++k) {
      if (wide && k > 0) {
        s += ',';
      }
      s += images[k] == kUndefined ? std::string("-") : std::to_string(images[k]);
    }
    return s;
  }

  Transformation compose(Transformation const& a, Transformation const& b) {
    Transformation c;
    c.images.resize(a.images.size());
    for (std::size_t x = 0; x < a.images.size(); ++x) {
      auto const y = a.images[x];
      c.images[x]  = y == Transformation::kUndefined ? y : b.images[y];
    }
    return c;
  }

  bool is_order_preserving(Transformation const& t) {
    return t.total() && std::is_sorted(t.images.begin(), t.images.end());
  }

  namespace {
    template <typename It>
    bool cyclic_sequence(It first, It last) {
      if (first == last) {
        return true;
      }
      std::size_t descents = 0;
      for (It it = first; std::next(it) != last; ++it) {
        descents += *it > *std::next(it);
      }
      return descents == 0 || (descents == 1 && *std::prev(last) <= *first);
    }
  }  // namespace

  bool is_orientation_preserving(Transformation const& t) {
    return t.total() && cyclic_sequence(t.images.begin(), t.images.end());
  }

  bool is_orientation_reversing(Transformation const& t) {
    return t.total() && cyclic_sequence(t.images.rbegin(), t.images.rend());
  }

  namespace {

    bool in_family(Family f, Transformation const& t) {
      switch (f) {
        case Family::Tn: return t.total();
        case Family::PTn: return true;
        case Family::On: return is_order_preserving(t);
        case Family::OPn: return is_orientation_preserving(t);
        case Family::Pn:
          return is_orientation_preserving(t) || is_orientation_reversing(t);
      }
      return false;
    }

    std::uint64_t encode(Transformation const& t) {
      std::uint64_t code = 0;
      for (auto x : t.images) {
        code = code * (t.images.size() + 1)
               + (x == Transformation::kUndefined ? t.images.size() : x);
      }
      return code;
    }

    constexpr std::uint64_t kMaxCandidates = 500'000'000;

  }  // namespace

  TransformationMonoid enumerate(Family family, std::size_t n, std::size_t cap) {
    if (n == 0 || n > 16) {
      throw Error(ErrorCode::parameter_out_of_range, "degree must be in 1..16");
    }
    std::size_t const symbols = family == Family::PTn ? n + 1 : n;
    std::uint64_t     candidates = 1;
    for (std::size_t k = 0; k < n; ++k) {
      candidates *= symbols;
      if (candidates > kMaxCandidates) {
        throw Error(ErrorCode::too_large,
                    "too many candidate maps for " + std::string(family_name(family))
                        + " at n = " + std::to_string(n));
      }
    }

    TransformationMonoid M;
    M.family = family;
    M.degree = n;
    Transformation t;
    t.images.assign(n, 0);
    auto const symbol = [&](std::size_t s) {
      return static_cast<std::uint8_t>(s == n ? Transformation::kUndefined : s);
    };
    std::vector<std::size_t> digits(n, 0);
    for (;;) {
      for (std::size_t k = 0; k < n; ++k) {
        t.images[k] = symbol(digits[k]);
      }
      if (in_family(family, t)) {
        if (M.elements.size() == cap) {
          throw Error(ErrorCode::too_large,
                      std::string(family_name(family)) + " at n = "
                          + std::to_string(n) + " exceeds the cap of "
                          + std::to_string(cap) + " elements");
        }
        M.elements.push_back(t);
      }
      std::size_t k = n;
      while (k > 0 && ++digits[k - 1] == symbols) {
        digits[--k] = 0;
      }
      if (k == 0) {
        break;
      }
    }
    // undefined sorts last, so order by the symbol codes
    std::sort(M.elements.begin(), M.elements.end(),
              [](Transformation const& x, Transformation const& y) {
                return encode(x) < encode(y);
              });

    std::size_t const                          size = M.elements.size();
    std::unordered_map<std::uint64_t, Element> index;
    index.reserve(size * 2);
    for (Element k = 0; k < size; ++k) {
      index.emplace(encode(M.elements[k]), k);
    }
    std::vector<Element> table(size * size);
    Transformation       c;
    c.images.resize(n);
    for (std::size_t a = 0; a < size; ++a) {
      auto const& ai = M.elements[a].images;
      for (std::size_t b = 0; b < size; ++b) {
        auto const& bi = M.elements[b].images;
        for (std::size_t x = 0; x < n; ++x) {
          c.images[x] = ai[x] == Transformation::kUndefined ? ai[x] : bi[ai[x]];
        }
        table[a * size + b] = index.at(encode(c));
      }
    }
    std::vector<std::string> labels;
    labels.reserve(size);
    for (auto const& e : M.elements) {
      labels.push_back(e.to_string());
    }
    M.semigroup = FiniteSemigroup(size, std::move(table), std::move(labels));
    return M;
  }

  std::vector<QClass> q_class_partition(TransformationMonoid const& M, std::size_t rank) {
    if (M.family != Family::Tn) {
      throw Error(ErrorCode::not_tn, "Q-classes are defined for T_n");
    }
    std::map<std::vector<std::size_t>, QClass> by_signature;
    for (Element a = 0; a < M.elements.size(); ++a) {
      if (M.elements[a].rank() != rank) {
        continue;
      }
      auto  sig = M.elements[a].kernel_signature();
      auto& Q   = by_signature[sig];
      Q.rank    = rank;
      Q.signature = std::move(sig);
      Q.elements.push_back(a);
    }
    std::vector<QClass> out;
    for (auto& [sig, Q] : by_signature) {
      out.push_back(std::move(Q));
    }
    return out;
  }

  std::vector<std::vector<Element>> q_class_inverses(FiniteSemigroup const& S,
                                                     QClass const&          Q) {
    std::vector<std::vector<Element>> out;
    out.reserve(Q.elements.size());
    for (Element a : Q.elements) {
      std::vector<Element> inside;
      for (Element b : inverses_of(S, a)) {
        if (std::binary_search(Q.elements.begin(), Q.elements.end(), b)) {
          inside.push_back(b);
        }
      }
      out.push_back(std::move(inside));
    }
    return out;
  }

  std::optional<std::size_t> q_class_regular_degree(FiniteSemigroup const& S,
                                                    QClass const&          Q) {
    auto const invs = q_class_inverses(S, Q);
    if (invs.empty()) {
      return std::nullopt;
    }
    std::size_t const d = invs.front().size();
    for (auto const& v : invs) {
      if (v.size() != d) {
        return std::nullopt;
      }
    }
    return d;
  }

  std::optional<std::vector<Element>> q_perfect_matching(FiniteSemigroup const& S,
                                                         QClass const&          Q) {
    auto const       invs = q_class_inverses(S, Q);
    graph::Bipartite g;
    g.left = g.right = Q.elements.size();
    for (auto const& v : invs) {
      std::vector<graph::Vertex> local;
      for (Element b : v) {
        local.push_back(static_cast<graph::Vertex>(
            std::lower_bound(Q.elements.begin(), Q.elements.end(), b)
            - Q.elements.begin()));
      }
      g.adj.push_back(std::move(local));
    }
    auto const m = graph::hopcroft_karp(g);
    if (!m.perfect()) {
      return std::nullopt;
    }
    std::vector<Element> pm;
    for (auto v : m.mate_left) {
      pm.push_back(Q.elements[v]);
    }
    return pm;
  }

  QCycleChase matching_from_q_perfect_matching(FiniteSemigroup const&      S,
                                               QClass const&               Q,
                                               std::vector<Element> const& pm) {
    std::size_t const k = Q.elements.size();
    if (pm.size() != k) {
      throw Error(ErrorCode::not_perfect, "matching does not cover the Q-class");
    }
    auto const position = [&](Element a) -> std::size_t {
      auto it = std::lower_bound(Q.elements.begin(), Q.elements.end(), a);
      return it != Q.elements.end() && *it == a
                 ? static_cast<std::size_t>(it - Q.elements.begin())
                 : k;
    };
    std::vector<bool> used(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t const j = position(pm[i]);
      if (j == k || used[j] || !mutually_inverse(S, Q.elements[i], pm[i])) {
        throw Error(ErrorCode::not_perfect,
                    "not a perfect matching of the Q-class inverse graph");
      }
      used[j] = true;
    }
    QCycleChase chase;
    chase.image.assign(S.size(), kNoElement);
    std::vector<bool> visited(k, false);
    for (std::size_t start = 0; start < k; ++start) {
      if (visited[start]) {
        continue;
      }
      std::vector<Element> cycle;
      for (std::size_t i = start; !visited[i]; i = position(pm[i])) {
        visited[i] = true;
        cycle.push_back(Q.elements[i]);
        chase.image[Q.elements[i]] = pm[i];
      }
      chase.cycles.push_back(std::move(cycle));
    }
    return chase;
  }

  TnMatchingResult tn_matching(TransformationMonoid const& M) {
    if (M.family != Family::Tn) {
      throw Error(ErrorCode::not_tn, "the Q-class construction is for T_n");
    }
    FiniteSemigroup const& S = M.semigroup;
    TnMatchingResult       result;
    result.matching.image.assign(S.size(), kNoElement);
    for (std::size_t rank = 1; rank <= M.degree; ++rank) {
      for (QClass const& Q : q_class_partition(M, rank)) {
        TnMatchingResult::QSummary summary{
            rank, Q.signature, Q.elements.size(), q_class_regular_degree(S, Q)};
        result.all_regular = result.all_regular && summary.degree.has_value();
        result.q_classes.push_back(summary);
        auto const pm = q_perfect_matching(S, Q);
        if (!pm) {
          throw Error(ErrorCode::not_perfect,
                      "a Q-class of rank " + std::to_string(rank)
                          + " has no perfect matching");
        }
        auto const chase = matching_from_q_perfect_matching(S, Q, *pm);
        for (Element a : Q.elements) {
          result.matching.image[a] = chase.image[a];
        }
      }
    }
    return result;
  }

  bool is_inverse_subsemigroup(FiniteSemigroup const& S, std::vector<Element> const& U) {
    std::vector<Element> E;
    for (Element x : U) {
      if (S.is_idempotent(x)) {
        E.push_back(x);
      }
    }
    for (Element e : E) {
      for (Element f : E) {
        if (S.product(e, f) != S.product(f, e)) {
          return false;
        }
      }
    }
    for (Element x : U) {
      bool regular = false;
      for (Element y : U) {
        if (S.product(x, y, x) == x) {
          regular = true;
          break;
        }
      }
      if (!regular) {
        return false;
      }
    }
    return true;
  }

  InverseGraph strong_inverse_pairs(FiniteSemigroup const& S, std::size_t cap) {
    if (S.size() > cap) {
      throw Error(ErrorCode::too_large,
                  "strong inverse search is capped at " + std::to_string(cap)
                      + " elements");
    }
    InverseGraph const full = build_inverse_graph(S);
    InverseGraph       strong;
    strong.adjacency.resize(S.size());
    strong.self_eligible.assign(S.size(), false);
    for (Element a = 0; a < S.size(); ++a) {
      if (full.self_eligible[a]) {
        Element const gens[] = {a};
        strong.self_eligible[a]
            = is_inverse_subsemigroup(S, generated_subsemigroup(S, gens));
      }
      for (Element b : full.adjacency[a]) {
        if (b < a) {
          continue;
        }
        Element const gens[] = {a, b};
        if (is_inverse_subsemigroup(S, generated_subsemigroup(S, gens))) {
          strong.adjacency[a].push_back(b);
          strong.adjacency[b].push_back(a);
        }
      }
    }
    for (auto& adj : strong.adjacency) {
      std::sort(adj.begin(), adj.end());
    }
    return strong;
  }

}  // namespace permatch
