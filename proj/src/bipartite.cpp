#include <algorithm>
#include <deque>
#include <limits>

#include "permatch/graph.hpp"

namespace permatch::graph {

  namespace {

    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

    class HopcroftKarp {
     public:
      HopcroftKarp(Bipartite const& g, BipartiteMatching& m)
          : _g(g), _m(m), _dist(g.left), _cursor(g.left) {}

      bool layer() {
        std::deque<Vertex> queue;
        bool               reached_free = false;
        for (Vertex u = 0; u < _g.left; ++u) {
          if (_m.mate_left[u] == kFree) {
            _dist[u] = 0;
            queue.push_back(u);
          } else {
            _dist[u] = kInf;
          }
        }
        while (!queue.empty()) {
          Vertex const u = queue.front();
          queue.pop_front();
          for (Vertex v : _g.adj[u]) {
            Vertex const w = _m.mate_right[v];
            if (w == kFree) {
              reached_free = true;
            } else if (_dist[w] == kInf) {
              _dist[w] = _dist[u] + 1;
              queue.push_back(w);
            }
          }
        }
        return reached_free;
      }

      bool augment(Vertex u) {
        auto const& nbrs = _g.adj[u];
        for (; _cursor[u] < nbrs.size(); ++_cursor[u]) {
          Vertex const v = nbrs[_cursor[u]];
          Vertex const w = _m.mate_right[v];
          if (w == kFree || (_dist[w] == _dist[u] + 1 && augment(w))) {
            _m.mate_left[u]  = v;
            _m.mate_right[v] = u;
            ++_cursor[u];
            return true;
          }
        }
        _dist[u] = kInf;
        return false;
      }

      void run() {
        while (layer()) {
          std::fill(_cursor.begin(), _cursor.end(), 0);
          for (Vertex u = 0; u < _g.left; ++u) {
            if (_m.mate_left[u] == kFree && augment(u)) {
              ++_m.size;
            }
          }
        }
      }

     private:
      Bipartite const&         _g;
      BipartiteMatching&       _m;
      std::vector<std::size_t> _dist;
      std::vector<std::size_t> _cursor;
    };

  }  // namespace

  BipartiteMatching hopcroft_karp(Bipartite const& g) {
    BipartiteMatching m;
    m.mate_left.assign(g.left, kFree);
    m.mate_right.assign(g.right, kFree);
    HopcroftKarp(g, m).run();
    return m;
  }

  std::optional<HallDeficiency> hall_deficiency(Bipartite const&         g,
                                                BipartiteMatching const& m) {
    auto const free_it
        = std::find(m.mate_left.begin(), m.mate_left.end(), kFree);
    if (free_it == m.mate_left.end()) {
      return std::nullopt;
    }
    std::vector<bool>  seen_left(g.left, false), seen_right(g.right, false);
    std::deque<Vertex> queue;
    Vertex const       root = static_cast<Vertex>(free_it - m.mate_left.begin());
    seen_left[root]         = true;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex const u = queue.front();
      queue.pop_front();
      for (Vertex v : g.adj[u]) {
        if (seen_right[v]) {
          continue;
        }
        seen_right[v]  = true;
        Vertex const w = m.mate_right[v];
        if (w != kFree && !seen_left[w]) {
          seen_left[w] = true;
          queue.push_back(w);
        }
      }
    }
    HallDeficiency cert;
    for (Vertex u = 0; u < g.left; ++u) {
      if (seen_left[u]) {
        cert.subset.push_back(u);
      }
    }
    for (Vertex v = 0; v < g.right; ++v) {
      if (seen_right[v]) {
        cert.neighbourhood.push_back(v);
      }
    }
    return cert;
  }

}  // namespace permatch::graph
