#include <deque>
#include <numeric>

#include "permatch/graph.hpp"

namespace permatch::graph {

  namespace {

    class Blossom {
     public:
      explicit Blossom(std::vector<std::vector<Vertex>> const& adj)
          : _adj(adj),
            _n(static_cast<Vertex>(adj.size())),
            _mate(_n, kFree),
            _parent(_n),
            _base(_n),
            _in_tree(_n),
            _in_blossom(_n) {}

      std::vector<Vertex> run() {
        for (Vertex v = 0; v < _n; ++v) {
          if (_mate[v] != kFree) {
            continue;
          }
          for (Vertex u : _adj[v]) {
            if (_mate[u] == kFree) {
              _mate[u] = v;
              _mate[v] = u;
              break;
            }
          }
        }
        for (Vertex root = 0; root < _n; ++root) {
          if (_mate[root] != kFree) {
            continue;
          }
          Vertex v = find_path(root);
          while (v != kFree) {
            Vertex const pv  = _parent[v];
            Vertex const ppv = _mate[pv];
            _mate[v]         = pv;
            _mate[pv]        = v;
            v                = ppv;
          }
        }
        return _mate;
      }

     private:
      Vertex lowest_common_base(Vertex a, Vertex b) {
        std::vector<bool> seen(_n, false);
        for (;;) {
          a       = _base[a];
          seen[a] = true;
          if (_mate[a] == kFree) {
            break;
          }
          a = _parent[_mate[a]];
        }
        for (;;) {
          b = _base[b];
          if (seen[b]) {
            return b;
          }
          b = _parent[_mate[b]];
        }
      }

      void mark_path(Vertex v, Vertex b, Vertex child) {
        while (_base[v] != b) {
          _in_blossom[_base[v]] = _in_blossom[_base[_mate[v]]] = true;
          _parent[v]                                           = child;
          child                                                = _mate[v];
          v = _parent[_mate[v]];
        }
      }

      Vertex find_path(Vertex root) {
        std::fill(_in_tree.begin(), _in_tree.end(), false);
        std::fill(_parent.begin(), _parent.end(), kFree);
        std::iota(_base.begin(), _base.end(), Vertex{0});
        _in_tree[root] = true;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
          Vertex const v = queue.front();
          queue.pop_front();
          for (Vertex to : _adj[v]) {
            if (_base[v] == _base[to] || _mate[v] == to) {
              continue;
            }
            if (to == root
                || (_mate[to] != kFree && _parent[_mate[to]] != kFree)) {
              Vertex const b = lowest_common_base(v, to);
              std::fill(_in_blossom.begin(), _in_blossom.end(), false);
              mark_path(v, b, to);
              mark_path(to, b, v);
              for (Vertex i = 0; i < _n; ++i) {
                if (_in_blossom[_base[i]]) {
                  _base[i] = b;
                  if (!_in_tree[i]) {
                    _in_tree[i] = true;
                    queue.push_back(i);
                  }
                }
              }
            } else if (_parent[to] == kFree) {
              _parent[to] = v;
              if (_mate[to] == kFree) {
                return to;
              }
              Vertex const next = _mate[to];
              _in_tree[next]    = true;
              queue.push_back(next);
            }
          }
        }
        return kFree;
      }

      std::vector<std::vector<Vertex>> const& _adj;
      Vertex                                  _n;
      std::vector<Vertex>                     _mate;
      std::vector<Vertex>                     _parent;
      std::vector<Vertex>                     _base;
      std::vector<bool>                       _in_tree;
      std::vector<bool>                       _in_blossom;
    };

  }  // namespace

  std::vector<Vertex> maximum_matching(std::vector<std::vector<Vertex>> const& adj) {
    return Blossom(adj).run();
  }

}  // namespace permatch::graph
