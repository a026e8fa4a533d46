#include <algorithm>
#include <deque>
#include <limits>

#include "permatch/graph.hpp"

namespace permatch::graph {

  FlowNetwork::FlowNetwork(std::size_t vertices)
      : _out(vertices), _level(vertices), _next(vertices) {}

  std::size_t FlowNetwork::add_edge(std::size_t  from,
                                    std::size_t  to,
                                    std::int64_t capacity) {
    std::size_t const id = _arcs.size();
    _arcs.push_back({to, capacity, capacity});
    _out[from].push_back(id);
    _arcs.push_back({from, 0, 0});
    _out[to].push_back(id + 1);
    return id;
  }

  bool FlowNetwork::bfs(std::size_t source, std::size_t sink) {
    std::fill(_level.begin(), _level.end(), -1);
    std::deque<std::size_t> queue{source};
    _level[source] = 0;
    while (!queue.empty()) {
      std::size_t const v = queue.front();
      queue.pop_front();
      for (std::size_t id : _out[v]) {
        Arc const& arc = _arcs[id];
        if (arc.capacity > 0 && _level[arc.to] < 0) {
          _level[arc.to] = _level[v] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return _level[sink] >= 0;
  }

  std::int64_t FlowNetwork::dfs(std::size_t v, std::size_t sink, std::int64_t pushed) {
    if (v == sink) {
      return pushed;
    }
    for (; _next[v] < _out[v].size(); ++_next[v]) {
      std::size_t const id  = _out[v][_next[v]];
      Arc&              arc = _arcs[id];
      if (arc.capacity <= 0 || _level[arc.to] != _level[v] + 1) {
        continue;
      }
      std::int64_t const got = dfs(arc.to, sink, std::min(pushed, arc.capacity));
      if (got > 0) {
        arc.capacity -= got;
        _arcs[id ^ 1].capacity += got;
        return got;
      }
    }
    return 0;
  }

  std::int64_t FlowNetwork::max_flow(std::size_t source, std::size_t sink) {
    std::int64_t total = 0;
    while (bfs(source, sink)) {
      std::fill(_next.begin(), _next.end(), 0);
      while (std::int64_t pushed
             = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  std::int64_t FlowNetwork::flow(std::size_t edge) const {
    return _arcs[edge].initial - _arcs[edge].capacity;
  }

  std::vector<bool> FlowNetwork::source_side(std::size_t source) const {
    std::vector<bool>       seen(_out.size(), false);
    std::deque<std::size_t> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
      std::size_t const v = queue.front();
      queue.pop_front();
      for (std::size_t id : _out[v]) {
        Arc const& arc = _arcs[id];
        if (arc.capacity > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          queue.push_back(arc.to);
        }
      }
    }
    return seen;
  }

}  // namespace permatch::graph
