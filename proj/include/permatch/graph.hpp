#pragma once

// Matching and flow primitives used by the matching engine and the band
// constructions. All searches visit vertices and neighbours in increasing
// index order so results are reproducible.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace permatch::graph {

  using Vertex                  = std::uint32_t;
  inline constexpr Vertex kFree = static_cast<Vertex>(-1);

  //! Left vertices 0..left-1, right vertices 0..right-1; adj[u] lists the
  //! right neighbours of left vertex u.
  struct Bipartite {
    std::size_t                      left  = 0;
    std::size_t                      right = 0;
    std::vector<std::vector<Vertex>> adj;
  };

  struct BipartiteMatching {
    std::vector<Vertex> mate_left;   // kFree when unmatched
    std::vector<Vertex> mate_right;  // kFree when unmatched
    std::size_t         size = 0;

    bool perfect() const noexcept {
      return size == mate_left.size() && size == mate_right.size();
    }
  };

  //! Maximum matching by Hopcroft-Karp.
  BipartiteMatching hopcroft_karp(Bipartite const& g);

  //! A left set A with |N(A)| < |A|.
  struct HallDeficiency {
    std::vector<Vertex> subset;         // increasing
    std::vector<Vertex> neighbourhood;  // N(subset), increasing
  };

  //! König certificate for a maximum matching that leaves a left vertex
  //! free: the left and right vertices reachable by alternating paths from
  //! the least free left vertex. Every such right vertex is matched into the
  //! set, so |N(A)| = |A| - 1. Empty when every left vertex is matched.
  std::optional<HallDeficiency> hall_deficiency(Bipartite const&         g,
                                                BipartiteMatching const& m);

  //! Maximum matching in a general simple graph (Edmonds' blossom
  //! algorithm). adj must be symmetric and loop-free. Returns mate[v], or
  //! kFree.
  std::vector<Vertex> maximum_matching(std::vector<std::vector<Vertex>> const& adj);

  //! Dinic max-flow on a small integral network.
  class FlowNetwork {
   public:
    explicit FlowNetwork(std::size_t vertices);

    //! Returns an edge handle for flow().
    std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t capacity);

    std::int64_t max_flow(std::size_t source, std::size_t sink);

    std::int64_t flow(std::size_t edge) const;

    //! After max_flow: vertices reachable from the source in the residual
    //! network (the source side of a minimum cut).
    std::vector<bool> source_side(std::size_t source) const;

   private:
    struct Arc {
      std::size_t  to;
      std::int64_t capacity;
      std::int64_t initial;
    };

    bool         bfs(std::size_t source, std::size_t sink);
    std::int64_t dfs(std::size_t v, std::size_t sink, std::int64_t pushed);

    std::vector<Arc>                      _arcs;
    std::vector<std::vector<std::size_t>> _out;
    std::vector<int>                      _level;
    std::vector<std::size_t>              _next;
  };

}  // namespace permatch::graph
