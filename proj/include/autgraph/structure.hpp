#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "autgraph/multigraph.hpp"

namespace autgraph {

/// Biconnected components of a connected multigraph. A bridge is a block of
/// one edge; a bundle of parallel edges is one block.
struct BlockDecomposition {
  struct Block {
    std::vector<Vertex> vertices;     // sorted
    std::vector<std::size_t> edges;   // positions in Multigraph::edges(), sorted
  };

  std::vector<Block> blocks;          // ordered by smallest edge position
  std::vector<Vertex> cut_vertices;   // sorted
  std::vector<std::vector<std::size_t>> blocks_at;  // per vertex, sorted block indices

  bool is_cut_vertex(Vertex v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
  }
};

namespace detail {

inline int component_count(const Multigraph& g, Vertex removed = -1,
                           std::ptrdiff_t removed_edge = -1) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (static_cast<std::ptrdiff_t>(i) == removed_edge) continue;
    if (edges[i].touches(removed)) continue;
    parent[find(edges[i].a)] = find(edges[i].b);
  }
  int c = 0;
  for (int v = 0; v < n; ++v)
    if (v != removed && find(v) == v) ++c;
  return c;
}

}  // namespace detail

/// Number of connected components.
inline int component_count(const Multigraph& g) { return detail::component_count(g); }

inline bool is_connected(const Multigraph& g) { return component_count(g) == 1; }

/// k = m - n + c.
inline int cyclomatic_number(const Multigraph& g) {
  return static_cast<int>(g.edge_count()) - g.vertex_count() + component_count(g);
}

/// Depth-first lowpoint block finder. Parallel edges are told apart by edge
/// position, so a second edge back to the parent closes a cycle.
inline BlockDecomposition block_decomposition(const Multigraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("block decomposition needs a connected graph");
  const int n = g.vertex_count();
  auto edges = g.edges();

  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].a].push_back({edges[i].b, i});
    adj[edges[i].b].push_back({edges[i].a, i});
  }

  BlockDecomposition out;
  out.blocks_at.resize(n);
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> stack;
  int clock = 0;

  auto emit = [&](std::size_t until) {
    BlockDecomposition::Block blk;
    while (true) {
      std::size_t e = stack.back();
      stack.pop_back();
      blk.edges.push_back(e);
      blk.vertices.push_back(edges[e].a);
      blk.vertices.push_back(edges[e].b);
      if (e == until) break;
    }
    std::sort(blk.edges.begin(), blk.edges.end());
    std::sort(blk.vertices.begin(), blk.vertices.end());
    blk.vertices.erase(std::unique(blk.vertices.begin(), blk.vertices.end()), blk.vertices.end());
    out.blocks.push_back(std::move(blk));
  };

  std::function<void(Vertex, std::ptrdiff_t)> dfs = [&](Vertex u, std::ptrdiff_t via) {
    disc[u] = low[u] = clock++;
    for (auto [v, e] : adj[u]) {
      if (static_cast<std::ptrdiff_t>(e) == via) continue;
      if (disc[v] == -1) {
        stack.push_back(e);
        dfs(v, static_cast<std::ptrdiff_t>(e));
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) emit(e);
      } else if (disc[v] < disc[u]) {
        stack.push_back(e);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  dfs(0, -1);

  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& x, const auto& y) { return x.edges.front() < y.edges.front(); });
  for (std::size_t b = 0; b < out.blocks.size(); ++b)
    for (Vertex v : out.blocks[b].vertices) out.blocks_at[v].push_back(b);
  for (Vertex v = 0; v < n; ++v)
    if (out.blocks_at[v].size() >= 2) out.cut_vertices.push_back(v);
  return out;
}

/// Connected with a single block. The two-vertex multi-edge graphs count;
/// a lone vertex does not.
inline bool is_biconnected(const Multigraph& g) {
  if (g.vertex_count() < 2 || !is_connected(g)) return false;
  return block_decomposition(g).blocks.size() == 1;
}

/// Connected and bridgeless. A lone vertex is not 2-edge-connected.
inline bool is_two_edge_connected(const Multigraph& g) {
  if (g.vertex_count() < 2 || !is_connected(g)) return false;
  for (const auto& blk : block_decomposition(g).blocks)
    if (blk.edges.size() == 1) return false;
  return true;
}

/// Cyclomatic number of one block, taken on its own.
inline int block_cyclomatic_number(const BlockDecomposition::Block& blk) {
  return static_cast<int>(blk.edges.size()) - static_cast<int>(blk.vertices.size()) + 1;
}

/// The block as a standalone leg-free graph on 0..n'-1 (vertex order kept).
inline Multigraph block_subgraph(const Multigraph& g, const BlockDecomposition::Block& blk) {
  Multigraph out(static_cast<int>(blk.vertices.size()));
  auto index = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(blk.vertices.begin(), blk.vertices.end(), v) -
                               blk.vertices.begin());
  };
  for (auto e : blk.edges) out.add_edge(index(g.edges()[e].a), index(g.edges()[e].b));
  return out;
}

}  // namespace autgraph
