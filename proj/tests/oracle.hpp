#pragma once

// Brute-force reference implementations used only by the tests. Nothing
// here calls canon, structure, ops or recursion; graphs are read through
// the Multigraph accessors and everything else is recomputed directly.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "autgraph/linear_combination.hpp"
#include "autgraph/multigraph.hpp"
#include "autgraph/rational.hpp"

namespace oracle {

using autgraph::BigInt;
using autgraph::Rational;

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // a < b
  std::vector<int> legs;                   // legs[l] = vertex of x_{l+1}
};

inline Graph from(const autgraph::Multigraph& g) {
  Graph out;
  out.n = g.vertex_count();
  for (const auto& e : g.edges()) out.edges.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
  for (const auto& l : g.legs()) {
    if (static_cast<int>(out.legs.size()) < l.label) out.legs.resize(l.label, -1);
    out.legs[l.label - 1] = l.vertex;
  }
  return out;
}

inline autgraph::Multigraph to_multigraph(const Graph& g) {
  autgraph::Multigraph out(g.n);
  for (auto [a, b] : g.edges) out.add_edge(a, b);
  for (std::size_t l = 0; l < g.legs.size(); ++l) out.add_leg(static_cast<int>(l) + 1, g.legs[l]);
  return out;
}

// Components after deleting vertex `skip_v` and edge position `skip_e`.
inline int components(const Graph& g, int skip_v = -1, int skip_e = -1) {
  std::vector<int> seen(g.n, 0);
  int count = 0;
  for (int start = 0; start < g.n; ++start) {
    if (start == skip_v || seen[start]) continue;
    ++count;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (e == skip_e) continue;
        auto [a, b] = g.edges[e];
        if (a == skip_v || b == skip_v) continue;
        int w = a == u ? b : b == u ? a : -1;
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

inline bool connected(const Graph& g) { return components(g) == 1; }

inline bool biconnected(const Graph& g) {
  if (g.n < 2 || !connected(g)) return false;
  if (g.n == 2) return true;
  for (int v = 0; v < g.n; ++v)
    if (components(g, v) != 1) return false;
  return true;
}

inline bool two_edge_connected(const Graph& g) {
  if (g.n < 2 || !connected(g)) return false;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    if (components(g, -1, e) != 1) return false;
  return true;
}

inline int cyclomatic(const Graph& g) { return static_cast<int>(g.edges.size()) - g.n + components(g); }

// For connected g: each vertex lies in components(g - v) blocks, which
// gives #blocks = 1 + sum_v (components(g - v) - 1).
inline int block_count(const Graph& g) {
  int b = 1;
  for (int v = 0; v < g.n; ++v) b += components(g, v) - 1;
  return b;
}

inline std::vector<int> cut_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (components(g, v) > 1) out.push_back(v);
  return out;
}

// 2-edge-connected graphs have k_b >= 1 per block, so every block is a
// cycle exactly when the block count equals k.
inline bool all_blocks_cycles(const Graph& g) { return two_edge_connected(g) && block_count(g) == cyclomatic(g); }

inline bool one_cut_vertex_j_blocks(const Graph& g, int j) {
  if (!two_edge_connected(g)) return false;
  auto cuts = cut_vertices(g);
  return cuts.size() == 1 && components(g, cuts.front()) == j;
}

inline int multiplicity(const Graph& g, int a, int b) {
  if (a > b) std::swap(a, b);
  return static_cast<int>(std::count(g.edges.begin(), g.edges.end(), std::make_pair(a, b)));
}

// Vertex permutations fixing every leg and preserving multiplicities.
inline void for_each_vertex_automorphism_candidate(const Graph& x, const Graph& y,
                                                   const std::function<void(const std::vector<int>&)>& f) {
  if (x.n != y.n || x.edges.size() != y.edges.size() || x.legs.size() != y.legs.size()) return;
  std::vector<int> perm(x.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t l = 0; l < x.legs.size() && ok; ++l) ok = perm[x.legs[l]] == y.legs[l];
    for (int a = 0; a < x.n && ok; ++a)
      for (int b = a + 1; b < x.n && ok; ++b) ok = multiplicity(x, a, b) == multiplicity(y, perm[a], perm[b]);
    if (ok) f(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline bool isomorphic(const Graph& x, const Graph& y) {
  bool found = false;
  for_each_vertex_automorphism_candidate(x, y, [&](const std::vector<int>&) { found = true; });
  return found;
}

// Counts edge bijections compatible with a vertex permutation by
// backtracking over the edge list.
inline long edge_bijections(const Graph& g, const std::vector<int>& perm) {
  const std::size_t m = g.edges.size();
  std::vector<bool> used(m, false);
  std::function<long(std::size_t)> go = [&](std::size_t e) -> long {
    if (e == m) return 1;
    auto [a, b] = g.edges[e];
    std::pair<int, int> image{std::min(perm[a], perm[b]), std::max(perm[a], perm[b])};
    long total = 0;
    for (std::size_t f = 0; f < m; ++f)
      if (!used[f] && g.edges[f] == image) {
        used[f] = true;
        total += go(e + 1);
        used[f] = false;
      }
    return total;
  };
  return go(0);
}

/// |Aut| as the number of (vertex permutation, edge bijection) pairs.
inline long aut_order(const Graph& g) {
  long total = 0;
  for_each_vertex_automorphism_candidate(g, g, [&](const std::vector<int>& perm) { total += edge_bijections(g, perm); });
  return total;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Every labeled multigraph on vertices 0..n-1 with m edges (as a
/// multiplicity vector) and legs x1..xs placed on vertices.
inline void for_each_labeled(int n, int m, int s, const std::function<void(const Graph&)>& f) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  Graph g;
  g.n = n;
  std::function<void(std::size_t, int)> edges = [&](std::size_t p, int left) {
    if (p == pairs.size()) {
      if (left != 0) return;
      g.legs.assign(s, 0);
      std::function<void(int)> legs = [&](int l) {
        if (l == s) return f(g);
        for (int v = 0; v < n; ++v) {
          g.legs[l] = v;
          legs(l + 1);
        }
      };
      legs(0);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      for (int r = 0; r < c; ++r) g.edges.push_back(pairs[p]);
      edges(p + 1, left - c);
      for (int r = 0; r < c; ++r) g.edges.pop_back();
    }
  };
  if (!pairs.empty()) edges(0, m);
}

struct ClassWeight {
  Graph representative;
  Rational weight;  // sum over labeled members of 1 / (n! prod mult!)
};

/// Isomorphism classes among labeled graphs accepted by `keep`, each with
/// its labeled weight; that weight equals 1/|Aut| of the class.
inline std::vector<ClassWeight> class_weights(int n, int k, int s, const std::function<bool(const Graph&)>& keep) {
  std::map<std::vector<std::pair<int, std::vector<int>>>, std::vector<ClassWeight>> buckets;
  const BigInt n_fact = factorial(n);
  for_each_labeled(n, k + n - 1, s, [&](const Graph& g) {
    if (!connected(g) || !keep(g)) return;
    BigInt denom = n_fact;
    std::vector<std::pair<int, std::vector<int>>> invariant;
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> row;
      for (int w = 0; w < g.n; ++w)
        if (w != v) row.push_back(multiplicity(g, v, w));
      std::sort(row.begin(), row.end());
      int legs = 0;
      for (std::size_t l = 0; l < g.legs.size(); ++l)
        if (g.legs[l] == v) legs |= 1 << l;
      invariant.emplace_back(legs, row);
      for (int w = v + 1; w < g.n; ++w) denom *= factorial(multiplicity(g, v, w));
    }
    std::sort(invariant.begin(), invariant.end());
    auto& bucket = buckets[invariant];
    const Rational w(BigInt(1), denom);
    for (auto& c : bucket)
      if (isomorphic(c.representative, g)) {
        c.weight += w;
        return;
      }
    bucket.push_back({g, w});
  });
  std::vector<ClassWeight> out;
  for (auto& [inv, bucket] : buckets)
    for (auto& c : bucket) out.push_back(std::move(c));
  return out;
}

/// Empty when `lc` has exactly the classes in `expected` with matching
/// coefficients; otherwise a description of the first discrepancy.
inline std::string compare(const autgraph::LinearCombination& lc, const std::vector<ClassWeight>& expected) {
  if (lc.size() != expected.size())
    return "class count " + std::to_string(lc.size()) + ", oracle " + std::to_string(expected.size());
  for (const auto& c : expected) {
    bool found = false;
    for (const auto& [key, term] : lc) {
      if (!isomorphic(from(term.representative), c.representative)) continue;
      found = true;
      if (term.coefficient != c.weight)
        return "coefficient " + autgraph::to_fraction_string(term.coefficient) + ", oracle " +
               autgraph::to_fraction_string(c.weight);
    }
    if (!found) return "a class is missing";
  }
  return {};
}

}  // namespace oracle
