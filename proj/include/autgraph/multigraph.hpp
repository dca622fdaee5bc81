#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace autgraph {

/// Vertex index. The library counts vertices from 0; the JSON encoding
/// counts from 1.
using Vertex = int;

/// Label of an external leg: x_i is stored as i (i >= 1).
using LegLabel = int;

struct InternalEdge {
  int id;
  Vertex a;
  Vertex b;

  Vertex other(Vertex v) const { return v == a ? b : a; }
  bool touches(Vertex v) const { return a == v || b == v; }
};

struct ExternalLeg {
  LegLabel label;
  Vertex vertex;
};

/// One end of an internal edge, addressed by the edge's position in
/// Multigraph::edges() and the endpoint slot (0 for a, 1 for b).
struct EdgeEnd {
  std::size_t edge;
  int slot;
};

/// Loopless multigraph on vertices 0..n-1 with distinguishable internal
/// edges and labeled external legs.
class Multigraph {
 public:
  explicit Multigraph(int n = 1) : n_(n) {
    if (n < 1) throw std::invalid_argument("a graph needs at least one vertex");
  }

  Multigraph(int n, std::span<const std::pair<Vertex, Vertex>> edges,
             std::span<const ExternalLeg> legs = {})
      : Multigraph(n) {
    for (auto [a, b] : edges) add_edge(a, b);
    for (const auto& leg : legs) add_leg(leg.label, leg.vertex);
  }

  Multigraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges,
             std::initializer_list<ExternalLeg> legs = {})
      : Multigraph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()),
                   std::span<const ExternalLeg>(legs.begin(), legs.size())) {}

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t leg_count() const { return legs_.size(); }

  std::span<const InternalEdge> edges() const { return edges_; }
  /// Legs sorted by label.
  std::span<const ExternalLeg> legs() const { return legs_; }

  Vertex add_vertex() { return n_++; }

  /// Adds a fresh internal edge {a, b} and returns its id.
  int add_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(a) + ")");
    int id = next_edge_id_++;
    edges_.push_back({id, a, b});
    return id;
  }

  void add_leg(LegLabel label, Vertex v) {
    check_vertex(v);
    if (label < 1) throw std::invalid_argument("leg labels start at x1");
    auto it = std::lower_bound(legs_.begin(), legs_.end(), label,
                               [](const ExternalLeg& l, LegLabel x) { return l.label < x; });
    if (it != legs_.end() && it->label == label)
      throw std::invalid_argument("duplicate leg label x" + std::to_string(label));
    legs_.insert(it, {label, v});
  }

  std::optional<Vertex> leg_vertex(LegLabel label) const {
    for (const auto& l : legs_)
      if (l.label == label) return l.vertex;
    return std::nullopt;
  }

  std::vector<LegLabel> legs_at(Vertex v) const {
    std::vector<LegLabel> out;
    for (const auto& l : legs_)
      if (l.vertex == v) out.push_back(l.label);
    return out;
  }

  void move_leg(LegLabel label, Vertex to) {
    check_vertex(to);
    for (auto& l : legs_)
      if (l.label == label) {
        l.vertex = to;
        return;
      }
    throw std::invalid_argument("no leg x" + std::to_string(label));
  }

  void clear_legs() { legs_.clear(); }

  /// Reattaches one end of an internal edge.
  void move_end(EdgeEnd end, Vertex to) {
    check_vertex(to);
    auto& e = edges_.at(end.edge);
    Vertex& slot = end.slot == 0 ? e.a : e.b;
    Vertex other = end.slot == 0 ? e.b : e.a;
    if (other == to) throw std::invalid_argument("moving an edge end would create a loop");
    slot = to;
  }

  /// Ends of internal edges sitting at v, in edge order.
  std::vector<EdgeEnd> ends_at(Vertex v) const {
    std::vector<EdgeEnd> out;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (edges_[e].a == v) out.push_back({e, 0});
      if (edges_[e].b == v) out.push_back({e, 1});
    }
    return out;
  }

  int degree(Vertex v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.a == v) + (e.b == v);
    return d;
  }

  /// Number of parallel internal edges joining a and b.
  int multiplicity(Vertex a, Vertex b) const {
    int c = 0;
    for (const auto& e : edges_)
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) ++c;
    return c;
  }

  /// Symmetric n x n matrix of edge multiplicities, row-major.
  std::vector<int> multiplicity_matrix() const {
    std::vector<int> m(static_cast<std::size_t>(n_) * n_, 0);
    for (const auto& e : edges_) {
      ++m[static_cast<std::size_t>(e.a) * n_ + e.b];
      ++m[static_cast<std::size_t>(e.b) * n_ + e.a];
    }
    return m;
  }

  /// Applies a vertex relabeling: vertex v becomes perm[v].
  Multigraph relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    Multigraph out = *this;
    for (auto& e : out.edges_) {
      e.a = perm[e.a];
      e.b = perm[e.b];
    }
    for (auto& l : out.legs_) l.vertex = perm[l.vertex];
    return out;
  }

  /// Copy with the internal edges listed in a different order (ids kept).
  Multigraph with_edge_order(std::span<const std::size_t> order) const {
    Multigraph out = *this;
    out.edges_.clear();
    for (auto idx : order) out.edges_.push_back(edges_.at(idx));
    if (out.edges_.size() != edges_.size()) throw std::invalid_argument("edge order size mismatch");
    return out;
  }

  /// Removes the internal edges at the given positions.
  void erase_edges(std::vector<std::size_t> positions) {
    std::sort(positions.rbegin(), positions.rend());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    for (auto p : positions) edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(p));
  }

  /// Merges vertices: new_index[v] gives the target index of v; the result
  /// has `new_n` vertices. Edges that would become loops are rejected.
  Multigraph remapped(std::span<const Vertex> new_index, int new_n) const {
    Multigraph out(new_n);
    out.next_edge_id_ = next_edge_id_;
    for (const auto& e : edges_) {
      Vertex a = new_index[e.a], b = new_index[e.b];
      if (a == b) throw std::invalid_argument("remapping produces a loop");
      out.edges_.push_back({e.id, a, b});
    }
    for (const auto& l : legs_) out.legs_.push_back({l.label, new_index[l.vertex]});
    return out;
  }

  friend bool operator==(const Multigraph& x, const Multigraph& y) {
    if (x.n_ != y.n_ || x.edges_.size() != y.edges_.size() || x.legs_.size() != y.legs_.size())
      return false;
    for (std::size_t i = 0; i < x.edges_.size(); ++i) {
      const auto &e = x.edges_[i], &f = y.edges_[i];
      if (std::minmax(e.a, e.b) != std::minmax(f.a, f.b)) return false;
    }
    for (std::size_t i = 0; i < x.legs_.size(); ++i)
      if (x.legs_[i].label != y.legs_[i].label || x.legs_[i].vertex != y.legs_[i].vertex) return false;
    return true;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  int n_;
  int next_edge_id_ = 0;
  std::vector<InternalEdge> edges_;
  std::vector<ExternalLeg> legs_;
};

/// P_2 thickened to `multiplicity` parallel edges.
inline Multigraph parallel_edges(int multiplicity) {
  Multigraph g(2);
  for (int i = 0; i < multiplicity; ++i) g.add_edge(0, 1);
  return g;
}

inline Multigraph cycle_graph(int n) {
  if (n == 2) return parallel_edges(2);
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Multigraph path_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace autgraph
