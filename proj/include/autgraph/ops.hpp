#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "autgraph/linear_combination.hpp"
#include "autgraph/multigraph.hpp"
#include "autgraph/rational.hpp"
#include "autgraph/structure.hpp"

namespace autgraph {

// ---------------------------------------------------------------------------
// Ordered partitions

enum class PartitionConstraint {
  unrestricted,
  all_parts_nonempty,
  per_group_split,  // two slots; every group must meet both
};

/// Assignments of `items` distinguishable tokens to `slots` ordered slots.
struct OrderedPartitionSpec {
  std::size_t items = 0;
  int slots = 1;
  PartitionConstraint constraint = PartitionConstraint::unrestricted;
  std::vector<int> group_of_item;  // per_group_split only
};

/// Calls f(std::span<const int> slot_of_item) once per admissible
/// assignment, in lexicographic order (last item varies fastest).
template <class F>
void for_each_ordered_partition(const OrderedPartitionSpec& spec, F&& f) {
  if (spec.slots < 1) throw std::invalid_argument("partition needs at least one slot");
  if (spec.constraint == PartitionConstraint::per_group_split) {
    if (spec.slots != 2) throw std::invalid_argument("per-group split uses exactly two slots");
    if (spec.group_of_item.size() != spec.items) throw std::invalid_argument("group list size mismatch");
  }

  auto admissible = [&](const std::vector<int>& slot) {
    switch (spec.constraint) {
      case PartitionConstraint::unrestricted:
        return true;
      case PartitionConstraint::all_parts_nonempty: {
        std::vector<bool> hit(spec.slots, false);
        for (int s : slot) hit[s] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
      }
      case PartitionConstraint::per_group_split: {
        int groups = 0;
        for (int g : spec.group_of_item) groups = std::max(groups, g + 1);
        std::vector<int> seen(groups, 0);
        for (std::size_t i = 0; i < slot.size(); ++i) seen[spec.group_of_item[i]] |= 1 << slot[i];
        return std::all_of(seen.begin(), seen.end(), [](int m) { return m == 3; });
      }
    }
    return false;
  };

  std::vector<int> slot(spec.items, 0);
  while (true) {
    if (admissible(slot)) f(std::span<const int>(slot));
    std::size_t pos = spec.items;
    while (pos > 0) {
      --pos;
      if (++slot[pos] < spec.slots) break;
      slot[pos] = 0;
      if (pos == 0) return;
    }
    if (spec.items == 0) return;
  }
}

// ---------------------------------------------------------------------------
// (i) leg distribution

namespace detail {

// Places each of `labels` (new or already present) on one of `targets`, in
// all |targets|^|labels| ways.
inline std::vector<Multigraph> distribute_legs(const Multigraph& g, std::span<const Vertex> targets,
                                               std::span<const LegLabel> labels) {
  std::vector<Multigraph> out;
  if (labels.empty()) {
    out.push_back(g);
    return out;
  }
  if (targets.empty()) return out;
  OrderedPartitionSpec spec{labels.size(), static_cast<int>(targets.size()), PartitionConstraint::unrestricted, {}};
  for_each_ordered_partition(spec, [&](std::span<const int> slot) {
    Multigraph h = g;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (h.leg_vertex(labels[i]))
        h.move_leg(labels[i], targets[slot[i]]);
      else
        h.add_leg(labels[i], targets[slot[i]]);
    }
    out.push_back(std::move(h));
  });
  return out;
}

}  // namespace detail

/// Every way of attaching the fresh legs `new_labels` to the vertices in
/// `targets`, one labeled graph per assignment.
inline std::vector<Multigraph> xi_distribute_terms(const Multigraph& g, std::span<const Vertex> targets,
                                                   std::span<const LegLabel> new_labels) {
  std::vector<LegLabel> seen(new_labels.begin(), new_labels.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("duplicate label among new legs");
  for (LegLabel l : new_labels)
    if (g.leg_vertex(l)) throw std::invalid_argument("label x" + std::to_string(l) + " already present");
  for (Vertex v : targets)
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("target vertex out of range");
  return detail::distribute_legs(g, targets, new_labels);
}

inline LinearCombination xi_distribute(const Multigraph& g, std::span<const Vertex> targets,
                                       std::span<const LegLabel> new_labels) {
  return combine(xi_distribute_terms(g, targets, new_labels));
}

/// Appends legs x_{s+1}..x_{s+count} over all vertices of every term.
inline LinearCombination add_legs_everywhere(const LinearCombination& lc, int count) {
  LinearCombination out;
  for (const auto& [key, term] : lc) {
    const auto& g = term.representative;
    std::vector<Vertex> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    LegLabel first = 1;
    for (const auto& l : g.legs()) first = std::max(first, l.label + 1);
    std::vector<LegLabel> labels;
    for (int i = 0; i < count; ++i) labels.push_back(first + i);
    for (auto& h : xi_distribute_terms(g, all, labels)) out.add(h, term.coefficient);
  }
  return out;
}

// ---------------------------------------------------------------------------
// (ii) edge addition

inline Multigraph add_edge(const Multigraph& g, Vertex i, Vertex j) {
  Multigraph h = g;
  h.add_edge(i, j);
  return h;
}

// ---------------------------------------------------------------------------
// (iii) vertex splitting

enum class SplitKind {
  any,        // both sides non-empty
  per_block,  // every block at the vertex meets both sides
};

/// Splits vertex i into i and a new vertex n, over every ordered partition of
/// i's internal edge ends into two non-empty parts; the legs of i are then
/// distributed over both. Outputs may be disconnected.
inline std::vector<Multigraph> split_vertex_terms(const Multigraph& g, Vertex i, SplitKind kind = SplitKind::any) {
  if (i < 0 || i >= g.vertex_count()) throw std::out_of_range("split vertex out of range");
  const auto ends = g.ends_at(i);
  std::vector<Multigraph> out;
  if (ends.size() < 2) return out;

  OrderedPartitionSpec spec{ends.size(), 2, PartitionConstraint::all_parts_nonempty, {}};
  if (kind == SplitKind::per_block) {
    const auto dec = block_decomposition(g);
    std::vector<int> block_of_edge(g.edge_count(), -1);
    for (std::size_t b = 0; b < dec.blocks.size(); ++b)
      for (auto e : dec.blocks[b].edges) block_of_edge[e] = static_cast<int>(b);
    // Renumber the blocks at i as groups 0..r-1.
    std::vector<int> group_of_block(dec.blocks.size(), -1);
    std::vector<int> group_size;
    for (const auto& end : ends) {
      int b = block_of_edge[end.edge];
      if (group_of_block[b] < 0) {
        group_of_block[b] = static_cast<int>(group_size.size());
        group_size.push_back(0);
      }
      ++group_size[group_of_block[b]];
      spec.group_of_item.push_back(group_of_block[b]);
    }
    if (std::any_of(group_size.begin(), group_size.end(), [](int c) { return c < 2; })) return out;
    spec.constraint = PartitionConstraint::per_group_split;
  }

  Multigraph base = g;
  const Vertex fresh = base.add_vertex();
  const auto labels = g.legs_at(i);
  const Vertex sides[] = {i, fresh};
  for_each_ordered_partition(spec, [&](std::span<const int> slot) {
    Multigraph h = base;
    for (std::size_t e = 0; e < ends.size(); ++e)
      if (slot[e] == 1) h.move_end(ends[e], fresh);
    for (auto& t : detail::distribute_legs(h, sides, labels)) out.push_back(std::move(t));
  });
  return out;
}

inline LinearCombination split_vertex(const Multigraph& g, Vertex i) {
  return combine(split_vertex_terms(g, i, SplitKind::any));
}

inline LinearCombination split_vertex_hat(const Multigraph& g, Vertex i) {
  return combine(split_vertex_terms(g, i, SplitKind::per_block));
}

/// 1 / (2 (rho - 1)!)
inline Rational q_prefactor(int rho) {
  if (rho < 1) throw std::invalid_argument("rho must be positive");
  return Rational(BigInt(1), 2 * factorial(rho - 1));
}

/// Split terms at i, each followed by rho fresh edges between i and the new
/// vertex. The prefactor is not applied.
inline std::vector<Multigraph> q_terms(const Multigraph& g, Vertex i, int rho, SplitKind kind) {
  if (rho < 1) throw std::invalid_argument("rho must be positive");
  auto terms = split_vertex_terms(g, i, kind);
  const Vertex fresh = g.vertex_count();
  for (auto& h : terms)
    for (int r = 0; r < rho; ++r) h.add_edge(i, fresh);
  return terms;
}

inline LinearCombination q_map(const Multigraph& g, Vertex i, int rho) {
  return combine(q_terms(g, i, rho, SplitKind::any), q_prefactor(rho));
}

inline LinearCombination q_hat_map(const Multigraph& g, Vertex i, int rho) {
  return combine(q_terms(g, i, rho, SplitKind::per_block), q_prefactor(rho));
}

// ---------------------------------------------------------------------------
// (iv)-(v) block insertion

enum class InsertKind {
  distribute,  // blocks at i spread over the inserted vertices in all ways
  bundled,     // blocks at i kept together on one inserted vertex
};

/// Replaces vertex i by a fresh copy of `block` (block vertex 0 takes index
/// i, the rest take n, n+1, ...), reattaches the blocks of g at i to the
/// inserted vertices and distributes the legs of i over all of them.
inline std::vector<Multigraph> insert_block_terms(const Multigraph& g, Vertex i, const Multigraph& block,
                                                  InsertKind kind = InsertKind::distribute) {
  if (i < 0 || i >= g.vertex_count()) throw std::out_of_range("insertion vertex out of range");
  if (block.leg_count() != 0) throw std::invalid_argument("inserted block must not carry legs");
  if (!is_biconnected(block)) throw std::invalid_argument("inserted block must be biconnected");

  const auto dec = block_decomposition(g);
  const auto& at_i = dec.blocks_at[i];
  const int block_n = block.vertex_count();

  Multigraph base = g;
  std::vector<Vertex> placed(block_n);
  placed[0] = i;
  for (int t = 1; t < block_n; ++t) placed[t] = base.add_vertex();
  for (const auto& e : block.edges()) base.add_edge(placed[e.a], placed[e.b]);

  // Ends at i, grouped by the block of g they belong to.
  std::vector<std::vector<EdgeEnd>> ends_of(at_i.size());
  for (std::size_t b = 0; b < at_i.size(); ++b)
    for (auto e : dec.blocks[at_i[b]].edges) {
      const auto& edge = g.edges()[e];
      if (edge.a == i) ends_of[b].push_back({e, 0});
      if (edge.b == i) ends_of[b].push_back({e, 1});
    }

  const auto labels = g.legs_at(i);
  std::vector<Multigraph> out;
  auto emit = [&](std::span<const int> slot) {
    Multigraph h = base;
    for (std::size_t b = 0; b < at_i.size(); ++b)
      if (slot[b] != 0)
        for (const auto& end : ends_of[b]) h.move_end(end, placed[slot[b]]);
    for (auto& t : detail::distribute_legs(h, placed, labels)) out.push_back(std::move(t));
  };

  if (kind == InsertKind::distribute) {
    for_each_ordered_partition(
        OrderedPartitionSpec{at_i.size(), block_n, PartitionConstraint::unrestricted, {}}, emit);
  } else {
    for (int t = 0; t < block_n; ++t) {
      std::vector<int> slot(at_i.size(), t);
      emit(slot);
    }
  }
  return out;
}

inline LinearCombination insert_block(const Multigraph& g, Vertex i, const Multigraph& block) {
  return combine(insert_block_terms(g, i, block, InsertKind::distribute));
}

inline LinearCombination insert_block_hat(const Multigraph& g, Vertex i, const Multigraph& block) {
  return combine(insert_block_terms(g, i, block, InsertKind::bundled));
}

/// Chooses the vertices an operator is applied at on a given representative.
class VertexSelector {
 public:
  static VertexSelector at(Vertex v) { return VertexSelector(Mode::fixed, v); }
  static VertexSelector all_vertices() { return VertexSelector(Mode::all, -1); }
  static VertexSelector unique_cut_vertex() { return VertexSelector(Mode::cut, -1); }

  std::vector<Vertex> select(const Multigraph& g) const {
    switch (mode_) {
      case Mode::fixed:
        return {vertex_};
      case Mode::all: {
        std::vector<Vertex> vs(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) vs[v] = v;
        return vs;
      }
      case Mode::cut: {
        auto cuts = block_decomposition(g).cut_vertices;
        if (cuts.size() != 1)
          throw std::logic_error("expected exactly one cut vertex, found " + std::to_string(cuts.size()));
        return cuts;
      }
    }
    return {};
  }

 private:
  enum class Mode { fixed, all, cut };
  VertexSelector(Mode m, Vertex v) : mode_(m), vertex_(v) {}
  Mode mode_;
  Vertex vertex_;
};

/// Bilinear extension: sum over block classes and target classes of
/// c_block * c_target * op(target, i, block).
inline LinearCombination apply_weighted(InsertKind kind, const LinearCombination& blocks, VertexSelector where,
                                        const LinearCombination& target) {
  LinearCombination out;
  for (const auto& [bkey, bterm] : blocks)
    for (const auto& [tkey, tterm] : target) {
      const Rational weight = bterm.coefficient * tterm.coefficient;
      for (Vertex i : where.select(tterm.representative))
        for (auto& h : insert_block_terms(tterm.representative, i, bterm.representative, kind)) out.add(h, weight);
    }
  return out;
}

inline LinearCombination apply_weighted(InsertKind kind, const LinearCombination& blocks, Vertex i,
                                        const LinearCombination& target) {
  return apply_weighted(kind, blocks, VertexSelector::at(i), target);
}

// ---------------------------------------------------------------------------
// (vi) block contraction

/// Collapses block `block_index` of the decomposition onto its lowest vertex
/// and recompacts the vertex indices.
inline Multigraph contract_block(const Multigraph& g, std::size_t block_index) {
  if (g.vertex_count() < 2) throw std::invalid_argument("nothing to contract on a single vertex");
  const auto dec = block_decomposition(g);
  if (block_index >= dec.blocks.size()) throw std::out_of_range("block index out of range");
  const auto& blk = dec.blocks[block_index];
  const Vertex keep = blk.vertices.front();

  std::vector<bool> merged(g.vertex_count(), false);
  for (Vertex v : blk.vertices)
    if (v != keep) merged[v] = true;
  std::vector<Vertex> index(g.vertex_count());
  int next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!merged[v]) index[v] = next++;
  for (Vertex v : blk.vertices) index[v] = index[keep];

  Multigraph reduced = g;
  reduced.erase_edges(blk.edges);
  return reduced.remapped(index, next);
}

// ---------------------------------------------------------------------------
// (vii) leg erasure

inline Multigraph erase_external(const Multigraph& g) {
  Multigraph h = g;
  h.clear_legs();
  return h;
}

}  // namespace autgraph
