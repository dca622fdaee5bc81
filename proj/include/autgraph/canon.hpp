#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "autgraph/multigraph.hpp"
#include "autgraph/rational.hpp"

namespace autgraph {

/// Isomorphism-complete encoding of a multigraph class. External labels are
/// respected: two graphs share a key iff some vertex bijection maps edge
/// multiplicities and leg labels onto each other.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 0xf]);
    }
    return out;
  }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string bytes_;
};

namespace detail {

inline char encode_byte(long value) {
  if (value < 0 || value > 255) throw std::length_error("graph too large for canonical encoding");
  return static_cast<char>(static_cast<unsigned char>(value));
}

// Per-vertex invariant used to split vertices into cells before the search.
struct VertexInvariant {
  std::vector<LegLabel> labels;
  int degree = 0;
  std::vector<int> neighbour_multiplicities;  // sorted, nonzero only

  friend auto operator<=>(const VertexInvariant&, const VertexInvariant&) = default;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Multigraph& g) : n_(g.vertex_count()), matrix_(g.multiplicity_matrix()) {
    std::vector<std::pair<VertexInvariant, Vertex>> inv;
    inv.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      VertexInvariant vi;
      vi.labels = g.legs_at(v);
      vi.degree = g.degree(v);
      for (Vertex u = 0; u < n_; ++u)
        if (int m = matrix_[static_cast<std::size_t>(v) * n_ + u]) vi.neighbour_multiplicities.push_back(m);
      std::sort(vi.neighbour_multiplicities.begin(), vi.neighbour_multiplicities.end());
      inv.emplace_back(std::move(vi), v);
    }
    std::sort(inv.begin(), inv.end());

    header_.push_back(encode_byte(n_));
    header_.push_back(encode_byte(static_cast<long>(g.edge_count())));
    header_.push_back(encode_byte(static_cast<long>(g.leg_count())));
    cell_of_position_.resize(n_);
    for (int p = 0; p < n_; ++p) {
      if (p == 0 || inv[p].first != inv[p - 1].first) cells_.emplace_back();
      cells_.back().push_back(inv[p].second);
      cell_of_position_[p] = static_cast<int>(cells_.size()) - 1;
      header_.push_back(encode_byte(static_cast<long>(inv[p].first.labels.size())));
      for (LegLabel l : inv[p].first.labels) header_.push_back(encode_byte(l));
      header_.push_back(encode_byte(inv[p].first.degree));
    }
  }

  CanonicalKey run() {
    order_.clear();
    used_.assign(n_, false);
    current_.clear();
    have_best_ = false;
    search(0);
    return CanonicalKey(header_ + best_);
  }

 private:
  int mult(Vertex a, Vertex b) const { return matrix_[static_cast<std::size_t>(a) * n_ + b]; }

  // Position q contributes the column (0..q-1, q) of the permuted matrix.
  // Branches whose prefix already exceeds the best complete encoding are cut.
  void search(int q) {
    if (q == n_) {
      if (!have_best_ || current_ < best_) best_ = current_;
      have_best_ = true;
      return;
    }
    for (Vertex v : cells_[cell_of_position_[q]]) {
      if (used_[v]) continue;
      std::size_t start = current_.size();
      for (int p = 0; p < q; ++p) current_.push_back(encode_byte(mult(order_[p], v)));
      if (have_best_ && current_.compare(0, current_.size(), best_, 0, current_.size()) > 0) {
        current_.resize(start);
        continue;
      }
      used_[v] = true;
      order_.push_back(v);
      search(q + 1);
      order_.pop_back();
      used_[v] = false;
      current_.resize(start);
    }
  }

  int n_;
  std::vector<int> matrix_;
  std::vector<std::vector<Vertex>> cells_;
  std::vector<int> cell_of_position_;
  std::string header_;
  std::vector<Vertex> order_;
  std::vector<bool> used_;
  std::string current_, best_;
  bool have_best_ = false;
};

}  // namespace detail

inline CanonicalKey canonical_key(const Multigraph& g) { return detail::CanonicalSearch(g).run(); }

inline bool are_isomorphic(const Multigraph& x, const Multigraph& y) {
  return canonical_key(x) == canonical_key(y);
}

/// Number of vertex permutations preserving edge multiplicities and every
/// vertex's leg labels. Plain enumeration over all n! permutations.
inline BigInt vertex_automorphism_count(const Multigraph& g) {
  const int n = g.vertex_count();
  const auto m = g.multiplicity_matrix();
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<bool> pinned(n, false);
  for (const auto& leg : g.legs()) pinned[leg.vertex] = true;

  BigInt count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (pinned[v] && perm[v] != v) ok = false;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if (m[static_cast<std::size_t>(a) * n + b] != m[static_cast<std::size_t>(perm[a]) * n + perm[b]]) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Product over vertex pairs of (multiplicity)!; loopless graphs with
/// labeled legs have no other edge symmetries.
inline BigInt edge_automorphism_count(const Multigraph& g) {
  const int n = g.vertex_count();
  const auto m = g.multiplicity_matrix();
  BigInt r = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) r *= factorial(m[static_cast<std::size_t>(a) * n + b]);
  return r;
}

/// |Aut| = |Aut_vertex| * |Aut_edge|.
inline BigInt aut_order(const Multigraph& g) { return vertex_automorphism_count(g) * edge_automorphism_count(g); }

}  // namespace autgraph
