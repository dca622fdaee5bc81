#pragma once

// Ground truth for the recursion: brute-force class enumeration and the
// automorphism-order oracle. Nothing here calls into recursion.hpp except
// the functions that explicitly take a Generator to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "autgraph/canon.hpp"
#include "autgraph/family.hpp"
#include "autgraph/io.hpp"
#include "autgraph/linear_combination.hpp"
#include "autgraph/multigraph.hpp"
#include "autgraph/ops.hpp"
#include "autgraph/recursion.hpp"
#include "autgraph/structure.hpp"

namespace autgraph {

inline constexpr int default_enumeration_bound = 7;
inline constexpr int max_enumeration_legs = 3;

/// Every block has exactly one independent cycle.
inline bool all_blocks_are_cycles(const Multigraph& g) {
  if (!is_connected(g) || g.vertex_count() < 2) return false;
  for (const auto& blk : block_decomposition(g).blocks)
    if (block_cyclomatic_number(blk) != 1) return false;
  return true;
}

/// Membership test for the class set a recursion family is meant to cover.
inline bool in_family(const BetaKey& family, const Multigraph& g) {
  switch (family.family) {
    case Family::biconn:
      return is_biconnected(g);
    case Family::conn:
      return g.vertex_count() >= 2 && is_connected(g);
    case Family::aux: {
      if (!is_two_edge_connected(g)) return false;
      const auto dec = block_decomposition(g);
      return dec.cut_vertices.size() == 1 && static_cast<int>(dec.blocks.size()) == family.j;
    }
    case Family::two_edge:
    case Family::two_edge_cycles: {
      if (!is_two_edge_connected(g)) return false;
      for (const auto& blk : block_decomposition(g).blocks) {
        const int bn = static_cast<int>(blk.vertices.size());
        const int bk = block_cyclomatic_number(blk);
        if (bn < family.limits.min_block_n || bk < family.limits.min_block_k) return false;
        if (family.family == Family::two_edge_cycles && bk != 1) return false;
      }
      return true;
    }
  }
  return false;
}

/// All classes of connected-or-not multigraphs with n vertices, n+k-1
/// internal edges and legs x1..xs that satisfy the family predicate. Built
/// from every multiplicity vector over the vertex pairs and every leg
/// placement, deduplicated by canonical key.
inline std::map<CanonicalKey, Multigraph> enumerate_classes(const BetaKey& family,
                                                            int bound = default_enumeration_bound) {
  const int n = family.n, k = family.k, s = family.s;
  if (n < 2 || k < 0 || s < 0) throw std::invalid_argument("enumeration needs n >= 2, k >= 0, s >= 0");
  if (n + k > bound)
    throw std::out_of_range("n + k = " + std::to_string(n + k) + " exceeds the enumeration bound " +
                            std::to_string(bound));
  if (s > max_enumeration_legs) throw std::out_of_range("enumeration supports at most 3 legs");

  const int m = k + n - 1;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

  std::map<CanonicalKey, Multigraph> classes;
  std::vector<int> mult(pairs.size(), 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t idx, int remaining) {
    if (idx + 1 == pairs.size() || remaining == 0) {
      if (idx < pairs.size()) mult[idx] = remaining;
      Multigraph base(n);
      for (std::size_t p = 0; p < pairs.size(); ++p)
        for (int c = 0; c < mult[p]; ++c) base.add_edge(pairs[p].first, pairs[p].second);
      if (idx < pairs.size()) mult[idx] = 0;
      if (!is_connected(base)) return;
      std::vector<int> at(s, 0);
      while (true) {
        Multigraph g = base;
        for (int l = 0; l < s; ++l) g.add_leg(l + 1, at[l]);
        if (in_family(family, g)) {
          auto key = canonical_key(g);
          if (!classes.count(key)) classes.emplace(std::move(key), std::move(g));
        }
        int pos = s - 1;
        while (pos >= 0 && ++at[pos] == n) at[pos--] = 0;
        if (pos < 0) break;
      }
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      mult[idx] = c;
      fill(idx + 1, remaining - c);
    }
    mult[idx] = 0;
  };
  fill(0, m);
  return classes;
}

struct BetaReportRow {
  std::string key_hex;
  Multigraph representative;
  Rational coefficient;
  Rational expected;  // 1/|Aut|
  bool in_family = false;
  bool match = false;
};

struct BetaReport {
  BetaKey key;
  std::size_t enumerated = 0;
  std::vector<BetaReportRow> rows;
  std::vector<Multigraph> missing;  // enumerated but absent from beta
  std::vector<std::string> extra;   // in beta but not enumerated (hex keys)
  bool pass = false;
};

/// Compares one recursion result with the enumerator and the |Aut| oracle.
inline BetaReport verify_beta(Generator& gen, const BetaKey& key, int bound = default_enumeration_bound) {
  BetaReport report;
  report.key = key;
  const auto classes = enumerate_classes(key, bound);
  const auto& beta = gen.beta(key);
  report.enumerated = classes.size();
  bool ok = true;
  for (const auto& [ckey, term] : beta) {
    BetaReportRow row{ckey.hex(), term.representative, term.coefficient,
                      Rational(BigInt(1), aut_order(term.representative)), false, false};
    row.in_family = in_family(key, term.representative);
    row.match = row.in_family && row.coefficient == row.expected;
    ok = ok && row.match;
    if (!classes.count(ckey)) report.extra.push_back(ckey.hex());
    report.rows.push_back(std::move(row));
  }
  for (const auto& [ckey, g] : classes)
    if (!beta.contains(ckey)) report.missing.push_back(g);
  report.pass = ok && report.extra.empty() && report.missing.empty();
  return report;
}

inline json to_json(const BetaReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"key", row.key_hex}, {"graph", to_json(row.representative)},
                    {"coefficient", to_fraction_string(row.coefficient)},
                    {"expected", to_fraction_string(row.expected)}, {"match", row.match}});
  json missing = json::array();
  for (const auto& g : r.missing) missing.push_back(to_json(g));
  return {{"family", std::string(family_name(r.key.family))}, {"j", r.key.j}, {"n", r.key.n}, {"k", r.key.k},
          {"s", r.key.s}, {"classes", r.enumerated}, {"rows", rows}, {"missing", missing}, {"extra", r.extra},
          {"pass", r.pass}};
}

// ---------------------------------------------------------------------------
// Lemma and property checks

struct LemmaCheck {
  explicit LemmaCheck(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }

  void record(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what();
  }
};

struct LemmaReport {
  int bound = 0;
  std::vector<LemmaCheck> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed(); });
  }
};

inline json to_json(const LemmaReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures},
                      {"first_failure", c.first_failure}, {"pass", c.passed()}});
  return {{"bound", r.bound}, {"checks", checks}, {"pass", r.pass()}};
}

namespace detail {

inline std::string describe(const Multigraph& g) { return to_json(g).dump(); }

// Representatives of every class in the family for n + k <= bound,
// 2 <= n, legs 0..max_s.
inline std::vector<Multigraph> sweep(Family family, int bound, int max_s, int min_k = 0) {
  std::vector<Multigraph> out;
  for (int s = 0; s <= max_s; ++s)
    for (int total = 2; total <= bound; ++total)
      for (int n = 2; n <= total; ++n) {
        const int k = total - n;
        if (k < min_k) continue;
        for (auto& [key, g] : enumerate_classes({family, 0, n, k, s, {}}, bound)) out.push_back(g);
      }
  return out;
}

inline std::vector<Multigraph> chain_of_bundles(int links) {
  Multigraph g(links + 1);
  for (int i = 0; i < links; ++i) {
    g.add_edge(i, i + 1);
    g.add_edge(i, i + 1);
  }
  return {g};
}

inline Multigraph two_triangles_sharing_vertex() {
  return Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

// Graphs with at least two cut vertices, all blocks cyclic.
inline std::vector<Multigraph> multi_cut_examples() {
  std::vector<Multigraph> out = chain_of_bundles(3);
  out.push_back(chain_of_bundles(4).front());
  // triangle - bundle - triangle
  out.push_back(Multigraph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}));
  Multigraph with_leg = chain_of_bundles(3).front();
  with_leg.add_leg(1, 1);
  out.push_back(with_leg);
  return out;
}

inline Multigraph random_relabel(const Multigraph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::size_t> order(g.edge_count());
  for (std::size_t e = 0; e < order.size(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  return g.relabeled(perm).with_edge_order(order);
}

template <class Op>
LinearCombination vertex_sum(const Multigraph& g, Op&& op) {
  LinearCombination out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out += op(g, v);
  return out;
}

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace detail

/// Runs the operator lemmas and recursion properties for n + k <= bound.
inline LemmaReport verify_lemmas(Generator& gen, int bound = 5, unsigned seed = 20240601,
                                 int relabelings = 50) {
  using detail::describe;
  LemmaReport report;
  report.bound = bound;

  const auto biconn_graphs = detail::sweep(Family::biconn, bound, 1, 1);
  const auto two_edge_graphs = detail::sweep(Family::two_edge, bound, 1, 1);
  const auto conn_graphs = detail::sweep(Family::conn, bound, 1);
  const auto leg_free_blocks = detail::sweep(Family::biconn, 4, 0, 1);

  // Lemma 1: splitting plus rho new edges keeps biconnected graphs biconnected.
  {
    LemmaCheck c{"q preserves biconnectivity"};
    for (const auto& g : biconn_graphs)
      for (Vertex i = 0; i < g.vertex_count(); ++i)
        for (int rho = 1; rho <= 2; ++rho)
          for (const auto& h : q_terms(g, i, rho, SplitKind::any))
            c.record(is_biconnected(h), [&] { return describe(g) + " -> " + describe(h); });
    report.checks.push_back(c);
  }

  std::vector<Multigraph> single_cut{detail::two_triangles_sharing_vertex()};
  for (const auto& g : two_edge_graphs)
    if (block_decomposition(g).cut_vertices.size() == 1) single_cut.push_back(g);

  // Lemma 2(a): the block-respecting split at the lone cut vertex yields
  // biconnected graphs.
  {
    LemmaCheck c{"q-hat at the single cut vertex yields biconnected graphs"};
    for (const auto& g : single_cut) {
      Vertex cut = block_decomposition(g).cut_vertices.front();
      for (int rho = 1; rho <= 2; ++rho)
        for (const auto& h : q_terms(g, cut, rho, SplitKind::per_block))
          c.record(is_biconnected(h), [&] { return describe(g) + " -> " + describe(h); });
    }
    report.checks.push_back(c);
  }

  // Lemma 2(b): with two or more cut vertices, q - q-hat has no biconnected
  // class in its support. A single new edge can be a bridge there, so
  // 2-edge-connectivity of the output is not part of the check.
  {
    LemmaCheck c{"q minus q-hat avoids biconnected classes (>= 2 cut vertices)"};
    std::vector<Multigraph> graphs = detail::multi_cut_examples();
    for (const auto& g : two_edge_graphs)
      if (block_decomposition(g).cut_vertices.size() >= 2) graphs.push_back(g);
    for (const auto& g : graphs)
      for (Vertex i = 0; i < g.vertex_count(); ++i)
        for (int rho = 1; rho <= 2; ++rho) {
          const auto diff = q_map(g, i, rho) - q_hat_map(g, i, rho);
          for (const auto& [key, term] : diff)
            c.record(term.coefficient > 0 && is_connected(term.representative) &&
                         !is_biconnected(term.representative),
                     [&] { return describe(g) + " at " + std::to_string(i) + " -> " + describe(term.representative); });
        }
    report.checks.push_back(c);
  }

  // Lemma 3: inserting a cyclic block keeps 2-edge-connectivity.
  {
    LemmaCheck c{"block insertion preserves 2-edge-connectivity"};
    for (const auto& g : two_edge_graphs)
      for (const auto& b : leg_free_blocks)
        for (Vertex i = 0; i < g.vertex_count(); ++i)
          for (const auto& h : insert_block_terms(g, i, b, InsertKind::distribute))
            c.record(is_two_edge_connected(h), [&] { return describe(g) + " + " + describe(b) + " -> " + describe(h); });
    report.checks.push_back(c);
  }

  // Equivariance of the vertex-summed and cut-vertex operators.
  {
    LemmaCheck c{"operator equivariance under relabeling"};
    std::mt19937 rng(seed);
    std::vector<Multigraph> pool;
    for (const auto& g : conn_graphs)
      if (g.vertex_count() <= 6) pool.push_back(g);
    const Multigraph blocks[] = {parallel_edges(1), parallel_edges(2), cycle_graph(3)};
    for (int r = 0; r < relabelings && !pool.empty(); ++r) {
      const auto& g = pool[rng() % pool.size()];
      const auto h = detail::random_relabel(g, rng);
      const int rho = 1 + static_cast<int>(rng() % 2);
      const auto& b = blocks[rng() % 3];
      auto qs = [rho](const Multigraph& x, Vertex v) { return q_map(x, v, rho); };
      auto ins = [&b](const Multigraph& x, Vertex v) { return insert_block(x, v, b); };
      c.record(detail::vertex_sum(g, qs) == detail::vertex_sum(h, qs),
               [&] { return "q sum differs for " + describe(g) + " vs " + describe(h); });
      c.record(detail::vertex_sum(g, ins) == detail::vertex_sum(h, ins),
               [&] { return "insert sum differs for " + describe(g) + " vs " + describe(h); });
    }
    for (int r = 0; r < relabelings && !single_cut.empty(); ++r) {
      const auto& g = single_cut[rng() % single_cut.size()];
      const auto h = detail::random_relabel(g, rng);
      const Vertex cg = block_decomposition(g).cut_vertices.front();
      const Vertex ch = block_decomposition(h).cut_vertices.front();
      const auto& b = blocks[1 + rng() % 2];
      c.record(q_hat_map(g, cg, 1) == q_hat_map(h, ch, 1),
               [&] { return "q-hat differs for " + describe(g) + " vs " + describe(h); });
      c.record(insert_block_hat(g, cg, b) == insert_block_hat(h, ch, b),
               [&] { return "insert-hat differs for " + describe(g) + " vs " + describe(h); });
    }
    report.checks.push_back(c);
  }

  // Term counts and cyclomatic bookkeeping.
  {
    LemmaCheck split{"split term count 2^d - 2 (times 2^legs)"};
    LemmaCheck insert{"insertion term count n'^|B_i| (times n'^legs)"};
    LemmaCheck books{"vertex and cyclomatic bookkeeping"};
    for (const auto& g : conn_graphs) {
      const int k = cyclomatic_number(g);
      const auto dec = block_decomposition(g);
      for (Vertex i = 0; i < g.vertex_count(); ++i) {
        const std::size_t d = g.ends_at(i).size();
        const std::size_t legs = g.legs_at(i).size();
        const auto terms = split_vertex_terms(g, i);
        const std::size_t expect = d < 2 ? 0 : (detail::ipow(2, d) - 2) * detail::ipow(2, legs);
        split.record(terms.size() == expect, [&] { return describe(g) + " at " + std::to_string(i); });
        for (const auto& h : q_terms(g, i, 2, SplitKind::any))
          books.record(h.vertex_count() == g.vertex_count() + 1 && cyclomatic_number(h) == k + 1,
                       [&] { return "q: " + describe(h); });
        for (const auto& b : {parallel_edges(2), cycle_graph(3)}) {
          const std::size_t nb = static_cast<std::size_t>(b.vertex_count());
          const std::size_t blocks_here = dec.blocks_at[i].size();
          const auto ins = insert_block_terms(g, i, b, InsertKind::distribute);
          insert.record(ins.size() == detail::ipow(nb, blocks_here) * detail::ipow(nb, legs),
                        [&] { return describe(g) + " at " + std::to_string(i); });
          insert.record(insert_block_terms(g, i, b, InsertKind::bundled).size() == nb * detail::ipow(nb, legs),
                        [&] { return "bundled " + describe(g) + " at " + std::to_string(i); });
          const int kb = cyclomatic_number(b);
          for (const auto& h : ins) {
            bool ok = h.vertex_count() == g.vertex_count() + b.vertex_count() - 1 && cyclomatic_number(h) == k + kb;
            // Contracting the inserted block gives back g's class.
            const auto hdec = block_decomposition(h);
            const auto last = h.edges()[h.edge_count() - 1].id;
            for (std::size_t bi = 0; bi < hdec.blocks.size(); ++bi)
              for (auto e : hdec.blocks[bi].edges)
                if (h.edges()[e].id == last) ok = ok && are_isomorphic(contract_block(h, bi), g);
            books.record(ok, [&] { return "insert: " + describe(h); });
          }
        }
      }
    }
    report.checks.push_back(split);
    report.checks.push_back(insert);
    report.checks.push_back(books);
  }

  // Leg factorization: beta_conn(n,k,s+s') = xi(beta_conn(n,k,s)).
  {
    LemmaCheck c{"leg factorization of beta_conn"};
    for (int n = 2; n <= std::min(4, bound); ++n)
      for (int k = 0; k <= 1 && n + k <= bound; ++k)
        for (int s = 0; s <= 1; ++s)
          for (int extra = 1; extra <= 2; ++extra)
            c.record(gen.conn(n, k, s + extra) == add_legs_everywhere(gen.conn(n, k, s), extra), [&] {
              return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " s=" + std::to_string(s) +
                     " s'=" + std::to_string(extra);
            });
    report.checks.push_back(c);
  }

  // Cross-family restrictions.
  {
    LemmaCheck c{"restrictions of beta_conn reproduce beta_biconn and beta_2edge"};
    for (int total = 2; total <= bound; ++total)
      for (int n = 2; n <= total; ++n) {
        const int k = total - n;
        const auto& conn = gen.conn(n, k, 0);
        auto tag = [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); };
        c.record(conn.filtered(is_biconnected) == gen.biconn(n, k, 0), tag);
        if (k >= 1) {
          c.record(conn.filtered(is_two_edge_connected) == gen.two_edge(n, k, 0), tag);
          c.record(gen.two_edge(n, k, 0).filtered(all_blocks_are_cycles) == gen.two_edge_cycles(n, k, 0), tag);
        }
      }
    report.checks.push_back(c);
  }
  return report;
}

inline void write_table(std::ostream& os, const LemmaReport& r) {
  for (const auto& c : r.checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
    if (c.failures) os << ", " << c.failures << " failures; first: " << c.first_failure;
    os << ")\n";
  }
}

}  // namespace autgraph
