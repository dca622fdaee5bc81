#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "autgraph/family.hpp"
#include "autgraph/linear_combination.hpp"
#include "autgraph/multigraph.hpp"
#include "autgraph/ops.hpp"
#include "autgraph/rational.hpp"
#include "autgraph/structure.hpp"

namespace autgraph {

/// Persistent storage for recursion results (see cache.hpp).
class BetaStore {
 public:
  virtual ~BetaStore() = default;
  virtual std::optional<LinearCombination> load(const BetaKey& key) = 0;
  virtual void save(const BetaKey& key, const LinearCombination& value) = 0;
};

struct GeneratorConfig {
  unsigned jobs = 1;
  std::shared_ptr<BetaStore> store;
};

namespace detail {

using Task = std::function<void(LinearCombination&)>;

// Runs every task into its own slot, then merges the slots in task order.
// The merged result, including which representative each class keeps, does
// not depend on the worker count.
inline LinearCombination run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<LinearCombination> slots(tasks.size());
  const unsigned workers = std::min<std::size_t>(std::max(1u, jobs), tasks.size());
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) tasks[t](slots[t]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          try {
            for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) tasks[t](slots[t]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  LinearCombination out;
  for (const auto& s : slots) out += s;
  return out;
}

}  // namespace detail

/// Memoized evaluation of the recursion families. Every result is a linear
/// combination over isomorphism classes whose coefficient for a class equals
/// the total weight the recursion gives to graphs in that class.
class Generator {
 public:
  explicit Generator(GeneratorConfig config = {}) : config_(std::move(config)) {}

  const LinearCombination& biconn(int n, int k, int s) { return beta({Family::biconn, 0, n, k, s, {}}); }
  const LinearCombination& aux(int j, int n, int k, int s) { return beta({Family::aux, j, n, k, s, {}}); }
  const LinearCombination& conn(int n, int k, int s) { return beta({Family::conn, 0, n, k, s, {}}); }
  const LinearCombination& two_edge(int n, int k, int s, BlockLimits limits = {}) {
    return beta({Family::two_edge, 0, n, k, s, limits});
  }
  const LinearCombination& two_edge_cycles(int n, int k, int s, BlockLimits limits = {}) {
    return beta({Family::two_edge_cycles, 0, n, k, s, limits});
  }

  const LinearCombination& beta(BetaKey key) {
    validate(key);
    if (key.family != Family::two_edge && key.family != Family::two_edge_cycles) key.limits = {};
    if (key.family != Family::aux) key.j = 0;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::optional<LinearCombination> value;
    if (config_.store) value = config_.store->load(key);
    if (!value) {
      value = compute(key);
      if (config_.store) config_.store->save(key, *value);
    }
    return memo_.emplace(key, std::move(*value)).first->second;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  static void validate(const BetaKey& key) {
    if (key.n < 2) throw std::invalid_argument("vertex number must be at least 2");
    if (key.k < 0) throw std::invalid_argument("cyclomatic number must be non-negative");
    if (key.s < 0) throw std::invalid_argument("leg count must be non-negative");
    if (key.family == Family::aux && key.j < 2) throw std::invalid_argument("block count j must be at least 2");
    if (key.limits.min_block_n < 2) throw std::invalid_argument("minimum block vertex number must be at least 2");
    if (key.limits.min_block_k < 1) throw std::invalid_argument("minimum block cyclomatic number must be at least 1");
  }

  LinearCombination compute(const BetaKey& key) {
    switch (key.family) {
      case Family::biconn: return compute_biconn(key.n, key.k, key.s);
      case Family::aux: return compute_aux(key.j, key.n, key.k, key.s);
      case Family::conn: return compute_conn(key.n, key.k, key.s);
      case Family::two_edge: return compute_two_edge(key.n, key.k, key.s, key.limits, false);
      case Family::two_edge_cycles: return compute_two_edge(key.n, key.k, key.s, key.limits, true);
    }
    throw std::logic_error("unhandled family");
  }

  static std::vector<LegLabel> first_labels(int s) {
    std::vector<LegLabel> labels(s);
    for (int l = 0; l < s; ++l) labels[l] = l + 1;
    return labels;
  }

  // Queues one task per (term, vertex) applying the rho-fold splitting map.
  void queue_splits(std::vector<detail::Task>& tasks, const LinearCombination& source, int rho, SplitKind kind,
                    VertexSelector where, const Rational& factor) {
    const Rational weight = factor * q_prefactor(rho);
    for (const auto& [key, term] : source)
      for (Vertex i : where.select(term.representative))
        tasks.push_back([&g = term.representative, c = weight * term.coefficient, i, rho, kind](LinearCombination& out) {
          for (const auto& h : q_terms(g, i, rho, kind)) out.add(h, c);
        });
  }

  // Queues one task per (block class, term, vertex) applying block insertion.
  void queue_insertions(std::vector<detail::Task>& tasks, const LinearCombination& blocks,
                        const LinearCombination& source, InsertKind kind, VertexSelector where,
                        const Rational& factor) {
    for (const auto& [bkey, bterm] : blocks)
      for (const auto& [key, term] : source)
        for (Vertex i : where.select(term.representative))
          tasks.push_back([&g = term.representative, &b = bterm.representative,
                           c = factor * bterm.coefficient * term.coefficient, i, kind](LinearCombination& out) {
            for (const auto& h : insert_block_terms(g, i, b, kind)) out.add(h, c);
          });
  }

  LinearCombination compute_biconn(int n, int k, int s) {
    if (n == 2) {
      const Multigraph bundle = parallel_edges(k + 1);
      const Vertex both[] = {0, 1};
      const auto labels = first_labels(s);
      return combine(xi_distribute_terms(bundle, both, labels),
                     Rational(BigInt(1), 2 * factorial(k + 1)));
    }
    if (k == 0) return {};

    const Rational pre(BigInt(1), BigInt(k + n - 1));
    std::vector<detail::Task> tasks;
    for (int rho = 1; rho <= k + 1; ++rho)
      queue_splits(tasks, biconn(n - 1, k + 1 - rho, s), rho, SplitKind::any, VertexSelector::all_vertices(), pre);
    for (int j = 2; j <= n - 2; ++j)
      for (int rho = 1; rho <= k - j + 1; ++rho)
        queue_splits(tasks, aux(j, n - 1, k + 1 - rho, s), rho, SplitKind::per_block,
                     VertexSelector::unique_cut_vertex(), pre);
    return detail::run_tasks(tasks, config_.jobs);
  }

  LinearCombination compute_aux(int j, int n, int k, int s) {
    if (n < j + 1 || k < j) return {};
    const Rational pre(BigInt(1), BigInt(k + n - 1));
    std::vector<detail::Task> tasks;
    for (int kb = 1; kb <= k - 1; ++kb)
      for (int nb = 2; nb <= n - 1; ++nb) {
        const Rational factor = pre * (kb + nb - 1);
        const auto& blocks = biconn(nb, kb, 0);
        if (j == 2)
          queue_insertions(tasks, blocks, biconn(n - nb + 1, k - kb, s), InsertKind::distribute,
                           VertexSelector::all_vertices(), factor);
        else
          queue_insertions(tasks, blocks, aux(j - 1, n - nb + 1, k - kb, s), InsertKind::bundled,
                           VertexSelector::unique_cut_vertex(), factor);
      }
    return detail::run_tasks(tasks, config_.jobs);
  }

  LinearCombination compute_conn(int n, int k, int s) {
    LinearCombination out = biconn(n, k, s);
    if (n == 2) return out;
    const Rational pre(BigInt(1), BigInt(k + n - 1));
    std::vector<detail::Task> tasks;
    for (int kb = 0; kb <= k; ++kb)
      for (int nb = 2; nb <= n - 1; ++nb)
        queue_insertions(tasks, biconn(nb, kb, 0), conn(n - nb + 1, k - kb, s), InsertKind::distribute,
                         VertexSelector::all_vertices(), pre * (kb + nb - 1));
    out += detail::run_tasks(tasks, config_.jobs);
    return out;
  }

  // Block sums run over nb in [min_n, n - min_n + 1] and kb in
  // [min_k, k - min_k]; the cycle variant only admits kb = 1.
  LinearCombination compute_two_edge(int n, int k, int s, BlockLimits limits, bool cycles) {
    if (k < 1) return {};
    const BetaKey self{cycles ? Family::two_edge_cycles : Family::two_edge, 0, n, k, s, limits};
    LinearCombination out;
    if (n >= limits.min_block_n && k >= limits.min_block_k && (!cycles || k == 1)) out = biconn(n, k, s);
    if (n == 2) return out;

    const Rational pre(BigInt(1), BigInt(k + n - 1));
    const int kb_max = cycles ? std::min(1, k - limits.min_block_k) : k - limits.min_block_k;
    std::vector<detail::Task> tasks;
    for (int kb = limits.min_block_k; kb <= kb_max; ++kb)
      for (int nb = limits.min_block_n; nb <= std::min(n - 1, n - limits.min_block_n + 1); ++nb) {
        BetaKey rest = self;
        rest.n = n - nb + 1;
        rest.k = k - kb;
        queue_insertions(tasks, biconn(nb, kb, 0), beta(rest), InsertKind::distribute,
                         VertexSelector::all_vertices(), pre * (kb + nb - 1));
      }
    out += detail::run_tasks(tasks, config_.jobs);
    return out;
  }

  GeneratorConfig config_;
  std::map<BetaKey, LinearCombination> memo_;
};

}  // namespace autgraph
