#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "autgraph/canon.hpp"
#include "autgraph/multigraph.hpp"
#include "autgraph/rational.hpp"

namespace autgraph {

/// Formal Q-linear combination of isomorphism classes. Terms iterate in key
/// order; each class keeps the first representative that was added for it.
class LinearCombination {
 public:
  struct Term {
    Rational coefficient;
    Multigraph representative;
  };
  using Map = std::map<CanonicalKey, Term>;
  using const_iterator = Map::const_iterator;

  LinearCombination() = default;

  void add(const Multigraph& g, const Rational& coefficient) { add(canonical_key(g), g, coefficient); }

  void add(const CanonicalKey& key, const Multigraph& representative, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, Term{coefficient, representative});
      return;
    }
    it->second.coefficient += coefficient;
    if (it->second.coefficient == 0) terms_.erase(it);
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, term] : other.terms_) add(key, term.representative, term.coefficient);
    return *this;
  }

  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [key, term] : other.terms_) add(key, term.representative, -term.coefficient);
    return *this;
  }

  LinearCombination& operator*=(const Rational& factor) {
    if (factor == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, term] : terms_) term.coefficient *= factor;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination x, const LinearCombination& y) { return x += y; }
  friend LinearCombination operator-(LinearCombination x, const LinearCombination& y) { return x -= y; }
  friend LinearCombination operator*(LinearCombination x, const Rational& c) { return x *= c; }
  friend LinearCombination operator*(const Rational& c, LinearCombination x) { return x *= c; }

  /// Coefficient-for-coefficient equality; representatives are ignored.
  friend bool operator==(const LinearCombination& x, const LinearCombination& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (auto i = x.terms_.begin(), j = y.terms_.begin(); i != x.terms_.end(); ++i, ++j)
      if (i->first != j->first || i->second.coefficient != j->second.coefficient) return false;
    return true;
  }

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  bool contains(const CanonicalKey& key) const { return terms_.count(key) != 0; }

  Rational coefficient(const CanonicalKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second.coefficient;
  }
  Rational coefficient(const Multigraph& g) const { return coefficient(canonical_key(g)); }

  Rational total() const {
    Rational t = 0;
    for (const auto& [key, term] : terms_) t += term.coefficient;
    return t;
  }

  /// Keeps the classes whose representative satisfies `pred`.
  LinearCombination filtered(const std::function<bool(const Multigraph&)>& pred) const {
    LinearCombination out;
    for (const auto& [key, term] : terms_)
      if (pred(term.representative)) out.terms_.emplace(key, term);
    return out;
  }

 private:
  Map terms_;
};

/// Merges a list of labeled graphs (each with the same weight) into classes.
template <class Range>
LinearCombination combine(const Range& graphs, const Rational& weight = 1) {
  LinearCombination out;
  for (const auto& g : graphs) out.add(g, weight);
  return out;
}

}  // namespace autgraph
