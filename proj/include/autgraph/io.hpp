#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "autgraph/canon.hpp"
#include "autgraph/linear_combination.hpp"
#include "autgraph/multigraph.hpp"
#include "autgraph/rational.hpp"
#include "autgraph/structure.hpp"

namespace autgraph {

using json = nlohmann::json;

namespace detail {

// 1-based endpoint pairs in stored edge order.
inline std::vector<std::pair<int, int>> edge_pairs(const Multigraph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges()) pairs.emplace_back(e.a + 1, e.b + 1);
  return pairs;
}

inline LegLabel parse_label(const std::string& text) {
  if (text.size() < 2 || text[0] != 'x') throw std::invalid_argument("leg label '" + text + "' is not of the form x<i>");
  for (std::size_t p = 1; p < text.size(); ++p)
    if (text[p] < '0' || text[p] > '9') throw std::invalid_argument("leg label '" + text + "' is not of the form x<i>");
  int value = std::stoi(text.substr(1));
  if (value < 1) throw std::invalid_argument("leg labels start at x1");
  return value;
}

}  // namespace detail

/// {"n": 3, "edges": [[1,2],[1,2],[2,3]], "external": [{"label": "x1", "vertex": 1}]}
/// Vertices are 1-based. Edges keep their stored order; legs are in label order.
inline json to_json(const Multigraph& g) {
  json edges = json::array();
  for (auto [a, b] : detail::edge_pairs(g)) edges.push_back({a, b});
  json legs = json::array();
  for (const auto& l : g.legs()) legs.push_back({{"label", "x" + std::to_string(l.label)}, {"vertex", l.vertex + 1}});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}, {"external", std::move(legs)}};
}

/// Inverse of to_json. Edge ids follow input order. Rejects loops,
/// out-of-range vertices, and leg sets other than exactly x1..xs.
inline Multigraph multigraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n")) throw std::invalid_argument("graph JSON needs an object with \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("graph JSON: n must be positive");
  Multigraph g(n);
  auto vertex = [n](const json& v) {
    int x = v.get<int>();
    if (x < 1 || x > n) throw std::invalid_argument("graph JSON: vertex " + std::to_string(x) + " out of range");
    return x - 1;
  };
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: edges are pairs");
      Vertex a = vertex(e[0]), b = vertex(e[1]);
      if (a == b) throw std::invalid_argument("graph JSON: loop at vertex " + std::to_string(a + 1));
      g.add_edge(a, b);
    }
  if (j.contains("external")) {
    for (const auto& l : j.at("external"))
      g.add_leg(detail::parse_label(l.at("label").get<std::string>()), vertex(l.at("vertex")));
    const auto legs = g.legs();
    for (std::size_t p = 0; p < legs.size(); ++p)
      if (legs[p].label != static_cast<LegLabel>(p + 1))
        throw std::invalid_argument("graph JSON: leg labels must be exactly x1..x" + std::to_string(legs.size()));
  }
  return g;
}

/// Records {graph fields..., "coefficient": "p/q", "key": hex} in key order.
inline json to_json(const LinearCombination& lc) {
  json out = json::array();
  for (const auto& [key, term] : lc) {
    json rec = to_json(term.representative);
    rec["coefficient"] = to_fraction_string(term.coefficient);
    rec["key"] = key.hex();
    out.push_back(std::move(rec));
  }
  return out;
}

inline LinearCombination linear_combination_from_json(const json& records) {
  if (!records.is_array()) throw std::invalid_argument("expected a JSON array of terms");
  LinearCombination out;
  for (const auto& rec : records) {
    Multigraph g = multigraph_from_json(rec);
    auto key = canonical_key(g);
    if (rec.contains("key") && rec.at("key").get<std::string>() != key.hex())
      throw std::runtime_error("stored key does not match the graph it labels");
    out.add(key, g, parse_fraction(rec.at("coefficient").get<std::string>()));
  }
  return out;
}

/// One DOT graph per term. Legs are point nodes labeled x_i.
inline void write_dot(std::ostream& os, const LinearCombination& lc) {
  std::size_t index = 0;
  for (const auto& [key, term] : lc) {
    ++index;
    const auto& g = term.representative;
    const auto coeff = to_fraction_string(term.coefficient);
    os << "// term " << index << ", coefficient " << coeff << "\n";
    os << "graph term" << index << " {\n";
    os << "  label=\"" << coeff << "\";\n";
    for (int v = 1; v <= g.vertex_count(); ++v) os << "  v" << v << ";\n";
    for (auto [a, b] : detail::edge_pairs(g)) os << "  v" << a << " -- v" << b << ";\n";
    for (const auto& l : g.legs()) {
      os << "  x" << l.label << " [shape=point, xlabel=\"x" << l.label << "\"];\n";
      os << "  v" << l.vertex + 1 << " -- x" << l.label << ";\n";
    }
    os << "}\n";
  }
}

/// Aligned text table: index, coefficient, edge list, legs.
inline void write_table(std::ostream& os, const LinearCombination& lc) {
  std::vector<std::vector<std::string>> rows{{"#", "coefficient", "n", "edges", "legs"}};
  std::size_t index = 0;
  for (const auto& [key, term] : lc) {
    const auto& g = term.representative;
    std::ostringstream edges, legs;
    bool first = true;
    for (auto [a, b] : detail::edge_pairs(g)) {
      edges << (first ? "" : " ") << a << "-" << b;
      first = false;
    }
    first = true;
    for (const auto& l : g.legs()) {
      legs << (first ? "" : " ") << "x" << l.label << "@" << l.vertex + 1;
      first = false;
    }
    rows.push_back({std::to_string(++index), to_fraction_string(term.coefficient), std::to_string(g.vertex_count()),
                    edges.str().empty() ? "-" : edges.str(), legs.str().empty() ? "-" : legs.str()});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << line << "\n";
  }
}

}  // namespace autgraph
