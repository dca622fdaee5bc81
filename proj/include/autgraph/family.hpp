#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace autgraph {

enum class Family {
  biconn,           // biconnected
  aux,              // 2-edge-connected, one cut vertex shared by j blocks
  conn,             // connected
  two_edge,         // 2-edge-connected
  two_edge_cycles,  // 2-edge-connected, every block a cycle
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::biconn: return "biconn";
    case Family::aux: return "aux";
    case Family::conn: return "conn";
    case Family::two_edge: return "2edge";
    case Family::two_edge_cycles: return "2edge-cycles";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::biconn, Family::aux, Family::conn, Family::two_edge, Family::two_edge_cycles})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

/// Lower bounds on the vertex and cyclomatic numbers of every block; only
/// the 2-edge-connected families honour them.
struct BlockLimits {
  int min_block_n = 2;
  int min_block_k = 1;

  friend auto operator<=>(const BlockLimits&, const BlockLimits&) = default;
};

/// Memo key of one recursion result.
struct BetaKey {
  Family family = Family::biconn;
  int j = 0;  // block count, aux family only
  int n = 2;
  int k = 0;
  int s = 0;
  BlockLimits limits{};

  friend auto operator<=>(const BetaKey&, const BetaKey&) = default;

  std::string describe() const {
    std::string out(family_name(family));
    if (family == Family::aux) out += "_j" + std::to_string(j);
    out += "_n" + std::to_string(n) + "_k" + std::to_string(k) + "_s" + std::to_string(s);
    if (limits != BlockLimits{})
      out += "_bn" + std::to_string(limits.min_block_n) + "_bk" + std::to_string(limits.min_block_k);
    return out;
  }
};

}  // namespace autgraph
