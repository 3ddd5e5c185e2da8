#pragma once

#include <string>

#include "cgk/decomp.hpp"
#include "cgk/graph.hpp"

namespace cgk {

namespace detail {

inline std::string block_label(long n) {
  return n == 1 ? "C" : "M_{" + std::to_string(n) + "}";
}

inline std::string corr_label(long n_from, long n_to, long mult) {
  std::string s;
  if (n_from == 1 && n_to == 1) s = "C";
  else if (n_from == 1) s = "C^{" + std::to_string(n_to) + "}";
  else if (n_to == 1) s = "C^{" + std::to_string(n_from) + "}";
  else if (n_from == n_to) s = "M_{" + std::to_string(n_from) + "}";
  else s = "M_{" + std::to_string(n_from) + "," + std::to_string(n_to) + "}";
  if (mult > 1) s += " (×" + std::to_string(mult) + ")";
  return s;
}

}  // namespace detail

/// Graph of correspondences as DOT, vertices labelled by their matrix algebra
/// and edges by the minimal correspondence with a multiplicity suffix.
inline std::string emit_dot(const CorrGraph& cg) {
  std::string s = "digraph corr {\n";
  for (const Block& b : cg.blocks)
    s += "  b" + std::to_string(b.index) + " [label=\"" + detail::block_label(b.size) + "\"];\n";
  for (const CorrEdge& e : cg.edges)
    s += "  b" + std::to_string(e.from_block) + " -> b" + std::to_string(e.to_block) +
         " [label=\"" +
         detail::corr_label(cg.blocks[e.from_block].size, cg.blocks[e.to_block].size, e.mult) +
         "\"];\n";
  s += "}\n";
  return s;
}

/// Plain multigraph DOT.
inline std::string emit_dot(const Graph& g) {
  std::string s = "digraph G {\n";
  for (const auto& v : g.vertices) s += "  \"" + v + "\";\n";
  for (const auto& e : g.edges)
    s += "  \"" + g.vertices[e.src] + "\" -> \"" + g.vertices[e.rng] + "\";\n";
  s += "}\n";
  return s;
}

}  // namespace cgk
