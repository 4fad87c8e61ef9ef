#pragma once

#include <string>

#include "cosetkit/acyclicity.hpp"
#include "cosetkit/coset_path.hpp"

namespace cosetkit {

/// Canonical word of v, "1" for the identity.
inline std::string format_vertex(const Group& G, Vertex v) {
  auto w = G.word_of(v);
  return w.empty() ? "1" : w;
}

inline std::string format_mask(const Group& G, GenMask m) {
  std::string s = "{";
  auto ls = G.mask_labels(m);
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + ls[i];
  return s + "}";
}

inline std::string format_coset(const Group& G, Coset c) {
  return "[" + format_vertex(G, c.rep) + "]_" + format_mask(G, c.mask);
}

inline std::string format_path(const Group& G, const CosetPath& p) {
  std::string s = format_vertex(G, p.vertices.front());
  for (std::size_t i = 0; i < p.length(); ++i)
    s += "," + format_mask(G, p.labels[i]) + "," + format_vertex(G, p.vertices[i + 1]);
  return s;
}

inline std::string format_cycle(const Group& G, const CosetCycle& c) {
  std::string s;
  for (std::size_t i = 0; i < c.length(); ++i)
    s += (i ? " " : "") + ("(" + format_vertex(G, c.vertices[i]) + "," + format_mask(G, c.labels[i]) + ")");
  return s;
}

}  // namespace cosetkit
