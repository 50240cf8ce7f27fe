#pragma once

#include <sstream>
#include <string>

#include "epg/graph.hpp"

namespace epg {

/// GraphViz export of an enhanced power graph. Vertices are labeled
/// "g<index>/o<order>"; edges are listed once, ordered by index pair.
inline std::string to_dot(const EpgGraph& e) {
  const GroupTable& g = e.group();
  std::string name;
  for (char c : g.label()) {
    if (c == '"' || c == '\\') name.push_back('\\');
    name.push_back(c);
  }
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (element_t v = 1; v < g.size(); ++v)
    out << "  g" << v << " [label=\"g" << v << "/o" << g.order_of(v) << "\"];\n";
  for (element_t x = 1; x < g.size(); ++x)
    for (element_t y = x + 1; y < g.size(); ++y)
      if (e.adjacent(x, y)) out << "  g" << x << " -- g" << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace epg
