#pragma once
// Graphviz DOT export. Digraphs and orientations label arcs with their edge
// ids; auxiliary digraphs label vertices v3 / t5 / h5 / x5_2 / m5 and shade
// the gadget vertices.

#include <sstream>
#include <string>

#include "dporient/aux_digraph.hpp"
#include "dporient/graph.hpp"

namespace dporient {

inline std::string to_dot(const Digraph& d, const std::string& name = "D") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 1; v <= d.vertex_count(); ++v)
    os << "  " << v << " [label=\"v" << v << "\"];\n";
  for (const Arc& a : d.arcs())
    os << "  " << a.tail << " -> " << a.head << " [label=\"" << a.id << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const Orientation& o, const std::string& name = "D") {
  return to_dot(o.to_digraph(), name);
}

inline std::string to_dot(const Multigraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 1; v <= g.vertex_count(); ++v)
    os << "  " << v << " [label=\"v" << v << "\"];\n";
  for (const Edge& e : g.edges())
    os << "  " << e.u << " -- " << e.v << " [label=\"" << e.id << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const AuxDigraph& aux, const std::string& name = "Aux") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  const auto& verts = aux.vertices();
  for (std::size_t v = 1; v < verts.size(); ++v) {
    os << "  " << v << " [label=\"" << verts[v].label() << "\"";
    if (verts[v].tag != AuxTag::Original)
      os << ", shape=circle, style=filled, fillcolor=lightgray";
    os << "];\n";
  }
  for (const Arc& a : aux.digraph().arcs())
    os << "  " << a.tail << " -> " << a.head << " [label=\"" << a.id << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace dporient
