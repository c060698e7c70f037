#pragma once

#include <string>

#include "chd/core.hpp"
#include "chd/families.hpp"

namespace chd::test {

inline BallDigraph gen(const std::string& spec) { return generate_catalog(parse_family_spec(spec)); }
inline Digraph digraph(const std::string& spec) { return gen(spec).digraph; }
inline Graph undirected(const std::string& spec) { return underlying_graph(digraph(spec)); }

inline Digraph make(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Digraph::from_edge_list(n, list);
}

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<std::pair<Vertex, Vertex>> list(edges);
  return Graph::from_edge_list(n, list);
}

inline Digraph triangle() { return make(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline Digraph transitive3() { return make(3, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace chd::test
