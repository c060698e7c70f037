#pragma once

// The reachability relation on edges, reachability digraphs, descendant
// digraphs and the neighbourhood graph of an edge.

#include <string>
#include <vector>

#include "chd/core.hpp"
#include "chd/families.hpp"

namespace chd {

/// One class of the reachability relation.
struct ReachClass {
  Edge representative;
  /// Sorted class edges.
  std::vector<Edge> edges;
  /// Delta_e: the class endpoints with the class edges only; to_host maps back.
  Subdigraph delta;
  /// The class is the whole edge set.
  bool universal = false;
  /// Set when the verdict only holds inside a truncation, e.g. "universal within ball".
  std::string caveat;
};

/// Closure of {e} under "shares its tail or its head with a class edge".
/// Throws chd::Error if e is not an edge.
ReachClass reachability_class(const Digraph& d, Edge e);

/// Class id of every edge (indexed like d.edges()); ids are numbered by the
/// smallest edge of each class.
std::vector<std::size_t> reachability_partition(const Digraph& d);

struct ReachabilityReport {
  /// Representative class, chosen with all endpoints inside the interior.
  ReachClass representative;
  std::size_t class_count = 0;
  std::size_t interior_class_count = 0;
  /// Interior classes compared against the representative.
  std::size_t sampled = 0;
  bool all_isomorphic = true;
  /// First sampled class not isomorphic to the representative, if any.
  std::optional<Edge> mismatch;
};

/// Delta(D) for a ball: classes whose endpoints all lie in interior(margin)
/// are exact; the first one is the representative and up to `sample_limit`
/// others are compared with it. Throws chd::Error when no class is interior.
ReachabilityReport reachability_digraph(const BallDigraph& ball, std::size_t margin = 2,
                                        std::size_t sample_limit = 16);

/// Induced subdigraph on every vertex reachable from x by a directed path.
Subdigraph descendant_digraph(const Digraph& d, Vertex x);

struct NeighborhoodGraph {
  Graph graph;
  /// Vertex i of `graph` is to_host[i].
  std::vector<Vertex> to_host;
  std::vector<Vertex> side_x;  ///< N(x) - y, host ids
  std::vector<Vertex> side_y;  ///< N(y) - x, host ids
};

/// Omega(x, y) = G[N(x) + N(y) - {x, y}]. Throws chd::Error if xy is not an edge.
NeighborhoodGraph neighborhood_graph(const Graph& g, Vertex x, Vertex y);

}  // namespace chd
