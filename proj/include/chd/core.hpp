#pragma once

// Digraph kernel: representation, validation, local combinatorics and the
// line digraph. Isomorphism search lives in isomorphism.hpp.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chd {

using Vertex = std::uint32_t;

/// Raised for malformed inputs: bad edges, unknown vertices, invalid parameters.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Finite digraph with an irreflexive, antisymmetric edge relation over the
/// dense vertex ids 0..order()-1. Adjacency lists are kept sorted, so every
/// enumeration derived from them is deterministic. Immutable once built.
class Digraph {
 public:
  Digraph() = default;

  /// Validates and builds. Duplicate edges are merged; loops, opposite pairs
  /// and out-of-range endpoints throw chd::Error naming the offending edge.
  static Digraph from_edge_list(std::size_t vertex_count, std::span<const Edge> edges,
                                std::vector<std::string> labels = {});

  std::size_t order() const { return out_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> out(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in(Vertex v) const { return in_.at(v); }
  std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_.at(v).size(); }

  bool has_edge(Vertex tail, Vertex head) const;
  bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v) || has_edge(v, u); }

  /// Sorted lexicographically by (tail, head).
  const std::vector<Edge>& edges() const { return edges_; }
  /// Position of an edge in edges(), if present.
  std::optional<std::size_t> edge_index(Edge e) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label if one was attached, otherwise the decimal id.
  std::string name(Vertex v) const;

  const std::vector<std::vector<Vertex>>& out_lists() const { return out_; }
  const std::vector<std::vector<Vertex>>& in_lists() const { return in_; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_.size() == b.out_.size() && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::string> labels_;
};

/// Simple undirected graph on 0..order()-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;

  /// Loops and out-of-range endpoints throw; duplicates are merged.
  static Graph from_edge_list(std::size_t vertex_count,
                              std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edges_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  /// Each edge once as (min, max), sorted.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::vector<std::vector<Vertex>>& adjacency() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

Graph underlying_graph(const Digraph& d);

// ---------------------------------------------------------------------------
// Graph-level helpers shared by the other modules.

/// Breadth-first distances from a source set; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g,
                                                      std::span<const Vertex> sources);
/// Connected components of g restricted to vertices with allowed[v] true
/// (all vertices when `allowed` is empty). Each component is sorted; the
/// components are ordered by their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<char>& allowed = {});
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool contains_triangle(const Graph& g);
std::size_t count_triangles(const Graph& g);
/// Two-colouring (side[v] in {0,1}, vertex 0 of each component on side 0),
/// or nullopt if g has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);
/// Vertices whose removal increases the number of components.
std::vector<Vertex> articulation_points(const Graph& g, const std::vector<char>& removed = {});
/// Maximum number of internally disjoint s-t paths for non-adjacent s,t,
/// stopping early once `cap` is reached.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t,
                                      std::size_t cap = SIZE_MAX);
/// Exact vertex connectivity; order()-1 for complete graphs, 0 if disconnected.
std::size_t vertex_connectivity(const Graph& g);
/// Induced subgraph on a sorted vertex set; vertex i of the result is set[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> set);

// ---------------------------------------------------------------------------

struct Bipartition {
  std::vector<Vertex> first;   ///< side containing the smallest vertex of each component
  std::vector<Vertex> second;
};

struct BasicReport {
  bool connected = false;
  bool contains_triangle = false;
  std::size_t vertex_connectivity = 0;
  /// (out-degree, in-degree) -> number of vertices with that profile.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> degree_profile;
  std::optional<Bipartition> bipartition;
};

BasicReport analyze_basic(const Digraph& d);

/// Induced subdigraph together with the map back into the host.
struct Subdigraph {
  Digraph digraph;
  std::vector<Vertex> to_host;  ///< vertex i of `digraph` is to_host[i] in the host
};

/// Vertices of the result follow the sorted order of `vertices`; labels are
/// carried over. Unknown vertices throw.
Subdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices);

enum class WalkKind { arc, path, walk, alternating_walk, directed_path };

struct ArcSequence {
  std::vector<Vertex> vertices;
  WalkKind kind = WalkKind::arc;

  friend auto operator<=>(const ArcSequence&, const ArcSequence&) = default;
};

/// True if the sequence satisfies the constraints of its kind in d.
/// Alternating walks are judged on traversed edges: edge i is forward when
/// directed from vertex i to vertex i+1, and consecutive edges must differ.
bool is_valid(const Digraph& d, const ArcSequence& seq);

/// All k-arcs (directed walks on k+1 pairwise distinct vertices), optionally
/// only those starting at `anchor`, in lexicographic order.
std::vector<ArcSequence> enumerate_k_arcs(const Digraph& d, std::size_t k,
                                          std::optional<Vertex> anchor = std::nullopt);

/// L(D): one vertex per edge of D (in edges() order) and an edge uv -> vw for
/// every 2-arc u,v,w. Labels are "tail>head" using the host names.
Digraph line_digraph(const Digraph& d);

}  // namespace chd
