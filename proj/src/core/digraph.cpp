#include "chd/core.hpp"

#include <algorithm>

namespace chd {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.tail) + "," + std::to_string(e.head) + ")";
}

Digraph Digraph::from_edge_list(std::size_t vertex_count, std::span<const Edge> edges,
                                std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != vertex_count) {
    throw Error("label count " + std::to_string(labels.size()) + " does not match vertex count " +
                std::to_string(vertex_count));
  }
  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (const Edge& e : sorted) {
    if (e.tail >= vertex_count || e.head >= vertex_count) {
      throw Error("endpoint out of range at " + to_string(e));
    }
    if (e.tail == e.head) throw Error("loop at " + to_string(e));
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Edge& e : sorted) {
    if (e.tail < e.head && std::binary_search(sorted.begin(), sorted.end(), Edge{e.head, e.tail})) {
      throw Error("antisymmetry violated at " + to_string(e) + "/" +
                  to_string(Edge{e.head, e.tail}));
    }
  }

  Digraph d;
  d.out_.assign(vertex_count, {});
  d.in_.assign(vertex_count, {});
  for (const Edge& e : sorted) {
    d.out_[e.tail].push_back(e.head);
    d.in_[e.head].push_back(e.tail);
  }
  for (auto& list : d.in_) std::sort(list.begin(), list.end());
  d.edges_ = std::move(sorted);
  d.labels_ = std::move(labels);
  return d;
}

bool Digraph::has_edge(Vertex tail, Vertex head) const {
  if (tail >= out_.size()) return false;
  const auto& list = out_[tail];
  return std::binary_search(list.begin(), list.end(), head);
}

std::optional<std::size_t> Digraph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string Digraph::name(Vertex v) const {
  if (!labels_.empty() && v < labels_.size() && !labels_[v].empty()) return labels_[v];
  return std::to_string(v);
}

Graph Graph::from_edge_list(std::size_t vertex_count,
                            std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.adj_.assign(vertex_count, {});
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw Error("endpoint out of range at {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    if (u == v) throw Error("loop at {" + std::to_string(u) + "," + std::to_string(v) + "}");
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= adj_.size()) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

Graph underlying_graph(const Digraph& d) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(d.size());
  for (const Edge& e : d.edges()) edges.emplace_back(e.tail, e.head);
  return Graph::from_edge_list(d.order(), edges);
}

Subdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::int64_t> index(d.order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= d.order()) throw Error("unknown vertex " + std::to_string(sorted[i]));
    index[sorted[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (Vertex v : sorted) {
    for (Vertex w : d.out(v)) {
      if (index[w] >= 0) {
        edges.push_back({static_cast<Vertex>(index[v]), static_cast<Vertex>(index[w])});
      }
    }
  }
  std::vector<std::string> labels;
  if (d.has_labels()) {
    labels.reserve(sorted.size());
    for (Vertex v : sorted) labels.push_back(d.labels()[v]);
  }
  return {Digraph::from_edge_list(sorted.size(), edges, std::move(labels)), std::move(sorted)};
}

bool is_valid(const Digraph& d, const ArcSequence& seq) {
  const auto& xs = seq.vertices;
  if (xs.empty()) return false;
  for (Vertex v : xs) {
    if (v >= d.order()) return false;
  }
  auto distinct = [&] {
    std::vector<Vertex> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!d.adjacent(xs[i], xs[i + 1])) return false;
  }
  switch (seq.kind) {
    case WalkKind::walk:
      return true;
    case WalkKind::path:
      return distinct();
    case WalkKind::arc:
    case WalkKind::directed_path:
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (!d.has_edge(xs[i], xs[i + 1])) return false;
      }
      return distinct();
    case WalkKind::alternating_walk:
      for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
        bool first_forward = d.has_edge(xs[i], xs[i + 1]);
        bool second_forward = d.has_edge(xs[i + 1], xs[i + 2]);
        if (first_forward == second_forward) return false;
      }
      return true;
  }
  return false;
}

std::vector<ArcSequence> enumerate_k_arcs(const Digraph& d, std::size_t k,
                                          std::optional<Vertex> anchor) {
  if (anchor && *anchor >= d.order()) throw Error("unknown vertex " + std::to_string(*anchor));
  std::vector<ArcSequence> result;
  std::vector<Vertex> current;
  std::vector<char> on_path(d.order(), 0);
  auto extend = [&](auto&& self) -> void {
    if (current.size() == k + 1) {
      result.push_back({current, WalkKind::arc});
      return;
    }
    for (Vertex next : d.out(current.back())) {
      if (on_path[next]) continue;
      on_path[next] = 1;
      current.push_back(next);
      self(self);
      current.pop_back();
      on_path[next] = 0;
    }
  };
  for (Vertex start = 0; start < d.order(); ++start) {
    if (anchor && start != *anchor) continue;
    current.assign(1, start);
    on_path[start] = 1;
    extend(extend);
    on_path[start] = 0;
  }
  return result;
}

Digraph line_digraph(const Digraph& d) {
  const auto& edges = d.edges();
  std::vector<Edge> line_edges;
  // Vertex i of L(D) is edges[i]; the out-edges of a vertex v are contiguous.
  std::vector<std::size_t> first_out(d.order() + 1, 0);
  for (const Edge& e : edges) ++first_out[e.tail + 1];
  for (std::size_t v = 0; v < d.order(); ++v) first_out[v + 1] += first_out[v];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Vertex middle = edges[i].head;
    for (std::size_t j = first_out[middle]; j < first_out[middle + 1]; ++j) {
      line_edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  std::vector<std::string> labels;
  labels.reserve(edges.size());
  for (const Edge& e : edges) labels.push_back(d.name(e.tail) + ">" + d.name(e.head));
  return Digraph::from_edge_list(edges.size(), line_edges, std::move(labels));
}

}  // namespace chd
