#include "chd/reachability.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "chd/isomorphism.hpp"

namespace chd {

namespace {

Subdigraph class_digraph(const std::vector<Edge>& edges) {
  std::vector<Vertex> ends;
  for (const Edge& e : edges) {
    ends.push_back(e.tail);
    ends.push_back(e.head);
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(ends.begin(), ends.end(), v) - ends.begin());
  };
  std::vector<Edge> local_edges;
  for (const Edge& e : edges) local_edges.push_back({local(e.tail), local(e.head)});
  return {Digraph::from_edge_list(ends.size(), local_edges), std::move(ends)};
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ReachClass reachability_class(const Digraph& d, Edge e) {
  auto start = d.edge_index(e);
  if (!start) throw Error("unknown edge " + to_string(e));
  const auto& edges = d.edges();
  std::vector<char> in_class(edges.size(), 0);
  std::deque<std::size_t> queue{*start};
  in_class[*start] = 1;
  auto visit = [&](Edge f) {
    std::size_t i = *d.edge_index(f);
    if (!in_class[i]) {
      in_class[i] = 1;
      queue.push_back(i);
    }
  };
  while (!queue.empty()) {
    const Edge cur = edges[queue.front()];
    queue.pop_front();
    for (Vertex w : d.out(cur.tail)) visit({cur.tail, w});
    for (Vertex w : d.in(cur.head)) visit({w, cur.head});
  }
  ReachClass result;
  result.representative = e;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (in_class[i]) result.edges.push_back(edges[i]);
  }
  result.delta = class_digraph(result.edges);
  result.universal = result.edges.size() == edges.size();
  return result;
}

std::vector<std::size_t> reachability_partition(const Digraph& d) {
  const auto& edges = d.edges();
  DisjointSets sets(edges.size());
  // Edges are sorted by tail, so each out-star is a contiguous run.
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].tail == edges[i - 1].tail) sets.join(i, i - 1);
  }
  std::vector<std::int64_t> last_into(d.order(), -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& last = last_into[edges[i].head];
    if (last >= 0) sets.join(i, static_cast<std::size_t>(last));
    last = static_cast<std::int64_t>(i);
  }
  std::vector<std::size_t> id(edges.size());
  std::vector<std::int64_t> number(edges.size(), -1);
  std::size_t next = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& n = number[sets.find(i)];
    if (n < 0) n = static_cast<std::int64_t>(next++);
    id[i] = static_cast<std::size_t>(n);
  }
  return id;
}

ReachabilityReport reachability_digraph(const BallDigraph& ball, std::size_t margin,
                                        std::size_t sample_limit) {
  const Digraph& d = ball.digraph;
  const auto& edges = d.edges();
  auto id = reachability_partition(d);
  const std::size_t classes = edges.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  auto interior = ball.interior_mask(margin);
  std::vector<char> inside(classes, 1);
  std::vector<std::int64_t> first(classes, -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!interior[edges[i].tail] || !interior[edges[i].head]) inside[id[i]] = 0;
    if (first[id[i]] < 0) first[id[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<std::size_t> candidates;
  for (std::size_t c = 0; c < classes; ++c) {
    if (inside[c]) candidates.push_back(c);
  }
  if (candidates.empty()) throw Error("no interior edge available at margin " + std::to_string(margin));

  // Prefer the class of the first out-edge of the root so that the choice is
  // stable across radii.
  std::size_t chosen = candidates.front();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((edges[i].tail == ball.root || edges[i].head == ball.root) && inside[id[i]]) {
      chosen = id[i];
      break;
    }
  }

  ReachabilityReport report;
  report.class_count = classes;
  report.interior_class_count = candidates.size();
  report.representative = reachability_class(d, edges[static_cast<std::size_t>(first[chosen])]);
  if (!ball.exact() && report.representative.universal) {
    report.representative.caveat = "universal within ball";
  }

  const std::size_t step =
      std::max<std::size_t>(1, candidates.size() / std::max<std::size_t>(1, sample_limit));
  for (std::size_t k = 0; k < candidates.size() && report.sampled < sample_limit; k += step) {
    const std::size_t c = candidates[k];
    if (c == chosen) continue;
    ++report.sampled;
    auto other = reachability_class(d, edges[static_cast<std::size_t>(first[c])]);
    if (!isomorphic(other.delta.digraph, report.representative.delta.digraph)) {
      report.all_isomorphic = false;
      report.mismatch = other.representative;
      break;
    }
  }
  return report;
}

Subdigraph descendant_digraph(const Digraph& d, Vertex x) {
  if (x >= d.order()) throw Error("unknown vertex " + std::to_string(x));
  std::vector<char> seen(d.order(), 0);
  std::vector<Vertex> reached{x};
  seen[x] = 1;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    for (Vertex w : d.out(reached[i])) {
      if (!seen[w]) {
        seen[w] = 1;
        reached.push_back(w);
      }
    }
  }
  return induced_subdigraph(d, reached);
}

NeighborhoodGraph neighborhood_graph(const Graph& g, Vertex x, Vertex y) {
  if (x >= g.order() || y >= g.order() || !g.adjacent(x, y)) {
    throw Error("{" + std::to_string(x) + "," + std::to_string(y) + "} is not an edge");
  }
  NeighborhoodGraph result;
  for (Vertex v : g.neighbors(x)) {
    if (v != y) result.side_x.push_back(v);
  }
  for (Vertex v : g.neighbors(y)) {
    if (v != x) result.side_y.push_back(v);
  }
  std::vector<Vertex> all = result.side_x;
  all.insert(all.end(), result.side_y.begin(), result.side_y.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  result.graph = induced_subgraph(g, all);
  result.to_host = std::move(all);
  return result;
}

}  // namespace chd
