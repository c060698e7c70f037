#include <algorithm>
#include <limits>

#include "chd/families.hpp"

namespace chd {

namespace {

constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> distances_from(const Digraph& d, Vertex root) {
  Graph g = underlying_graph(d);
  const Vertex sources[] = {root};
  auto dist = bfs_distances(g, sources);
  std::vector<std::size_t> out(d.order(), kFar);
  for (Vertex v = 0; v < d.order(); ++v) {
    if (dist[v]) out[v] = *dist[v];
  }
  return out;
}

}  // namespace

std::vector<std::size_t> BallDigraph::distances() const { return distances_from(digraph, root); }

std::vector<char> BallDigraph::interior_mask(std::size_t margin) const {
  std::vector<char> mask(digraph.order(), 1);
  if (exact()) return mask;
  auto dist = distances();
  for (Vertex v = 0; v < digraph.order(); ++v) {
    mask[v] = dist[v] != kFar && dist[v] + margin <= radius;
  }
  return mask;
}

std::vector<Vertex> BallDigraph::interior(std::size_t margin) const {
  auto mask = interior_mask(margin);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

std::vector<char> BallDigraph::boundary_mask() const {
  std::vector<char> mask(digraph.order(), 0);
  for (Vertex v : boundary) mask[v] = 1;
  return mask;
}

BallDigraph exact_ball(Digraph d, Vertex root) {
  if (d.order() == 0) throw Error("empty digraph");
  if (root >= d.order()) throw Error("unknown root " + std::to_string(root));
  BallDigraph ball;
  auto dist = distances_from(d, root);
  std::size_t radius = 0;
  for (std::size_t x : dist) {
    if (x != kFar) radius = std::max(radius, x);
  }
  ball.digraph = std::move(d);
  ball.root = root;
  ball.radius = radius;
  return ball;
}

std::vector<std::vector<Vertex>> compute_end_proxies(const Digraph& d, Vertex root,
                                                     std::size_t radius,
                                                     const std::vector<Vertex>& boundary) {
  if (boundary.empty()) return {};
  auto dist = distances_from(d, root);
  const std::size_t shell = radius == 0 ? 0 : radius - 1;
  std::vector<char> allowed(d.order(), 0);
  for (Vertex v = 0; v < d.order(); ++v) allowed[v] = dist[v] != kFar && dist[v] >= shell;
  Graph g = underlying_graph(d);
  std::vector<char> on_boundary(d.order(), 0);
  for (Vertex v : boundary) on_boundary[v] = 1;
  std::vector<std::vector<Vertex>> proxies;
  for (const auto& component : connected_components(g, allowed)) {
    std::vector<Vertex> proxy;
    for (Vertex v : component) {
      if (on_boundary[v]) proxy.push_back(v);
    }
    if (!proxy.empty()) proxies.push_back(std::move(proxy));
  }
  // Boundary vertices outside the shell (disconnected input) form their own proxies.
  for (Vertex v : boundary) {
    if (!allowed[v]) proxies.push_back({v});
  }
  std::sort(proxies.begin(), proxies.end());
  return proxies;
}

BallDigraph sub_ball(const BallDigraph& host, Vertex root, std::size_t radius) {
  const Digraph& d = host.digraph;
  if (root >= d.order()) throw Error("unknown root " + std::to_string(root));
  auto dist = distances_from(d, root);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (dist[v] <= radius) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
  std::vector<std::int64_t> index(d.order(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<std::int64_t>(i);

  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex v : order) {
    labels.push_back(d.name(v));
    for (Vertex w : d.out(v)) {
      if (index[w] >= 0) {
        edges.push_back({static_cast<Vertex>(index[v]), static_cast<Vertex>(index[w])});
      }
    }
  }

  BallDigraph ball;
  ball.digraph = Digraph::from_edge_list(order.size(), edges, std::move(labels));
  ball.root = 0;
  ball.radius = radius;
  ball.family = host.family;
  ball.notes = host.notes;
  auto host_boundary = host.boundary_mask();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    bool open = host_boundary[v] != 0;
    if (dist[v] == radius) {
      if (!host.exact()) {
        open = true;
      } else {
        for (Vertex w : d.out(v)) open = open || index[w] < 0;
        for (Vertex w : d.in(v)) open = open || index[w] < 0;
      }
    }
    if (open) ball.boundary.push_back(static_cast<Vertex>(i));
  }
  ball.end_proxies = compute_end_proxies(ball.digraph, 0, radius, ball.boundary);
  return ball;
}

}  // namespace chd
