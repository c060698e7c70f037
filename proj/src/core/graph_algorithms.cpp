#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "chd/core.hpp"

namespace chd {

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g,
                                                      std::span<const Vertex> sources) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (s >= g.order()) throw Error("unknown vertex " + std::to_string(s));
    if (!dist[s]) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      const std::vector<char>& allowed) {
  auto ok = [&](Vertex v) { return allowed.empty() || allowed[v]; };
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start] || !ok(start)) continue;
    std::vector<Vertex> component;
    stack.assign(1, start);
    seen[start] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w] && ok(w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) {
  return g.size() + connected_components(g).size() == g.order();
}

bool is_tree(const Graph& g) { return g.order() > 0 && is_connected(g) && g.size() + 1 == g.order(); }

std::size_t count_triangles(const Graph& g) {
  std::size_t count = 0;
  for (auto [u, v] : g.edges()) {
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    // Count common neighbours w > v so each triangle u<v<w is seen once.
    auto iu = std::upper_bound(nu.begin(), nu.end(), v);
    auto iv = std::upper_bound(nv.begin(), nv.end(), v);
    while (iu != nu.end() && iv != nv.end()) {
      if (*iu < *iv) {
        ++iu;
      } else if (*iv < *iu) {
        ++iv;
      } else {
        ++count;
        ++iu;
        ++iv;
      }
    }
  }
  return count;
}

bool contains_triangle(const Graph& g) { return count_triangles(g) > 0; }

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<Vertex> articulation_points(const Graph& g, const std::vector<char>& removed) {
  const std::size_t n = g.order();
  auto alive = [&](Vertex v) { return removed.empty() || !removed[v]; };
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0), next_edge(n, 0);
  std::vector<Vertex> parent(n, 0);
  std::vector<char> is_cut(n, 0);
  std::size_t timer = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (!alive(root) || disc[root] != kUnseen) continue;
    std::size_t root_children = 0;
    disc[root] = low[root] = timer++;
    parent[root] = root;
    stack.assign(1, root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      auto nbrs = g.neighbors(v);
      if (next_edge[v] < nbrs.size()) {
        Vertex w = nbrs[next_edge[v]++];
        if (!alive(w)) continue;
        if (disc[w] == kUnseen) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (v != root) {
          Vertex p = parent[v];
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) is_cut[p] = 1;
        }
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
  std::vector<Vertex> result;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) result.push_back(v);
  }
  return result;
}

namespace {

// Unit-capacity flow network for vertex-disjoint paths (vertex splitting).
class SplitFlow {
 public:
  SplitFlow(const Graph& g, Vertex s, Vertex t) : head_(2 * g.order(), -1) {
    constexpr int kInf = 1 << 28;
    for (Vertex v = 0; v < g.order(); ++v) {
      int cap = (v == s || v == t) ? kInf : 1;
      add(in(v), out(v), cap);
    }
    for (auto [u, v] : g.edges()) {
      add(out(u), in(v), kInf);
      add(out(v), in(u), kInf);
    }
    source_ = out(s);
    sink_ = in(t);
  }

  std::size_t run(std::size_t cap) {
    std::size_t flow = 0;
    std::vector<int> via(head_.size());
    while (flow < cap) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source_};
      via[source_] = -2;
      while (!queue.empty() && via[sink_] == -1) {
        int x = queue.front();
        queue.pop_front();
        for (int e = head_[x]; e >= 0; e = next_[e]) {
          if (cap_[e] > 0 && via[to_[e]] == -1) {
            via[to_[e]] = e;
            queue.push_back(to_[e]);
          }
        }
      }
      if (via[sink_] == -1) break;
      for (int x = sink_; x != source_;) {
        int e = via[x];
        --cap_[e];
        ++cap_[e ^ 1];
        x = to_[e ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  static int in(Vertex v) { return static_cast<int>(2 * v); }
  static int out(Vertex v) { return static_cast<int>(2 * v + 1); }
  void add(int a, int b, int cap) {
    to_.push_back(b);
    cap_.push_back(cap);
    next_.push_back(head_[a]);
    head_[a] = static_cast<int>(to_.size()) - 1;
    to_.push_back(a);
    cap_.push_back(0);
    next_.push_back(head_[b]);
    head_[b] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_, to_, cap_, next_;
  int source_ = 0, sink_ = 0;
};

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t cap) {
  if (s >= g.order() || t >= g.order() || s == t) throw Error("invalid vertex pair");
  if (g.adjacent(s, t)) throw Error("local connectivity needs non-adjacent vertices");
  return SplitFlow(g, s, t).run(cap);
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  std::size_t best = n - 1;
  for (Vertex i = 0; i < n && i <= best; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, local_vertex_connectivity(g, i, j, best));
    }
  }
  return best;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> set) {
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < set.size(); ++i) index[set[i]] = static_cast<std::int64_t>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) {
      edges.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
    }
  }
  return Graph::from_edge_list(set.size(), edges);
}

BasicReport analyze_basic(const Digraph& d) {
  Graph g = underlying_graph(d);
  BasicReport report;
  report.connected = d.order() > 0 && is_connected(g);
  report.contains_triangle = contains_triangle(g);
  report.vertex_connectivity = vertex_connectivity(g);
  for (Vertex v = 0; v < d.order(); ++v) {
    ++report.degree_profile[{d.out_degree(v), d.in_degree(v)}];
  }
  if (auto side = two_coloring(g)) {
    Bipartition parts;
    for (Vertex v = 0; v < d.order(); ++v) {
      ((*side)[v] == 0 ? parts.first : parts.second).push_back(v);
    }
    report.bipartition = std::move(parts);
  }
  return report;
}

}  // namespace chd
