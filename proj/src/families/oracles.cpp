#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "oracle.hpp"

namespace chd::detail {

ExtractedBall extract_ball(NeighborOracle& oracle, std::size_t radius) {
  std::map<Key, Vertex> index;
  std::vector<Key> keys;
  std::vector<std::size_t> dist;
  std::vector<Edge> edges;
  std::vector<Arc> arcs;

  Key root = oracle.root();
  index.emplace(root, 0);
  keys.push_back(root);
  dist.push_back(0);
  for (std::size_t next = 0; next < keys.size(); ++next) {
    const Key v = keys[next];
    const auto here = static_cast<Vertex>(next);
    arcs.clear();
    oracle.incident(v, arcs);
    for (const Arc& arc : arcs) {
      auto it = index.find(arc.other);
      if (it == index.end()) {
        if (dist[next] == radius) continue;
        it = index.emplace(arc.other, static_cast<Vertex>(keys.size())).first;
        keys.push_back(arc.other);
        dist.push_back(dist[next] + 1);
      }
      if (arc.outgoing) {
        edges.push_back({here, it->second});
      } else {
        edges.push_back({it->second, here});
      }
    }
  }

  std::vector<std::string> labels;
  labels.reserve(keys.size());
  for (Key k : keys) labels.push_back(oracle.label(k));

  ExtractedBall out;
  out.ball.digraph = Digraph::from_edge_list(keys.size(), edges, std::move(labels));
  out.ball.root = 0;
  out.ball.radius = radius;
  for (Vertex v = 0; v < keys.size(); ++v) {
    if (dist[v] == radius) out.ball.boundary.push_back(v);
  }
  out.ball.end_proxies = compute_end_proxies(out.ball.digraph, 0, radius, out.ball.boundary);
  out.keys = std::move(keys);
  return out;
}

// --- TreeOracle -------------------------------------------------------------

TreeOracle::TreeOracle(std::vector<Type> types, std::size_t root_type) : types_(std::move(types)) {
  Node root;
  root.type = root_type;
  root.address = "r";
  nodes_.push_back(std::move(root));
}

void TreeOracle::expand(Key v) {
  if (nodes_[v].expanded) return;
  nodes_[v].expanded = true;
  const Type type = types_[nodes_[v].type];
  const bool has_parent = nodes_[v].parent >= 0;
  std::size_t outs = type.out_degree - (has_parent && nodes_[v].parent_is_head ? 1 : 0);
  std::size_t ins = type.in_degree - (has_parent && !nodes_[v].parent_is_head ? 1 : 0);
  for (std::size_t i = 0; i < outs; ++i) {
    Node child;
    child.type = type.out_child;
    child.parent = static_cast<std::int64_t>(v);
    child.parent_is_head = false;
    child.address = nodes_[v].address + "+" + std::to_string(i);
    nodes_.push_back(std::move(child));
    nodes_[v].out_children.push_back(nodes_.size() - 1);
  }
  for (std::size_t i = 0; i < ins; ++i) {
    Node child;
    child.type = type.in_child;
    child.parent = static_cast<std::int64_t>(v);
    child.parent_is_head = true;
    child.address = nodes_[v].address + "-" + std::to_string(i);
    nodes_.push_back(std::move(child));
    nodes_[v].in_children.push_back(nodes_.size() - 1);
  }
}

void TreeOracle::incident(Key v, std::vector<Arc>& arcs) {
  expand(v);
  const Node& node = nodes_[v];
  if (node.parent >= 0) arcs.push_back({static_cast<Key>(node.parent), node.parent_is_head});
  for (Key c : node.out_children) arcs.push_back({c, true});
  for (Key c : node.in_children) arcs.push_back({c, false});
}

// --- BlockTreeOracle --------------------------------------------------------

BlockTreeOracle::BlockTreeOracle(Digraph block, std::size_t lambda)
    : block_(std::move(block)), lambda_(lambda) {
  vertices_.push_back({{}, true, "r"});
  for (std::size_t i = 0; i < lambda_; ++i) new_copy(0);
}

std::size_t BlockTreeOracle::new_copy(Key v) {
  const std::size_t c = copies_.size();
  const std::size_t ordinal = vertices_[v].copies.size();
  std::vector<Key> members(block_.order());
  members[0] = v;
  vertices_[v].copies.push_back({c, 0});
  for (Vertex slot = 1; slot < block_.order(); ++slot) {
    Node node;
    node.copies.push_back({c, slot});
    node.address = vertices_[v].address + "." + std::to_string(ordinal) + ":" + block_.name(slot);
    vertices_.push_back(std::move(node));
    members[slot] = vertices_.size() - 1;
  }
  copies_.push_back(std::move(members));
  return c;
}

void BlockTreeOracle::expand(Key v) {
  if (vertices_[v].expanded) return;
  vertices_[v].expanded = true;
  for (std::size_t i = 1; i < lambda_; ++i) new_copy(v);
}

void BlockTreeOracle::incident(Key v, std::vector<Arc>& arcs) {
  expand(v);
  for (const Membership& member : vertices_[v].copies) {
    const auto& copy = copies_[member.copy];
    for (Vertex w : block_.out(member.slot)) arcs.push_back({copy[w], true});
    for (Vertex w : block_.in(member.slot)) arcs.push_back({copy[w], false});
  }
}

// --- DLOracle ---------------------------------------------------------------

DLOracle::DLOracle(Digraph delta) : delta_(std::move(delta)) {
  bool have_source = false;
  bool have_sink = false;
  for (Vertex v = 0; v < delta_.order(); ++v) {
    const bool source = delta_.out_degree(v) > 0 && delta_.in_degree(v) == 0;
    const bool sink = delta_.in_degree(v) > 0 && delta_.out_degree(v) == 0;
    if (!source && !sink) throw Error("delta not bipartite-oriented: vertex " + delta_.name(v));
    if (source && !have_source) {
      first_source_ = v;
      have_source = true;
    }
    if (sink && !have_sink) {
      first_sink_ = v;
      have_sink = true;
    }
  }
  if (!have_source || !have_sink) throw Error("delta not bipartite-oriented: no edges");
  vertices_.push_back({});
  new_copy(0, true);
  vertices_[0].address = "c0:" + delta_.name(first_source_);
}

void DLOracle::new_copy(Key v, bool as_source) {
  const auto c = static_cast<std::int64_t>(copies_.size());
  const Vertex designated = as_source ? first_source_ : first_sink_;
  std::vector<Key> members(delta_.order());
  for (Vertex slot = 0; slot < delta_.order(); ++slot) {
    Key member = v;
    if (slot != designated) {
      vertices_.push_back({});
      member = vertices_.size() - 1;
      vertices_[member].address = "c" + std::to_string(c) + ":" + delta_.name(slot);
    }
    Node& node = vertices_[member];
    if (delta_.out_degree(slot) > 0) {
      node.copy_a = c;
      node.slot_a = slot;
    } else {
      node.copy_b = c;
      node.slot_b = slot;
    }
    members[slot] = member;
  }
  copies_.push_back(std::move(members));
}

void DLOracle::incident(Key v, std::vector<Arc>& arcs) {
  if (vertices_[v].copy_a < 0) new_copy(v, true);
  if (vertices_[v].copy_b < 0) new_copy(v, false);
  const Node& node = vertices_[v];
  const auto& source_copy = copies_[static_cast<std::size_t>(node.copy_a)];
  for (Vertex w : delta_.out(node.slot_a)) arcs.push_back({source_copy[w], true});
  const auto& sink_copy = copies_[static_cast<std::size_t>(node.copy_b)];
  for (Vertex w : delta_.in(node.slot_b)) arcs.push_back({sink_copy[w], false});
}

// --- ScaffoldOracle ---------------------------------------------------------

ScaffoldOracle::ScaffoldOracle(Variant variant, std::size_t kappa, std::size_t m,
                               OrderChoice order)
    : variant_(variant),
      u_degree_(variant == Variant::M ? m : 2 * m),
      w_degree_(variant == Variant::M ? kappa : 2),
      order_(order),
      shuffle_state_(order.shuffle_seed.value_or(0)) {
  Node root;
  root.in_u = true;
  root.address = "r";
  nodes_.push_back(std::move(root));
  expand(0);
}

void ScaffoldOracle::expand(Key x) {
  if (nodes_[x].expanded) return;
  nodes_[x].expanded = true;
  const std::size_t deg = degree(nodes_[x]);
  std::vector<std::int64_t> slots(deg, -1);
  const std::int64_t parent = nodes_[x].parent;
  if (parent >= 0) {
    std::size_t slot = 0;
    if (nodes_[x].in_u) {
      std::mt19937_64 rng(shuffle_state_ ^ (0x9e3779b97f4a7c15ULL * (x + 1)));
      if (variant_ == Variant::M) {
        slot = order_.shuffle_seed ? static_cast<std::size_t>(rng() % deg) : 0;
      } else {
        // The other scaffold edge at the parent w has 1-based position
        // pos + 1 at its U end; ours must have the opposite parity.
        const std::size_t other = nodes_[static_cast<std::size_t>(parent)].slot_in_parent;
        const std::size_t parity = 1 - other % 2;
        const std::size_t k = order_.shuffle_seed ? static_cast<std::size_t>(rng() % (deg / 2)) : 0;
        slot = 2 * k + parity;
      }
    }
    nodes_[x].parent_slot = slot;
    slots[slot] = parent;
  }
  for (std::size_t s = 0; s < deg; ++s) {
    if (slots[s] >= 0) continue;
    Node child;
    child.in_u = !nodes_[x].in_u;
    child.parent = static_cast<std::int64_t>(x);
    child.slot_in_parent = s;
    child.address = nodes_[x].address + "." + std::to_string(s);
    nodes_.push_back(std::move(child));
    slots[s] = static_cast<std::int64_t>(nodes_.size() - 1);
  }
  nodes_[x].neighbors.assign(slots.begin(), slots.end());
}

Key ScaffoldOracle::sub(Key a, Key b) {
  if (nodes_[b].parent == static_cast<std::int64_t>(a)) return b;
  if (nodes_[a].parent == static_cast<std::int64_t>(b)) return a;
  throw Error("scaffold nodes " + nodes_[a].address + " and " + nodes_[b].address +
              " are not adjacent");
}

Key ScaffoldOracle::u_of(Key y) const {
  return nodes_[y].in_u ? y : static_cast<Key>(nodes_[y].parent);
}

Key ScaffoldOracle::w_of(Key y) const {
  return nodes_[y].in_u ? static_cast<Key>(nodes_[y].parent) : y;
}

std::size_t ScaffoldOracle::position(Key y) const {
  return nodes_[y].in_u ? nodes_[y].parent_slot : nodes_[y].slot_in_parent;
}

Key ScaffoldOracle::sigma(Key y) {
  const Key u = u_of(y);
  expand(u);
  const std::size_t next = (position(y) + 1) % u_degree_;
  return sub(u, nodes_[u].neighbors[next]);
}

Key ScaffoldOracle::pred(Key y) {
  const Key u = u_of(y);
  expand(u);
  const std::size_t prev = (position(y) + u_degree_ - 1) % u_degree_;
  return sub(u, nodes_[u].neighbors[prev]);
}

void ScaffoldOracle::edges_at(Key w, std::vector<std::pair<Key, Key>>& edges) {
  expand(w);
  std::vector<Key> subs;
  for (std::size_t i = 0; i < w_degree_; ++i) {
    subs.push_back(sub(w, static_cast<Key>(nodes_[w].neighbors[i])));
  }
  for (Key y : subs) expand(u_of(y));
  if (variant_ == Variant::M) {
    for (Key x : subs) {
      for (Key y : subs) {
        if (x != y) edges.emplace_back(x, sigma(y));
      }
    }
    return;
  }
  // a_w has even 1-based position in N(u_{a_w}), b_w odd.
  Key a = subs[0];
  Key b = subs[1];
  if ((position(a) + 1) % 2 != 0) std::swap(a, b);
  const Key sa = sigma(a);
  const Key sb = sigma(b);
  for (Key tail : {a, sa}) {
    for (Key head : {b, sb}) edges.emplace_back(tail, head);
  }
}

void ScaffoldOracle::incident(Key v, std::vector<Arc>& arcs) {
  expand(v);
  std::vector<std::pair<Key, Key>> edges;
  edges_at(w_of(v), edges);
  edges_at(w_of(pred(v)), edges);
  std::vector<std::pair<Key, bool>> found;
  for (auto [tail, head] : edges) {
    if (tail == v) found.emplace_back(head, true);
    if (head == v) found.emplace_back(tail, false);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (auto [other, outgoing] : found) arcs.push_back({other, outgoing});
}

std::string ScaffoldOracle::label(Key v) { return "s" + nodes_[v].address.substr(1); }

ConstructionTrace ScaffoldOracle::trace(const std::vector<Key>& keys) {
  ConstructionTrace out;
  std::map<Key, Vertex> index;
  for (Vertex i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
  auto lookup = [&](Key k) -> std::optional<Vertex> {
    auto it = index.find(k);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  for (Key y : keys) {
    out.u_of.push_back(static_cast<std::int64_t>(u_of(y)));
    out.w_of.push_back(static_cast<std::int64_t>(w_of(y)));
    expand(u_of(y));
    out.position.push_back(position(y) + 1);
    out.sigma.push_back(lookup(sigma(y)));
  }
  if (variant_ == Variant::Mprime) {
    for (Key w = 0; w < nodes_.size(); ++w) {
      if (nodes_[w].in_u || !nodes_[w].expanded) continue;
      Key a = sub(w, static_cast<Key>(nodes_[w].neighbors[0]));
      Key b = sub(w, static_cast<Key>(nodes_[w].neighbors[1]));
      if (!nodes_[u_of(a)].expanded || !nodes_[u_of(b)].expanded) continue;
      if ((position(a) + 1) % 2 != 0) std::swap(a, b);
      out.ab_pairs.push_back({static_cast<std::int64_t>(w), lookup(a), lookup(b)});
    }
  }
  for (const Node& node : nodes_) {
    ConstructionTrace::Node t;
    t.address = node.address;
    t.in_u = node.in_u;
    if (node.expanded) {
      t.neighbors.assign(node.neighbors.begin(), node.neighbors.end());
    } else if (node.parent >= 0) {
      t.neighbors.push_back(node.parent);
    }
    out.scaffold.push_back(std::move(t));
  }
  return out;
}

}  // namespace chd::detail
