#include "chd/cuts.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "chd/isomorphism.hpp"

namespace chd {

namespace {

using Bits = boost::dynamic_bitset<>;

constexpr std::size_t kMaxOrder = 4;
constexpr std::size_t kMaxBranching = 16;

Bits to_bits(std::size_t n, std::span<const Vertex> vs) {
  Bits b(n);
  for (Vertex v : vs) b.set(v);
  return b;
}

std::vector<Vertex> from_bits(const Bits& b) {
  std::vector<Vertex> vs;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) vs.push_back(static_cast<Vertex>(i));
  return vs;
}

Bits neighbourhood(const Graph& g, const Bits& set) {
  Bits out(g.order());
  for (auto i = set.find_first(); i != Bits::npos; i = set.find_next(i)) {
    for (Vertex w : g.neighbors(static_cast<Vertex>(i))) out.set(w);
  }
  return out - set;
}

// The other side of (A, ~).
Bits tilde_side(const Graph& g, const Bits& a) {
  Bits rest = ~a;
  return rest | neighbourhood(g, rest);
}

bool same_host(const SharedGraph& x, const SharedGraph& y) {
  return x == y || (x && y && *x == *y);
}

std::string set_text(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

// True if some vertex of `from` reaches some vertex of `to` avoiding `removed`.
bool joined(const Graph& g, const Bits& from, const Bits& to, const Bits& removed) {
  Bits seen = from - removed;
  std::vector<Vertex> stack = from_bits(seen);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (to.test(v)) return true;
    for (Vertex w : g.neighbors(v)) {
      if (!seen.test(w) && !removed.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    }
  }
  return false;
}

void fill_derived(Separation& s) {
  const std::size_t n = s.host->order();
  Bits a = to_bits(n, s.a), b = to_bits(n, s.b);
  s.separator = from_bits(a & b);
  s.wing_a = from_bits(a - b);
  s.wing_b = from_bits(b - a);
  s.essential = is_essential(*s.host, s);
}

std::vector<Vertex> checked_set(const Graph& g, std::vector<Vertex> vs, const char* what) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (!vs.empty() && vs.back() >= g.order()) {
    throw Error(std::string(what) + " contains unknown vertex " + std::to_string(vs.back()));
  }
  return vs;
}

// Bit-level view of a system used by the flag checks.
struct SystemBits {
  std::size_t n = 0;
  std::vector<Bits> a, b, sep, wing_a, wing_b;
  // Wings C of system cuts with (C + N(C), ~) in the system.
  std::vector<Bits> components;
  std::set<std::vector<Vertex>> sides;

  SystemBits(const Graph& g, const std::vector<Separation>& cuts) : n(g.order()) {
    for (const Separation& s : cuts) sides.insert(s.a);
    for (const Separation& s : cuts) {
      a.push_back(to_bits(n, s.a));
      b.push_back(to_bits(n, s.b));
      sep.push_back(a.back() & b.back());
      wing_a.push_back(a.back() - b.back());
      wing_b.push_back(b.back() - a.back());
      const Bits& c = wing_a.back();
      if (c.none()) continue;
      if (from_bits(c | neighbourhood(g, c)) == s.a && tilde_side(g, a.back()) == b.back()) {
        components.push_back(c);
      }
    }
  }

  bool holds_component(const Bits& wing) const {
    for (const Bits& c : components) {
      if (c.is_subset_of(wing)) return true;
    }
    return false;
  }

  bool is_wing(const Bits& set) const {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (wing_a[k] == set || wing_b[k] == set) return true;
    }
    return false;
  }
};

bool nested_bits(const Graph& g, const SystemBits& sys, const Bits& a0, const Bits& a1, const Bits& b0,
                 const Bits& b1) {
  const Bits* as[2] = {&a0, &a1};
  const Bits* bs[2] = {&b0, &b1};
  const Bits both = (a0 & a1) | (b0 & b1);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Bits x = *as[i] & *bs[j];
      bool free_wing = true;
      if (x.any() && !x.all()) {
        Bits y = tilde_side(g, x);
        free_wing = !sys.holds_component(x - y) || !sys.holds_component(y - x);
      }
      if (free_wing && both.is_subset_of(*as[1 - i] & *bs[1 - j])) return true;
    }
  }
  return false;
}

std::vector<Bits> components_of(const Graph& g, const Bits& set) {
  std::vector<char> allowed(g.order(), 0);
  for (auto i = set.find_first(); i != Bits::npos; i = set.find_next(i)) allowed[i] = 1;
  std::vector<Bits> out;
  if (set.none()) return out;
  for (const auto& c : connected_components(g, allowed)) out.push_back(to_bits(g.order(), c));
  return out;
}

bool has_wing_component(const Graph& g, const SystemBits& sys, const Bits& set) {
  for (const Bits& c : components_of(g, set)) {
    if (sys.is_wing(c)) return true;
  }
  return false;
}

bool proxy_inside(const std::vector<Bits>& proxies, const Bits& set) {
  for (const Bits& p : proxies) {
    if (p.any() && p.is_subset_of(set)) return true;
  }
  return false;
}

Bits image(const VertexMapping& f, const Bits& set) {
  Bits out(set.size());
  for (auto i = set.find_first(); i != Bits::npos; i = set.find_next(i)) {
    out.set(*f(static_cast<Vertex>(i)));
  }
  return out;
}

}  // namespace

Separation make_separation(SharedGraph g, std::vector<Vertex> a, std::vector<Vertex> b) {
  if (!g) throw Error("separation without host graph");
  Separation s;
  s.host = std::move(g);
  s.a = checked_set(*s.host, std::move(a), "side A");
  s.b = checked_set(*s.host, std::move(b), "side B");
  const std::size_t n = s.host->order();
  Bits sa = to_bits(n, s.a), sb = to_bits(n, s.b);
  if (!(sa | sb).all()) throw Error("sides do not cover the vertex set");
  for (const auto& [u, v] : s.host->edges()) {
    bool u_a = sa.test(u) && !sb.test(u), u_b = sb.test(u) && !sa.test(u);
    bool v_a = sa.test(v) && !sb.test(v), v_b = sb.test(v) && !sa.test(v);
    if ((u_a && v_b) || (u_b && v_a)) {
      throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) + " joins the two wings");
    }
  }
  fill_derived(s);
  return s;
}

Separation separation_from_side(SharedGraph g, std::span<const Vertex> a) {
  if (!g) throw Error("separation without host graph");
  auto side = checked_set(*g, {a.begin(), a.end()}, "side A");
  if (side.empty()) throw Error("empty side");
  if (side.size() == g->order()) throw Error("empty complement");
  Separation s;
  s.host = std::move(g);
  s.b = from_bits(tilde_side(*s.host, to_bits(s.host->order(), side)));
  s.a = std::move(side);
  fill_derived(s);
  return s;
}

bool is_essential(const Graph& g, const Separation& s) {
  if (s.wing_a.empty() || s.wing_b.empty()) return false;
  std::vector<char> allowed(g.order(), 0);
  for (Vertex v : s.wing_a) allowed[v] = 1;
  if (connected_components(g, allowed).size() != 1) return false;
  const std::size_t n = g.order();
  Bits wa = to_bits(n, s.wing_a), wb = to_bits(n, s.wing_b), sep = to_bits(n, s.separator);
  // A proper subset separates iff some maximal one (S - s) does.
  for (Vertex v : s.separator) {
    Bits removed = sep;
    removed.reset(v);
    if (!joined(g, wa, wb, removed)) return false;
  }
  return true;
}

std::size_t CutSystem::min_order() const {
  std::size_t best = cuts.empty() ? 0 : cuts.front().order();
  for (const Separation& s : cuts) best = std::min(best, s.order());
  return best;
}

std::vector<std::vector<Vertex>> CutSystem::separators() const {
  std::vector<std::vector<Vertex>> out;
  std::set<std::vector<Vertex>> seen;
  for (const Separation& s : cuts) {
    if (seen.insert(s.separator).second) out.push_back(s.separator);
  }
  return out;
}

CandidateCuts enumerate_candidate_cuts(SharedGraph g,
                                       const std::vector<std::vector<Vertex>>& end_proxies,
                                       std::size_t max_order,
                                       const std::vector<char>& separator_allowed) {
  if (!g) throw Error("no host graph");
  if (max_order > kMaxOrder) {
    throw Error("max_order " + std::to_string(max_order) + " exceeds the cap of " +
                std::to_string(kMaxOrder));
  }
  CandidateCuts result;
  if (end_proxies.empty()) {
    result.flag = "no end proxies";
    return result;
  }
  if (end_proxies.size() < 2) {
    result.flag = "fewer than two end proxies";
    return result;
  }
  const Graph& graph = *g;
  const std::size_t n = graph.order();
  std::vector<Bits> proxies;
  for (const auto& p : end_proxies) proxies.push_back(to_bits(n, checked_set(graph, p, "end proxy")));
  auto allowed = [&](Vertex v) { return separator_allowed.empty() || separator_allowed[v]; };

  std::map<std::vector<Vertex>, Separation> found;
  auto try_separator = [&](const std::vector<char>& removed) {
    for (const auto& comp : connected_components(graph, [&] {
           std::vector<char> keep(n);
           for (std::size_t v = 0; v < n; ++v) keep[v] = !removed[v];
           return keep;
         }())) {
      Bits c = to_bits(n, comp);
      Bits side = c | neighbourhood(graph, c);
      if (side.all()) continue;
      auto key = from_bits(side);
      if (found.count(key)) continue;
      Separation s = separation_from_side(g, key);
      if (!s.essential) continue;
      if (!proxy_inside(proxies, to_bits(n, s.wing_a)) || !proxy_inside(proxies, to_bits(n, s.wing_b))) {
        continue;
      }
      found.emplace(std::move(key), std::move(s));
    }
  };

  std::vector<char> removed(n, 0);
  // Vertices are chosen in increasing order; the last one must be a cut
  // vertex of what remains, which reaches every minimal separator.
  auto grow = [&](auto&& self, std::size_t depth, std::size_t order, Vertex start) -> void {
    if (depth + 1 == order) {
      for (Vertex v : articulation_points(graph, removed)) {
        if (v < start || !allowed(v)) continue;
        removed[v] = 1;
        try_separator(removed);
        removed[v] = 0;
      }
      return;
    }
    for (Vertex v = start; v < n; ++v) {
      if (!allowed(v)) continue;
      removed[v] = 1;
      self(self, depth + 1, order, v + 1);
      removed[v] = 0;
    }
  };

  for (std::size_t order = 0; order <= max_order; ++order) {
    if (order == 0) {
      try_separator(removed);
    } else {
      grow(grow, 0, order, 0);
    }
    for (auto& [key, s] : found) {
      if (s.order() == order) result.cuts.push_back(std::move(s));
    }
    if (!result.cuts.empty()) {
      result.order = order;
      return result;
    }
    found.clear();
  }
  result.flag = "max_order " + std::to_string(max_order) + " separates no pair of end proxies";
  return result;
}

CutSystem make_cut_system(SharedGraph g, std::vector<Separation> cuts,
                          std::vector<std::vector<Vertex>> end_proxies,
                          std::vector<char> separator_allowed) {
  if (!g) throw Error("no host graph");
  for (const Separation& s : cuts) {
    if (!same_host(s.host, g)) throw Error("separation belongs to another graph");
  }
  CutSystem sys;
  sys.host = g;
  sys.cuts = std::move(cuts);
  sys.end_proxies = std::move(end_proxies);
  sys.separator_allowed = std::move(separator_allowed);
  if (sys.cuts.empty()) {
    sys.notes.push_back("empty system");
    return sys;
  }
  const Graph& graph = *g;
  const std::size_t n = graph.order();
  const std::size_t m = sys.cuts.size();
  SystemBits bits(graph, sys.cuts);

  bool all_essential = true;
  for (const Separation& s : sys.cuts) all_essential = all_essential && s.essential;
  if (!all_essential) sys.notes.push_back("contains a non-essential separation");

  const std::size_t low = sys.min_order();
  sys.minimal = std::all_of(sys.cuts.begin(), sys.cuts.end(),
                            [&](const Separation& s) { return s.order() == low; });

  bool nested = true;
  for (std::size_t x = 0; x < m && nested; ++x) {
    for (std::size_t y = x + 1; y < m && nested; ++y) {
      nested = nested_bits(graph, bits, bits.a[x], bits.b[x], bits.a[y], bits.b[y]);
      if (!nested) {
        sys.notes.push_back("cuts " + std::to_string(x) + " and " + std::to_string(y) + " are not nested");
      }
    }
  }
  sys.nested = nested;

  // (i) every cut has a system side inside its B.
  bool cond_i = true;
  for (std::size_t x = 0; x < m && cond_i; ++x) {
    bool any = false;
    for (std::size_t y = 0; y < m && !any; ++y) any = bits.a[y].is_subset_of(bits.b[x]);
    cond_i = any;
  }
  sys.condition_i = cond_i;

  // (ii) components of B - A hosting a system wing are themselves system sides.
  bool cond_ii = true;
  for (std::size_t x = 0; x < m && cond_ii; ++x) {
    for (const Bits& c : components_of(graph, bits.wing_b[x])) {
      bool hosts = false;
      for (std::size_t y = 0; y < m && !hosts; ++y) hosts = bits.wing_a[y].is_subset_of(c);
      if (hosts && !bits.sides.count(from_bits(c | neighbourhood(graph, c)))) {
        cond_ii = false;
        break;
      }
    }
  }
  sys.condition_ii = cond_ii;

  // (iii) for every pair, matching corners hold system wings.
  bool cond_iii = true;
  for (std::size_t x = 0; x < m && cond_iii; ++x) {
    for (std::size_t y = 0; y < m && cond_iii; ++y) {
      const Bits &X = bits.wing_a[x], &Y = bits.wing_b[x], &X2 = bits.wing_a[y], &Y2 = bits.wing_b[y];
      cond_iii = (has_wing_component(graph, bits, X & X2) && has_wing_component(graph, bits, Y & Y2)) ||
                 (has_wing_component(graph, bits, Y & X2) && has_wing_component(graph, bits, X & Y2));
    }
  }
  sys.condition_iii = cond_iii;

  if (sys.end_proxies.size() >= 2) {
    std::vector<Bits> proxies;
    for (const auto& p : sys.end_proxies) proxies.push_back(to_bits(n, p));
    bool separated = true;
    for (std::size_t x = 0; x < m; ++x) {
      separated = separated && proxy_inside(proxies, bits.wing_a[x]) && proxy_inside(proxies, bits.wing_b[x]);
    }
    if (separated && low > 0 && low - 1 <= kMaxOrder) {
      separated = enumerate_candidate_cuts(g, sys.end_proxies, low - 1, sys.separator_allowed).cuts.empty();
    }
    sys.ends_separated = separated;
  }

  if (n <= kBasicCheckLimit) {
    auto generators = automorphism_generators(graph);
    bool invariant = true;
    for (const auto& f : generators) {
      for (std::size_t x = 0; x < m && invariant; ++x) {
        invariant = bits.sides.count(from_bits(image(f, bits.a[x]))) > 0;
      }
    }
    sys.aut_invariant = invariant;
    auto seps = sys.separators();
    std::map<std::vector<Vertex>, std::size_t> index;
    for (std::size_t i = 0; i < seps.size(); ++i) index[seps[i]] = i;
    std::vector<char> reached(seps.size(), 0);
    std::vector<std::size_t> queue{0};
    reached[0] = 1;
    bool closed = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& f : generators) {
        auto it = index.find(from_bits(image(f, to_bits(n, seps[queue[q]]))));
        if (it == index.end()) {
          closed = false;
          continue;
        }
        if (!reached[it->second]) {
          reached[it->second] = 1;
          queue.push_back(it->second);
        }
      }
    }
    sys.separator_transitive = closed && queue.size() == seps.size();
  } else {
    sys.notes.push_back("automorphism checks unverified above " + std::to_string(kBasicCheckLimit) +
                        " vertices");
  }
  return sys;
}

CutSystem ball_cut_system(const BallDigraph& ball, std::size_t max_order, std::size_t margin) {
  auto g = std::make_shared<const Graph>(underlying_graph(ball.digraph));
  auto allowed = ball.exact() ? std::vector<char>{} : ball.interior_mask(margin);
  auto candidates = enumerate_candidate_cuts(g, ball.end_proxies, max_order, allowed);
  CutSystem sys = make_cut_system(g, std::move(candidates.cuts), ball.end_proxies, std::move(allowed));
  if (!candidates.flag.empty()) sys.notes.insert(sys.notes.begin(), candidates.flag);
  return sys;
}

bool are_nested(const Separation& s1, const Separation& s2, const CutSystem& system) {
  if (!system.host || !same_host(s1.host, system.host) || !same_host(s2.host, system.host)) {
    throw Error("separations and system have different host graphs");
  }
  const Graph& g = *system.host;
  const std::size_t n = g.order();
  SystemBits bits(g, system.cuts);
  return nested_bits(g, bits, to_bits(n, s1.a), to_bits(n, s1.b), to_bits(n, s2.a), to_bits(n, s2.b));
}

BlocksAndSeparators derive_blocks_and_separators(const CutSystem& system) {
  if (!system.host) throw Error("no host graph");
  bool nested = system.nested.value_or(true);
  if (!system.nested) {
    for (std::size_t x = 0; x < system.cuts.size() && nested; ++x) {
      for (std::size_t y = x + 1; y < system.cuts.size() && nested; ++y) {
        nested = are_nested(system.cuts[x], system.cuts[y], system);
      }
    }
  }
  if (!nested) throw Error("cut system is not nested");

  const Graph& g = *system.host;
  const std::size_t n = g.order();
  const std::size_t m = system.cuts.size();
  SystemBits bits(g, system.cuts);
  BlocksAndSeparators out;
  out.separators = system.separators();

  std::set<std::vector<Vertex>> candidates;
  for (Vertex v = 0; v < n; ++v) {
    Bits forced(n);
    forced.set();
    std::vector<std::size_t> open;
    for (std::size_t x = 0; x < m; ++x) {
      if (bits.wing_a[x].test(v)) {
        forced &= bits.a[x];
      } else if (bits.wing_b[x].test(v)) {
        forced &= bits.b[x];
      } else {
        open.push_back(x);
      }
    }
    if (open.size() > kMaxBranching) {
      throw Error("vertex " + std::to_string(v) + " lies in " + std::to_string(open.size()) +
                  " separators; too many to branch over");
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << open.size()); ++mask) {
      Bits x = forced;
      for (std::size_t k = 0; k < open.size(); ++k) x &= (mask >> k) & 1 ? bits.b[open[k]] : bits.a[open[k]];
      candidates.insert(from_bits(x));
    }
  }

  std::vector<Bits> valid;
  for (const auto& c : candidates) {
    Bits x = to_bits(n, c);
    bool ok = x.any();
    bool anchored = false;
    for (std::size_t k = 0; k < m && ok; ++k) {
      bool in_a = x.is_subset_of(bits.a[k]), in_b = x.is_subset_of(bits.b[k]);
      ok = in_a != in_b;
      anchored = anchored || (in_a && bits.sep[k].is_subset_of(x));
    }
    if (ok && anchored) valid.push_back(std::move(x));
  }
  for (std::size_t i = 0; i < valid.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < valid.size() && maximal; ++j) {
      maximal = i == j || !valid[i].is_proper_subset_of(valid[j]);
    }
    if (maximal) out.blocks.push_back(from_bits(valid[i]));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

StructureTree build_structure_tree(const CutSystem& system) {
  auto parts = derive_blocks_and_separators(system);
  StructureTree t;
  t.separators = std::move(parts.separators);
  t.blocks = std::move(parts.blocks);
  const std::size_t n = system.host->order();
  const std::size_t s = t.separators.size();
  std::vector<Bits> block_bits;
  for (const auto& b : t.blocks) block_bits.push_back(to_bits(n, b));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < s; ++i) {
    Bits sep = to_bits(n, t.separators[i]);
    for (std::size_t j = 0; j < t.blocks.size(); ++j) {
      if (sep.is_subset_of(block_bits[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(s + j));
      }
    }
  }
  const std::size_t nodes = s + t.blocks.size();
  t.tree = Graph::from_edge_list(nodes, edges);
  auto describe = [&](std::size_t node) {
    return node < s ? "separator " + set_text(t.separators[node])
                    : "block " + set_text(t.blocks[node - s]);
  };

  auto comps = connected_components(t.tree);
  if (nodes == 0) {
    t.diagnostic = "no separators and no blocks";
  } else if (comps.size() != 1) {
    t.diagnostic = "containment graph has " + std::to_string(comps.size()) + " components; " +
                   describe(comps[1].front()) + " is not connected to " + describe(comps[0].front());
  } else if (edges.size() + 1 != nodes) {
    // Find a cycle and name two separators on it.
    std::vector<std::int64_t> parent(nodes, -1);
    std::vector<char> seen(nodes, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::vector<std::size_t> cycle;
    while (!stack.empty() && cycle.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : t.tree.neighbors(v)) {
        if (static_cast<std::int64_t>(w) == parent[v]) continue;
        if (seen[w]) {
          // Walk both ends up to their common ancestor.
          std::vector<std::size_t> left{v}, right{w};
          std::set<std::size_t> on_left{v};
          for (auto p = parent[v]; p >= 0; p = parent[p]) {
            left.push_back(p);
            on_left.insert(p);
          }
          for (auto p = parent[w]; !on_left.count(right.back()) && p >= 0; p = parent[p]) right.push_back(p);
          cycle = left;
          cycle.insert(cycle.end(), right.begin(), right.end());
          break;
        }
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
    std::vector<std::size_t> seps_on_cycle;
    for (std::size_t node : cycle) {
      if (node < s && std::find(seps_on_cycle.begin(), seps_on_cycle.end(), node) == seps_on_cycle.end()) {
        seps_on_cycle.push_back(node);
      }
    }
    t.diagnostic = "containment graph has a cycle";
    if (seps_on_cycle.size() >= 2) {
      t.diagnostic += " through " + describe(seps_on_cycle[0]) + " and " + describe(seps_on_cycle[1]);
    }
  } else {
    t.is_tree = true;
  }
  return t;
}

std::string to_dot(const StructureTree& tree, const std::vector<std::string>& labels) {
  auto names = [&](const std::vector<Vertex>& vs) {
    constexpr std::size_t kShown = 8;
    std::string s;
    for (std::size_t i = 0; i < vs.size() && i < kShown; ++i) {
      if (i > 0) s += ",";
      s += vs[i] < labels.size() ? labels[vs[i]] : std::to_string(vs[i]);
    }
    if (vs.size() > kShown) s += ",... (" + std::to_string(vs.size()) + ")";
    return s;
  };
  std::ostringstream out;
  out << "graph structure_tree {\n";
  for (std::size_t i = 0; i < tree.separators.size(); ++i) {
    out << "  n" << tree.separator_node(i) << " [shape=box,label=\"" << names(tree.separators[i]) << "\"];\n";
  }
  for (std::size_t j = 0; j < tree.blocks.size(); ++j) {
    out << "  n" << tree.block_node(j) << " [shape=ellipse,label=\"" << names(tree.blocks[j]) << "\"];\n";
  }
  for (const auto& [u, v] : tree.tree.edges()) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace chd
