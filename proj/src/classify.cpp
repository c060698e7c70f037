#include "chd/classify.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "chd/isomorphism.hpp"
#include "chd/reachability.hpp"

namespace chd {

namespace {

using Bits = boost::dynamic_bitset<>;

constexpr std::size_t kMargin = 2;
// Classes whose endpoints all have their full neighbourhood are exact.
constexpr std::size_t kReachMargin = 1;
constexpr std::size_t kMaxFittedM = 8;
constexpr std::size_t kMaxGenericityT = 3;
constexpr std::size_t kGenericityBudget = 50'000'000;

FamilySpec spec_of(FamilyKind kind) {
  FamilySpec s;
  s.kind = kind;
  return s;
}

FamilySpec tournament_spec(TournamentKind kind) {
  FamilySpec s = spec_of(FamilyKind::tournament);
  s.tournament_kind = kind;
  return s;
}

FamilySpec wrap(FamilyKind kind, const FamilySpec& inner, std::size_t radius) {
  FamilySpec s = spec_of(kind);
  s.inner = std::make_shared<const FamilySpec>(inner);
  s.radius = radius;
  return s;
}

// Canonical text without the top-level radius and without seeds.
std::string family_text(const FamilySpec& spec) {
  std::string s = to_string(spec);
  s = std::regex_replace(s, std::regex(",seed=[0-9]+"), "");
  s = std::regex_replace(s, std::regex("\\(r=[0-9]+\\)$"), "");
  s = std::regex_replace(s, std::regex(",r=[0-9]+\\)$"), ")");
  return s;
}

std::vector<Vertex> members(const std::vector<int>& side, int which) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v] == which) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

// Splits a connected bipartite graph into (first, second) sides.
std::pair<std::vector<Vertex>, std::vector<Vertex>> sides_of(
    const Graph& g, const std::optional<std::vector<Vertex>>& first_side) {
  auto colour = two_coloring(g);
  if (!colour) throw Error("input is not bipartite");
  if (!first_side) return {members(*colour, 0), members(*colour, 1)};
  std::vector<Vertex> first = *first_side;
  std::sort(first.begin(), first.end());
  first.erase(std::unique(first.begin(), first.end()), first.end());
  std::vector<int> side(g.order(), 1);
  for (Vertex v : first) {
    if (v >= g.order()) throw Error("side hint contains unknown vertex " + std::to_string(v));
    side[v] = 0;
  }
  for (const auto& [u, v] : g.edges()) {
    if (side[u] == side[v]) throw Error("side hint is not a bipartition");
  }
  return {members(side, 0), members(side, 1)};
}

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t genericity_cost(std::size_t x, std::size_t y, std::size_t t) {
  std::size_t demands = 0;
  for (std::size_t k = 1; k <= t; ++k) demands += (choose(x, k) + choose(y, k)) << k;
  return demands * std::max(x, y) * t;
}

std::string case_of_delta(const FamilySpec& delta) {
  switch (delta.kind) {
    case FamilyKind::CP:
      return "7.6(1)";
    case FamilyKind::C:
      return "7.6(2)";
    case FamilyKind::K:
      return "7.6(3)";
    default:
      return "7.6(4)";
  }
}

std::vector<std::uint32_t> boundary_classes(const BallDigraph& b) {
  std::vector<std::uint32_t> classes(b.digraph.order(), 0);
  for (Vertex v : b.boundary) classes[v] = 1;
  return classes;
}

bool rooted_isomorphic(const BallDigraph& a, const BallDigraph& b) {
  if (a.digraph.order() != b.digraph.order() || a.digraph.size() != b.digraph.size()) return false;
  if (a.boundary.size() != b.boundary.size()) return false;
  IsoOptions options;
  options.seed = VertexMapping(a.digraph.order());
  options.seed->set(a.root, b.root);
  options.classes_first = boundary_classes(a);
  options.classes_second = boundary_classes(b);
  return find_isomorphism(a.digraph, b.digraph, options).has_value();
}

// Re-generates `spec` at the input radius around its own root or around a
// neighbour of it and looks for a rooted isomorphism.
bool regenerates(const BallDigraph& input, FamilySpec spec) {
  spec.radius = input.radius;
  if (rooted_isomorphic(input, generate_catalog(spec))) return true;
  spec.radius = input.radius + 1;
  BallDigraph wider = generate_catalog(spec);
  std::vector<Vertex> centres;
  for (Vertex w : wider.digraph.out(wider.root)) centres.push_back(w);
  for (Vertex w : wider.digraph.in(wider.root)) centres.push_back(w);
  std::sort(centres.begin(), centres.end());
  centres.erase(std::unique(centres.begin(), centres.end()), centres.end());
  // Neighbours of the same degree profile give the same sub-ball.
  std::set<std::pair<std::size_t, std::size_t>> tried;
  for (Vertex c : centres) {
    if (!tried.insert({wider.digraph.out(c).size(), wider.digraph.in(c).size()}).second) continue;
    if (rooted_isomorphic(input, sub_ball(wider, c, input.radius))) return true;
  }
  return false;
}

// Is the root in a two-vertex separator with a full end proxy on two sides?
bool root_in_proxy_separator(const BallDigraph& ball, const Graph& g) {
  const std::size_t n = g.order();
  auto interior = ball.interior_mask(kMargin);
  std::vector<char> removed(n, 0);
  removed[ball.root] = 1;
  for (Vertex v : articulation_points(g, removed)) {
    if (!interior[v]) continue;
    removed[v] = 1;
    std::vector<char> keep(n);
    for (std::size_t u = 0; u < n; ++u) keep[u] = !removed[u];
    std::vector<std::int64_t> component(n, -1);
    auto comps = connected_components(g, keep);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (Vertex u : comps[c]) component[u] = static_cast<std::int64_t>(c);
    }
    std::set<std::int64_t> holding;
    for (const auto& proxy : ball.end_proxies) {
      std::set<std::int64_t> hit;
      for (Vertex u : proxy) hit.insert(component[u]);
      if (hit.size() == 1 && *hit.begin() >= 0) holding.insert(*hit.begin());
    }
    removed[v] = 0;
    if (holding.size() >= 2) return true;
  }
  return false;
}

CatalogLabel tree_label(const BallDigraph& ball, CatalogLabel label) {
  const Digraph& d = ball.digraph;
  label.classification_case = "4.2(1)";
  auto boundary = ball.boundary_mask();
  std::set<std::pair<std::size_t, std::size_t>> profiles;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (!boundary[v]) profiles.insert({d.out(v).size(), d.in(v).size()});
  }
  if (profiles.empty()) {
    label.status = LabelStatus::insufficient_radius;
    label.reason = "no vertex with its full neighbourhood";
    return label;
  }
  FamilySpec spec;
  if (profiles.size() == 1) {
    auto [out, in] = *profiles.begin();
    FamilySpec dl_tree = spec_of(FamilyKind::T);
    dl_tree.kappa = out;
    dl_tree.lambda = in;
    dl_tree.radius = 1;
    FamilySpec as_dl = wrap(FamilyKind::DL, dl_tree, ball.radius);
    const std::size_t lambda = out + in;
    if (out == (lambda + 1) / 2 && in == lambda / 2) {
      spec = wrap(FamilyKind::X_lambda_T, tournament_spec(TournamentKind::trivial), ball.radius);
      spec.lambda = lambda;
      label.aliases.push_back(as_dl);
    } else {
      spec = as_dl;
    }
  } else if (profiles.size() == 2 && profiles.begin()->first == 0 && profiles.rbegin()->second == 0) {
    spec = spec_of(FamilyKind::T);
    spec.kappa = profiles.rbegin()->first;
    spec.lambda = profiles.begin()->second;
    spec.radius = ball.radius;
  } else {
    label.status = LabelStatus::outside_classification;
    label.reason = "tree without constant in- and out-degree";
    return label;
  }
  if (!ball.exact() && !regenerates(ball, spec)) {
    label.status = LabelStatus::outside_classification;
    label.reason = "fitted tree " + family_text(spec) + " does not re-generate the ball";
    return label;
  }
  label.status = LabelStatus::classified;
  label.family = spec;
  return label;
}

CatalogLabel triangle_label(const BallDigraph& ball, const Graph& g, CatalogLabel label) {
  const Digraph& d = ball.digraph;
  label.classification_case = "4.2(2)";
  auto boundary = ball.boundary_mask();
  std::optional<Digraph> block;
  std::optional<std::size_t> lambda;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (boundary[v]) continue;
    std::vector<char> around(g.order(), 0);
    for (Vertex w : g.neighbors(v)) around[w] = 1;
    auto comps = connected_components(g, around);
    if (!lambda) lambda = comps.size();
    if (*lambda != comps.size()) {
      label.status = LabelStatus::outside_classification;
      label.reason = "vertices lie in different numbers of blocks";
      return label;
    }
    for (auto& comp : comps) {
      comp.push_back(v);
      std::sort(comp.begin(), comp.end());
      auto sub = induced_subdigraph(d, comp);
      const std::size_t k = comp.size();
      if (sub.digraph.size() != k * (k - 1) / 2 || induced_subgraph(g, comp).size() != k * (k - 1) / 2) {
        label.status = LabelStatus::outside_classification;
        label.reason = "contains triangles but its blocks are not tournaments";
        return label;
      }
      if (!block) {
        block = sub.digraph;
      } else if (!isomorphic(*block, sub.digraph)) {
        label.status = LabelStatus::outside_classification;
        label.reason = "blocks are not isomorphic";
        return label;
      }
    }
  }
  if (!block) {
    label.status = LabelStatus::insufficient_radius;
    label.reason = "no vertex with its full neighbourhood";
    return label;
  }
  if (!isomorphic(*block, build_tournament(TournamentKind::triangle, 3).digraph)) {
    label.status = LabelStatus::outside_classification;
    label.reason = "blocks are tournaments on " + std::to_string(block->order()) +
                   " vertices other than the directed triangle";
    return label;
  }
  FamilySpec spec = wrap(FamilyKind::X_lambda_T, tournament_spec(TournamentKind::triangle), ball.radius);
  spec.lambda = *lambda;
  if (*lambda < 2) {
    label.status = LabelStatus::outside_classification;
    label.reason = "every vertex lies in a single block";
    return label;
  }
  if (!ball.exact() && !regenerates(ball, spec)) {
    label.status = LabelStatus::outside_classification;
    label.reason = family_text(spec) + " does not re-generate the ball";
    return label;
  }
  label.status = LabelStatus::classified;
  label.family = spec;
  return label;
}

CatalogLabel type_two_label(const BallDigraph& ball, const Graph& g, CatalogLabel label) {
  ReachabilityReport report;
  try {
    report = reachability_digraph(ball, kReachMargin);
  } catch (const Error& e) {
    label.status = LabelStatus::insufficient_radius;
    label.reason = e.what();
    return label;
  }
  const ReachClass& rc = report.representative;
  if (!rc.caveat.empty()) {
    label.status = LabelStatus::insufficient_radius;
    label.reason = "reachability class " + rc.caveat;
    return label;
  }
  if (!report.all_isomorphic) label.notes.push_back("interior reachability digraphs differ");
  const Digraph& delta = rc.delta.digraph;
  std::vector<Vertex> sources;
  for (Vertex v = 0; v < delta.order(); ++v) {
    if (!delta.out(v).empty()) {
      if (!delta.in(v).empty()) {
        label.status = LabelStatus::outside_classification;
        label.reason = "reachability digraph is not bipartite";
        return label;
      }
      sources.push_back(v);
    }
  }
  CatalogLabel dlabel = classify_reachability_graph(underlying_graph(delta), sources);
  if (!dlabel.classified() || dlabel.family->kind == FamilyKind::T) {
    label.status = LabelStatus::outside_classification;
    label.reason = "reachability digraph: " + (dlabel.classified() ? "a tree" : dlabel.reason);
    return label;
  }
  label.genericity_level = dlabel.genericity_level;
  std::vector<FamilySpec> deltas{*dlabel.family};
  deltas.insert(deltas.end(), dlabel.aliases.begin(), dlabel.aliases.end());
  label.notes.push_back("reachability digraph " + to_string(dlabel));

  auto cut = articulation_points(g);
  const bool root_cut = std::find(cut.begin(), cut.end(), ball.root) != cut.end();
  if (root_cut) {
    const FamilySpec& primary = deltas.front();
    bool degenerate = (primary.kind == FamilyKind::CP && primary.kappa < 3) ||
                      (primary.kind == FamilyKind::K && std::min(primary.kappa, primary.lambda) < 2);
    if (degenerate) {
      label.status = LabelStatus::outside_classification;
      label.reason = "reachability digraph " + family_text(primary) + " is too small";
      return label;
    }
    FamilySpec spec = wrap(FamilyKind::DL, primary, ball.radius);
    if (primary.kind == FamilyKind::generic_bipartite) {
      label.notes.push_back("re-generation skipped for a finite generic approximation");
    } else if (!regenerates(ball, spec)) {
      label.status = LabelStatus::outside_classification;
      label.reason = family_text(spec) + " does not re-generate the ball";
      return label;
    }
    label.status = LabelStatus::classified;
    label.classification_case = case_of_delta(primary);
    label.family = spec;
    for (std::size_t i = 1; i < deltas.size(); ++i) {
      label.aliases.push_back(wrap(FamilyKind::DL, deltas[i], ball.radius));
    }
    return label;
  }

  std::optional<FamilySpec> family;
  for (const FamilySpec& delta_spec : deltas) {
    const bool is_cp = delta_spec.kind == FamilyKind::CP && delta_spec.kappa >= 3;
    const bool is_k22 = delta_spec.kind == FamilyKind::K && delta_spec.kappa == 2 && delta_spec.lambda == 2;
    if (!is_cp && !is_k22) continue;
    for (std::size_t m = 2; m <= kMaxFittedM && !family; ++m) {
      FamilySpec spec = spec_of(is_cp ? FamilyKind::M : FamilyKind::Mprime);
      spec.kappa = is_cp ? delta_spec.kappa : 0;
      spec.m = m;
      spec.radius = ball.radius;
      if (regenerates(ball, spec)) family = spec;
    }
    if (family) {
      label.classification_case = is_cp ? "7.6(5)" : "7.6(6)";
      break;
    }
  }
  if (!family) {
    label.status = LabelStatus::outside_classification;
    if (!root_in_proxy_separator(ball, g)) {
      label.reason = "connectivity at the root exceeds 2";
    } else if (std::none_of(deltas.begin(), deltas.end(), [](const FamilySpec& s) {
                 return s.kind == FamilyKind::CP || (s.kind == FamilyKind::K && s.kappa == 2 && s.lambda == 2);
               })) {
      label.reason = "connectivity 2 with reachability digraph other than CP or K_{2,2}";
    } else {
      label.reason = "no M or M' member with m <= " + std::to_string(kMaxFittedM) +
                     " re-generates the ball";
    }
    return label;
  }
  label.status = LabelStatus::classified;
  label.family = family;
  return label;
}

}  // namespace

std::string to_string(Confidence c) { return c == Confidence::exact ? "exact" : "local-evidence"; }

bool CatalogLabel::matches(const FamilySpec& spec) const {
  const std::string text = family_text(spec);
  if (family && family_text(*family) == text) return true;
  return std::any_of(aliases.begin(), aliases.end(), [&](const FamilySpec& a) { return family_text(a) == text; });
}

std::string to_string(const CatalogLabel& label) {
  switch (label.status) {
    case LabelStatus::classified:
      return label.type + " case=" + label.classification_case + " " + family_text(*label.family) +
             " confidence=" + to_string(label.confidence);
    case LabelStatus::outside_classification:
      return label.type + " outside classification (" + label.reason + ")";
    case LabelStatus::not_in_scope:
      return "not in scope (" + label.reason + ")";
    case LabelStatus::insufficient_radius:
      return "insufficient radius (" + label.reason + ")";
  }
  return {};
}

std::string to_string(const GenericityWitness& w, const std::vector<std::string>& labels) {
  auto list = [&](const std::vector<Vertex>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i > 0) s += ",";
      s += vs[i] < labels.size() ? labels[vs[i]] : std::to_string(vs[i]);
    }
    return s + "}";
  };
  return "U=" + list(w.with) + " W=" + list(w.without);
}

GenericityResult check_genericity(const Graph& g, std::size_t t,
                                  const std::optional<std::vector<Vertex>>& first_side) {
  if (t == 0) throw Error("t must be at least 1");
  auto [first, second] = sides_of(g, first_side);
  const std::size_t n = g.order();
  std::vector<Bits> adj(n, Bits(n));
  for (const auto& [u, v] : g.edges()) {
    adj[u].set(v);
    adj[v].set(u);
  }
  GenericityResult result;
  result.t = t;
  for (int side = 0; side < 2; ++side) {
    const auto& demand_side = side == 0 ? first : second;
    Bits witnesses(n);
    for (Vertex v : side == 0 ? second : first) witnesses.set(v);
    std::vector<Vertex> subset;
    auto scan = [&](auto&& self, std::size_t start) -> bool {
      if (!subset.empty()) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << subset.size()); ++mask) {
          ++result.demands_checked;
          Bits candidates = witnesses;
          for (std::size_t i = 0; i < subset.size(); ++i) {
            if ((mask >> i) & 1) {
              candidates -= adj[subset[i]];
            } else {
              candidates &= adj[subset[i]];
            }
          }
          if (candidates.none()) {
            GenericityWitness w;
            w.side = side;
            for (std::size_t i = 0; i < subset.size(); ++i) ((mask >> i) & 1 ? w.without : w.with).push_back(subset[i]);
            result.passed = false;
            result.witness = std::move(w);
            return false;
          }
        }
      }
      if (subset.size() == t) return true;
      for (std::size_t i = start; i < demand_side.size(); ++i) {
        subset.push_back(demand_side[i]);
        bool ok = self(self, i + 1);
        subset.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    if (!scan(scan, 0)) return result;
  }
  return result;
}

CatalogLabel classify_reachability_graph(const Graph& g, const std::optional<std::vector<Vertex>>& first_side) {
  if (g.order() == 0 || !is_connected(g)) throw Error("input is not connected");
  auto [x, y] = sides_of(g, first_side);
  CatalogLabel label;
  label.type = "bipartite";
  label.confidence = Confidence::exact;
  if (y.empty()) {
    label.reason = "single vertex";
    return label;
  }
  auto degrees = [&](const std::vector<Vertex>& side) {
    std::set<std::size_t> ds;
    for (Vertex v : side) ds.insert(g.degree(v));
    return ds;
  };
  auto classified = [&](FamilySpec spec, const char* which) {
    label.status = LabelStatus::classified;
    label.classification_case = std::string("6.4(") + which + ")";
    label.family = std::move(spec);
    return label;
  };
  const std::size_t nx = x.size(), ny = y.size();

  if (is_tree(g)) {
    auto dx = degrees(x), dy = degrees(y);
    if (dx.size() != 1 || dy.size() != 1) {
      label.reason = "tree without constant degree on each side";
      return label;
    }
    std::size_t kappa = *dx.begin(), lambda = *dy.begin();
    if (!first_side && kappa > lambda) std::swap(kappa, lambda);
    FamilySpec t = spec_of(FamilyKind::T);
    t.kappa = kappa;
    t.lambda = lambda;
    t.radius = 1;
    // A finite tree with constant side degrees is a star.
    FamilySpec k = spec_of(FamilyKind::K);
    k.kappa = lambda;
    k.lambda = kappa;
    label.aliases.push_back(k);
    return classified(t, "i");
  }
  if (degrees(x) == std::set<std::size_t>{2} && degrees(y) == std::set<std::size_t>{2}) {
    FamilySpec c = spec_of(FamilyKind::C);
    c.m = g.order() / 2;
    if (c.m == 2) {
      FamilySpec k = spec_of(FamilyKind::K);
      k.kappa = k.lambda = 2;
      label.aliases.push_back(k);
    } else if (c.m == 3) {
      FamilySpec cp = spec_of(FamilyKind::CP);
      cp.kappa = 3;
      label.aliases.push_back(cp);
    }
    return classified(c, "ii");
  }
  if (g.size() == nx * ny) {
    FamilySpec k = spec_of(FamilyKind::K);
    k.kappa = nx;
    k.lambda = ny;
    if (!first_side && k.kappa > k.lambda) std::swap(k.kappa, k.lambda);
    return classified(k, "iii");
  }
  if (nx == ny && degrees(x) == std::set<std::size_t>{nx - 1} && degrees(y) == std::set<std::size_t>{nx - 1}) {
    FamilySpec cp = spec_of(FamilyKind::CP);
    cp.kappa = nx;
    return classified(cp, "iv");
  }

  std::size_t t_max = 0;
  while (t_max < kMaxGenericityT && genericity_cost(nx, ny, t_max + 1) <= kGenericityBudget) ++t_max;
  GenericityResult failed;
  for (std::size_t t = 1; t <= t_max; ++t) {
    auto r = check_genericity(g, t, x);
    if (!r.passed) {
      failed = r;
      break;
    }
    label.genericity_level = t;
  }
  if (label.genericity_level >= 2) {
    label.confidence = Confidence::local_evidence;
    label.notes.push_back("extension property holds up to level " + std::to_string(label.genericity_level));
    if (nx != ny) label.notes.push_back("sides of different sizes");
    FamilySpec gen = spec_of(FamilyKind::generic_bipartite);
    gen.n = std::max(nx, ny);
    gen.t = label.genericity_level;
    return classified(gen, "v");
  }
  label.reason = "not in the bipartite catalog";
  if (failed.witness) {
    label.reason += "; genericity fails at t=" + std::to_string(failed.t) + " on " + to_string(*failed.witness);
  }
  return label;
}

CatalogLabel classify_digraph(const BallDigraph& ball) {
  const Graph g = underlying_graph(ball.digraph);
  if (g.order() == 0 || !is_connected(g)) throw Error("input is not connected");
  CatalogLabel label;
  label.confidence = ball.exact() ? Confidence::exact : Confidence::local_evidence;
  if (ball.end_proxies.size() < 2) {
    label.status = LabelStatus::not_in_scope;
    label.reason = "at most one end at this radius";
    return label;
  }
  if (is_tree(g)) {
    label.type = "TypeI";
    return tree_label(ball, std::move(label));
  }
  if (contains_triangle(g)) {
    label.type = "TypeI";
    return triangle_label(ball, g, std::move(label));
  }
  label.type = "TypeII";
  return type_two_label(ball, g, std::move(label));
}

CatalogLabel classify_digraph(const Digraph& d) { return classify_digraph(exact_ball(d)); }

}  // namespace chd
