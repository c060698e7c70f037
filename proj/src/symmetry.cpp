#include "chd/symmetry.hpp"

#include <algorithm>
#include <map>

#include "chd/isomorphism.hpp"

namespace chd {

std::string to_string(Property p) {
  switch (p) {
    case Property::homogeneous:
      return "homogeneous";
    case Property::c_homogeneous:
      return "c_homogeneous";
    case Property::k_arc_transitive:
      return "k_arc_transitive";
    case Property::vertex_transitive:
      return "vertex_transitive";
    case Property::edge_transitive:
      return "edge_transitive";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::pass_local:
      return "pass_local";
  }
  return "?";
}

namespace {

// Decides whether the map from[i] -> to[i] extends in the required sense.
class Extender {
 public:
  virtual ~Extender() = default;
  virtual bool extends(const std::vector<Vertex>& from, const std::vector<Vertex>& to) = 0;
  virtual std::string failure_reason() const = 0;
  std::size_t checks = 0;
};

class GlobalExtender : public Extender {
 public:
  GlobalExtender(const Digraph& d, const std::vector<std::uint32_t>& classes)
      : d_(d), classes_(classes) {}

  bool extends(const std::vector<Vertex>& from, const std::vector<Vertex>& to) override {
    ++checks;
    VertexMapping seed(d_.order());
    for (std::size_t i = 0; i < from.size(); ++i) seed.set(from[i], to[i]);
    if (!is_partial_isomorphism(d_, d_, seed)) return false;
    IsoOptions options;
    options.seed = std::move(seed);
    options.classes_first = classes_;
    options.classes_second = classes_;
    return find_isomorphism(d_, d_, options).has_value();
  }

  std::string failure_reason() const override { return "does not extend to an automorphism"; }

 private:
  const Digraph& d_;
  std::vector<std::uint32_t> classes_;
};

class LocalExtender : public Extender {
 public:
  LocalExtender(const BallDigraph& ball, std::size_t radius)
      : ball_(ball), radius_(radius), boundary_(ball.boundary_mask()) {}

  bool extends(const std::vector<Vertex>& from, const std::vector<Vertex>& to) override {
    ++checks;
    if (cached_key_ != from) {
      cached_key_ = from;
      cached_ = neighbourhood(from);
    }
    const Subdigraph& a = cached_;
    Subdigraph b = neighbourhood(to);
    if (a.digraph.order() != b.digraph.order() || a.digraph.size() != b.digraph.size()) {
      return false;
    }
    VertexMapping seed(a.digraph.order());
    for (std::size_t i = 0; i < from.size(); ++i) seed.set(local(a, from[i]), local(b, to[i]));
    if (!is_partial_isomorphism(a.digraph, b.digraph, seed)) return false;
    IsoOptions options;
    options.seed = std::move(seed);
    options.classes_first = classes(a);
    options.classes_second = classes(b);
    return find_isomorphism(a.digraph, b.digraph, options).has_value();
  }

  std::string failure_reason() const override {
    return "does not extend to the radius-" + std::to_string(radius_) + " neighbourhoods";
  }

 private:
  Subdigraph neighbourhood(const std::vector<Vertex>& set) const {
    const Digraph& d = ball_.digraph;
    std::map<Vertex, std::size_t> dist;
    std::vector<Vertex> frontier;
    for (Vertex v : set) {
      if (dist.emplace(v, 0).second) frontier.push_back(v);
    }
    std::vector<Vertex> all = frontier;
    for (std::size_t level = 1; level <= radius_; ++level) {
      std::vector<Vertex> next;
      for (Vertex v : frontier) {
        for (auto list : {d.out(v), d.in(v)}) {
          for (Vertex w : list) {
            if (dist.emplace(w, level).second) next.push_back(w);
          }
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return induced_subdigraph(d, all);
  }

  static Vertex local(const Subdigraph& s, Vertex host) {
    return static_cast<Vertex>(std::lower_bound(s.to_host.begin(), s.to_host.end(), host) -
                               s.to_host.begin());
  }

  std::vector<std::uint32_t> classes(const Subdigraph& s) const {
    std::vector<std::uint32_t> out;
    for (Vertex v : s.to_host) out.push_back(boundary_[v] ? 1u : 0u);
    return out;
  }

  const BallDigraph& ball_;
  std::size_t radius_;
  std::vector<char> boundary_;
  std::vector<Vertex> cached_key_;
  Subdigraph cached_;
};

// Cheap isomorphism invariant of a small digraph.
std::vector<std::size_t> invariant(const Digraph& d) {
  std::vector<std::size_t> key{d.order(), d.size()};
  std::vector<std::size_t> degrees;
  for (Vertex v = 0; v < d.order(); ++v) degrees.push_back(d.out_degree(v) * 1000 + d.in_degree(v));
  std::sort(degrees.begin(), degrees.end());
  key.insert(key.end(), degrees.begin(), degrees.end());
  return key;
}

struct TypeClass {
  std::vector<Vertex> vertices;
  Digraph digraph;
};

// Runs the representative reduction over `subsets`, largest first.
std::optional<SymmetryWitness> check_subsets(const Digraph& d,
                                             std::vector<std::vector<Vertex>> subsets,
                                             Extender& extender,
                                             const std::vector<std::uint32_t>& classes = {}) {
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  auto classes_of = [&](const std::vector<Vertex>& set) {
    std::vector<std::uint32_t> out;
    if (!classes.empty()) {
      for (Vertex v : set) out.push_back(classes[v]);
    }
    return out;
  };
  std::map<std::vector<std::size_t>, std::vector<TypeClass>> types;
  for (const auto& set : subsets) {
    Digraph sub = induced_subdigraph(d, set).digraph;
    const auto sub_classes = classes_of(set);
    auto key = invariant(sub);
    if (!classes.empty()) {
      auto sorted = sub_classes;
      std::sort(sorted.begin(), sorted.end());
      key.insert(key.end(), sorted.begin(), sorted.end());
    }
    auto& bucket = types[key];
    const TypeClass* type = nullptr;
    std::optional<VertexMapping> psi;
    for (const TypeClass& candidate : bucket) {
      IsoOptions options;
      options.classes_first = classes_of(candidate.vertices);
      options.classes_second = sub_classes;
      psi = find_isomorphism(candidate.digraph, sub, options);
      if (psi) {
        type = &candidate;
        break;
      }
    }
    if (!type) {
      for (const VertexMapping& alpha : all_isomorphisms(sub, sub)) {
        std::vector<Vertex> image;
        bool identity = true;
        bool preserves = true;
        for (Vertex i = 0; i < set.size(); ++i) {
          image.push_back(set[*alpha(i)]);
          identity = identity && *alpha(i) == i;
          preserves = preserves && (classes.empty() || sub_classes[i] == sub_classes[*alpha(i)]);
        }
        if (identity || !preserves) continue;
        if (!extender.extends(set, image)) {
          return SymmetryWitness{set, image,
                                 "automorphism of the subdigraph " + extender.failure_reason()};
        }
      }
      bucket.push_back({set, std::move(sub)});
      continue;
    }
    std::vector<Vertex> image;
    for (Vertex i = 0; i < type->vertices.size(); ++i) image.push_back(set[*(*psi)(i)]);
    if (!extender.extends(type->vertices, image)) {
      return SymmetryWitness{type->vertices, image, "isomorphism " + extender.failure_reason()};
    }
  }
  return std::nullopt;
}

void all_subsets(std::size_t n, std::size_t max_size, std::vector<Vertex>& current, Vertex start,
                 std::vector<std::vector<Vertex>>& out) {
  if (!current.empty()) out.push_back(current);
  if (current.size() == max_size) return;
  for (Vertex v = start; v < n; ++v) {
    current.push_back(v);
    all_subsets(n, max_size, current, v + 1, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Vertex>> connected_subsets(const Digraph& d, std::size_t max_size,
                                                   const std::vector<char>& allowed) {
  const Graph g = underlying_graph(d);
  auto ok = [&](Vertex v) { return allowed.empty() || allowed[v]; };
  std::vector<std::vector<Vertex>> out;
  if (max_size == 0) return out;
  std::vector<Vertex> current;
  std::vector<int> touched(g.order(), 0);  // number of set vertices adjacent or equal

  // ESU enumeration: every connected set is produced once, from its minimum.
  auto extend = [&](auto&& self, std::vector<Vertex> extension, Vertex root) -> void {
    {
      std::vector<Vertex> sorted = current;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(std::move(sorted));
    }
    if (current.size() == max_size) return;
    while (!extension.empty()) {
      Vertex w = extension.back();
      extension.pop_back();
      std::vector<Vertex> next = extension;
      for (Vertex u : g.neighbors(w)) {
        if (u > root && ok(u) && !touched[u]) next.push_back(u);
      }
      current.push_back(w);
      ++touched[w];
      for (Vertex u : g.neighbors(w)) ++touched[u];
      self(self, std::move(next), root);
      for (Vertex u : g.neighbors(w)) --touched[u];
      --touched[w];
      current.pop_back();
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!ok(v)) continue;
    current.assign(1, v);
    ++touched[v];
    for (Vertex u : g.neighbors(v)) ++touched[u];
    std::vector<Vertex> extension;
    for (Vertex u : g.neighbors(v)) {
      if (u > v && ok(u)) extension.push_back(u);
    }
    extend(extend, std::move(extension), v);
    for (Vertex u : g.neighbors(v)) --touched[u];
    --touched[v];
  }
  std::sort(out.begin(), out.end());
  return out;
}

SymmetryVerdict check_homogeneity(const Digraph& d, HomogeneityMode mode, std::size_t max_size,
                                  const std::vector<std::uint32_t>& classes) {
  if (!classes.empty() && classes.size() != d.order()) {
    throw Error("vertex classes must cover every vertex");
  }
  SymmetryVerdict verdict;
  verdict.property = mode == HomogeneityMode::homogeneous ? Property::homogeneous
                                                          : Property::c_homogeneous;
  max_size = std::min(max_size, d.order());
  verdict.bounds.max_size = max_size;
  std::vector<std::vector<Vertex>> subsets;
  if (mode == HomogeneityMode::c_homogeneous) {
    subsets = connected_subsets(d, max_size);
  } else {
    std::vector<Vertex> current;
    all_subsets(d.order(), max_size, current, 0, subsets);
  }
  verdict.bounds.subsets = subsets.size();
  GlobalExtender extender(d, classes);
  verdict.witness = check_subsets(d, std::move(subsets), extender, classes);
  if (!classes.empty()) verdict.note = "class-preserving isomorphisms only";
  verdict.bounds.extension_checks = extender.checks;
  verdict.result = verdict.witness ? Verdict::fail : Verdict::pass;
  return verdict;
}

SymmetryVerdict check_local_c_homogeneity(const BallDigraph& ball, std::size_t max_size,
                                          std::size_t margin) {
  if (margin == 0) throw Error("margin must be at least 1");
  if (ball.exact()) {
    SymmetryVerdict verdict =
        check_homogeneity(ball.digraph, HomogeneityMode::c_homogeneous, max_size);
    verdict.bounds.margin = margin;
    verdict.note = "exact digraph: full automorphisms";
    return verdict;
  }
  auto interior = ball.interior_mask(margin);
  if (std::none_of(interior.begin(), interior.end(), [](char c) { return c != 0; })) {
    throw Error("interior is empty at margin " + std::to_string(margin));
  }
  SymmetryVerdict verdict;
  verdict.property = Property::c_homogeneous;
  verdict.bounds.max_size = max_size;
  verdict.bounds.margin = margin;
  auto subsets = connected_subsets(ball.digraph, max_size, interior);
  verdict.bounds.subsets = subsets.size();
  LocalExtender extender(ball, margin - 1);
  verdict.witness = check_subsets(ball.digraph, std::move(subsets), extender);
  verdict.bounds.extension_checks = extender.checks;
  verdict.result = verdict.witness ? Verdict::fail : Verdict::pass_local;
  return verdict;
}

namespace {

std::vector<SymmetryVerdict> arc_verdicts(const Digraph& d, std::size_t k_max,
                                          const std::vector<char>& allowed, Extender& extender,
                                          Verdict success, std::size_t margin) {
  std::vector<SymmetryVerdict> verdicts;
  for (std::size_t k = 0; k <= k_max; ++k) {
    SymmetryVerdict verdict;
    verdict.property = Property::k_arc_transitive;
    verdict.k = k;
    verdict.bounds.margin = margin;
    std::vector<ArcSequence> arcs;
    for (Vertex v = 0; v < d.order(); ++v) {
      if (!allowed.empty() && !allowed[v]) continue;
      for (auto& arc : enumerate_k_arcs(d, k, v)) {
        bool inside = allowed.empty() ||
                      std::all_of(arc.vertices.begin(), arc.vertices.end(),
                                  [&](Vertex x) { return allowed[x] != 0; });
        if (inside) arcs.push_back(std::move(arc));
      }
    }
    verdict.bounds.subsets = arcs.size();
    const std::size_t before = extender.checks;
    if (arcs.empty()) {
      verdict.result = success;
      verdict.note = "vacuous: no " + std::to_string(k) + "-arc";
    } else {
      verdict.result = success;
      const auto& base = arcs.front().vertices;
      for (std::size_t i = 1; i < arcs.size(); ++i) {
        if (!extender.extends(base, arcs[i].vertices)) {
          verdict.result = Verdict::fail;
          verdict.witness =
              SymmetryWitness{base, arcs[i].vertices, "arc map " + extender.failure_reason()};
          break;
        }
      }
    }
    verdict.bounds.extension_checks = extender.checks - before;
    verdicts.push_back(std::move(verdict));
  }
  return verdicts;
}

}  // namespace

std::vector<SymmetryVerdict> check_arc_transitivity(const Digraph& d, std::size_t k_max) {
  GlobalExtender extender(d, {});
  return arc_verdicts(d, k_max, {}, extender, Verdict::pass, 0);
}

std::vector<SymmetryVerdict> check_arc_transitivity(const BallDigraph& ball, std::size_t k_max,
                                                    std::size_t margin) {
  if (ball.exact()) return check_arc_transitivity(ball.digraph, k_max);
  if (margin == 0) throw Error("margin must be at least 1");
  auto interior = ball.interior_mask(margin);
  if (std::none_of(interior.begin(), interior.end(), [](char c) { return c != 0; })) {
    throw Error("interior is empty at margin " + std::to_string(margin));
  }
  LocalExtender extender(ball, margin - 1);
  return arc_verdicts(ball.digraph, k_max, interior, extender, Verdict::pass_local, margin);
}

}  // namespace chd
