#include "chd/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace chd {

VertexMapping VertexMapping::from_pairs(std::size_t domain_order,
                                        std::span<const std::pair<Vertex, Vertex>> pairs) {
  VertexMapping f(domain_order);
  for (auto [from, to] : pairs) {
    if (from >= domain_order) throw Error("mapping source " + std::to_string(from) + " out of range");
    if (f.contains(from)) throw Error("mapping source " + std::to_string(from) + " repeated");
    f.set(from, to);
  }
  return f;
}

void VertexMapping::set(Vertex from, Vertex to) {
  if (from >= image_.size()) throw Error("mapping source " + std::to_string(from) + " out of range");
  image_[from] = to;
}

std::size_t VertexMapping::size() const {
  return static_cast<std::size_t>(
      std::count_if(image_.begin(), image_.end(), [](Vertex v) { return v != kUnmapped; }));
}

std::vector<std::pair<Vertex, Vertex>> VertexMapping::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> result;
  for (Vertex v = 0; v < image_.size(); ++v) {
    if (image_[v] != kUnmapped) result.emplace_back(v, image_[v]);
  }
  return result;
}

namespace {

// Adjacency seen by the search: undirected graphs use the same lists for
// both directions.
struct View {
  std::size_t n = 0;
  const std::vector<std::vector<Vertex>>* out = nullptr;
  const std::vector<std::vector<Vertex>>* in = nullptr;
  bool directed = true;

  bool arc(Vertex u, Vertex v) const {
    const auto& list = (*out)[u];
    return std::binary_search(list.begin(), list.end(), v);
  }
};

View view_of(const Digraph& d) { return {d.order(), &d.out_lists(), &d.in_lists(), true}; }
View view_of(const Graph& g) { return {g.order(), &g.adjacency(), &g.adjacency(), false}; }

std::size_t arc_count(const View& v) {
  std::size_t m = 0;
  for (const auto& list : *v.out) m += list.size();
  return m;
}

bool partial_iso(const View& a, const View& b, const VertexMapping& f) {
  if (f.domain_order() != a.n) return false;
  auto pairs = f.pairs();
  std::vector<Vertex> images;
  for (auto [u, fu] : pairs) {
    if (fu >= b.n) return false;
    images.push_back(fu);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  for (auto [u, fu] : pairs) {
    for (auto [v, fv] : pairs) {
      if (u == v) continue;
      if (a.arc(u, v) != b.arc(fu, fv)) return false;
    }
  }
  return true;
}

using Colors = std::vector<std::uint32_t>;

// Colour refinement over the disjoint union of two views; union vertex x < n
// is vertex x of the first view, x >= n is vertex x-n of the second.
class Refiner {
 public:
  Refiner(const View& a, const View& b) : a_(a), b_(b), n_(a.n) {}

  std::size_t union_order() const { return 2 * n_; }

  // Refines in place to the coarsest equitable refinement. Returns false when
  // some colour class has different sizes on the two sides.
  bool refine(Colors& colors) const {
    std::size_t classes = count_classes(colors);
    std::vector<std::vector<std::uint32_t>> sig(2 * n_);
    std::vector<std::uint32_t> order(2 * n_);
    while (true) {
      for (std::size_t x = 0; x < 2 * n_; ++x) {
        const View& v = x < n_ ? a_ : b_;
        Vertex local = static_cast<Vertex>(x < n_ ? x : x - n_);
        std::size_t offset = x < n_ ? 0 : n_;
        auto& s = sig[x];
        s.clear();
        s.push_back(colors[x]);
        std::size_t mark = s.size();
        for (Vertex w : (*v.out)[local]) s.push_back(colors[w + offset]);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
        if (v.directed) {
          s.push_back(UINT32_MAX);
          mark = s.size();
          for (Vertex w : (*v.in)[local]) s.push_back(colors[w + offset]);
          std::sort(s.begin() + static_cast<std::ptrdiff_t>(mark), s.end());
        }
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::uint32_t x, std::uint32_t y) { return sig[x] < sig[y]; });
      std::uint32_t next = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
        colors[order[i]] = next;
      }
      std::size_t refined = order.empty() ? 0 : next + 1;
      if (!balanced(colors)) return false;
      if (refined == classes) return true;
      classes = refined;
    }
  }

  bool balanced(const Colors& colors) const {
    std::vector<std::int64_t> count(2 * n_ + 2, 0);
    for (std::size_t x = 0; x < 2 * n_; ++x) {
      if (colors[x] >= count.size()) return false;
      count[colors[x]] += x < n_ ? 1 : -1;
    }
    return std::all_of(count.begin(), count.end(), [](std::int64_t c) { return c == 0; });
  }

 private:
  static std::size_t count_classes(const Colors& colors) {
    Colors copy = colors;
    std::sort(copy.begin(), copy.end());
    return static_cast<std::size_t>(std::unique(copy.begin(), copy.end()) - copy.begin());
  }

  const View& a_;
  const View& b_;
  std::size_t n_;
};

class Search {
 public:
  Search(const View& a, const View& b, std::size_t limit)
      : a_(a), b_(b), refiner_(a, b), limit_(limit) {}

  std::vector<VertexMapping> run(Colors colors) {
    descend(std::move(colors));
    return std::move(found_);
  }

 private:
  bool done() const { return found_.size() >= limit_; }

  void descend(Colors colors) {
    if (done()) return;
    if (!refiner_.refine(colors)) return;
    const std::size_t n = a_.n;
    // Cell sizes on the first side; the target is the smallest non-singleton.
    std::vector<std::size_t> cell_size(2 * n + 2, 0);
    for (std::size_t x = 0; x < n; ++x) ++cell_size[colors[x]];
    std::uint32_t target = UINT32_MAX;
    std::size_t best = SIZE_MAX;
    for (std::uint32_t c = 0; c < cell_size.size(); ++c) {
      if (cell_size[c] > 1 && cell_size[c] < best) {
        best = cell_size[c];
        target = c;
      }
    }
    if (target == UINT32_MAX) {
      VertexMapping f(n);
      std::vector<Vertex> by_color(2 * n + 2, VertexMapping::kUnmapped);
      for (std::size_t x = n; x < 2 * n; ++x) by_color[colors[x]] = static_cast<Vertex>(x - n);
      for (Vertex v = 0; v < n; ++v) f.set(v, by_color[colors[v]]);
      if (partial_iso(a_, b_, f)) found_.push_back(std::move(f));
      return;
    }
    Vertex u = 0;
    while (colors[u] != target) ++u;
    const std::uint32_t fresh = static_cast<std::uint32_t>(2 * n + 1);
    for (std::size_t x = n; x < 2 * n && !done(); ++x) {
      if (colors[x] != target) continue;
      Colors next = colors;
      next[u] = fresh;
      next[x] = fresh;
      descend(std::move(next));
    }
  }

  const View& a_;
  const View& b_;
  Refiner refiner_;
  std::size_t limit_;
  std::vector<VertexMapping> found_;
};

std::vector<VertexMapping> search(const View& a, const View& b, const IsoOptions& options,
                                  std::size_t limit) {
  if (options.seed && !partial_iso(a, b, *options.seed)) {
    throw Error("invalid seed: not an injective edge- and non-edge-preserving partial map");
  }
  if (options.classes_first.size() != options.classes_second.size()) {
    throw Error("vertex classes must be given for both digraphs");
  }
  if (!options.classes_first.empty() &&
      (options.classes_first.size() != a.n || options.classes_second.size() != b.n)) {
    throw Error("vertex class vectors must cover every vertex");
  }
  if (a.n != b.n || arc_count(a) != arc_count(b)) return {};
  const std::size_t n = a.n;
  if (n == 0) return {VertexMapping(0)};

  // Initial colours: (class, seed slot) pairs, ranked.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> key(2 * n, {0, 0});
  if (!options.classes_first.empty()) {
    for (std::size_t v = 0; v < n; ++v) {
      key[v].first = options.classes_first[v];
      key[v + n].first = options.classes_second[v];
    }
  }
  if (options.seed) {
    std::uint32_t slot = 1;
    for (auto [u, fu] : options.seed->pairs()) {
      key[u].second = slot;
      key[fu + n].second = slot;
      ++slot;
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> distinct = key;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Colors colors(2 * n);
  for (std::size_t x = 0; x < 2 * n; ++x) {
    colors[x] = static_cast<std::uint32_t>(
        std::lower_bound(distinct.begin(), distinct.end(), key[x]) - distinct.begin());
  }
  return Search(a, b, limit).run(std::move(colors));
}

}  // namespace

bool is_partial_isomorphism(const Digraph& a, const Digraph& b, const VertexMapping& f) {
  return partial_iso(view_of(a), view_of(b), f);
}

bool is_partial_isomorphism(const Graph& a, const Graph& b, const VertexMapping& f) {
  return partial_iso(view_of(a), view_of(b), f);
}

std::optional<VertexMapping> find_isomorphism(const Digraph& a, const Digraph& b,
                                              const IsoOptions& options) {
  auto found = search(view_of(a), view_of(b), options, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::optional<VertexMapping> find_isomorphism(const Graph& a, const Graph& b,
                                              const IsoOptions& options) {
  auto found = search(view_of(a), view_of(b), options, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<VertexMapping> all_isomorphisms(const Digraph& a, const Digraph& b, std::size_t limit) {
  return search(view_of(a), view_of(b), {}, limit);
}

std::vector<VertexMapping> automorphism_generators(const Graph& g) {
  std::vector<VertexMapping> generators;
  std::vector<std::pair<Vertex, Vertex>> fixed;
  for (Vertex base = 0; base < g.order(); ++base) {
    for (Vertex target = 0; target < g.order(); ++target) {
      if (target == base) continue;
      auto pairs = fixed;
      pairs.emplace_back(base, target);
      IsoOptions options;
      options.seed = VertexMapping::from_pairs(g.order(), pairs);
      if (!is_partial_isomorphism(g, g, *options.seed)) continue;
      if (auto f = find_isomorphism(g, g, options)) generators.push_back(std::move(*f));
    }
    fixed.emplace_back(base, base);
  }
  return generators;
}

}  // namespace chd
