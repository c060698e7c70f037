#include <random>

#include "chd/families.hpp"

namespace chd {

namespace {

constexpr std::size_t kMaxRounds = 500;

// Adjacency between the two sides; cell (i, j) joins a_i and b_j.
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

  // Side 0 looks at rows (A-vertices), side 1 at columns (B-vertices).
  bool get(int side, std::size_t demand_vertex, std::size_t witness) const {
    return side == 0 ? bits_[demand_vertex * n_ + witness] : bits_[witness * n_ + demand_vertex];
  }
  void set(int side, std::size_t demand_vertex, std::size_t witness, bool value) {
    (side == 0 ? bits_[demand_vertex * n_ + witness] : bits_[witness * n_ + demand_vertex]) = value;
  }
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

struct Demand {
  int side = 0;
  std::vector<std::size_t> with;     // U
  std::vector<std::size_t> without;  // W
};

std::vector<Demand> all_demands(std::size_t n, std::size_t t) {
  std::vector<Demand> demands;
  std::vector<std::size_t> subset;
  // Subsets of size 1..t in lexicographic order, then every U/W split.
  auto emit = [&](const std::vector<std::size_t>& s) {
    for (int side = 0; side < 2; ++side) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << s.size()); ++mask) {
        Demand d;
        d.side = side;
        for (std::size_t i = 0; i < s.size(); ++i) {
          ((mask >> i) & 1 ? d.without : d.with).push_back(s[i]);
        }
        demands.push_back(std::move(d));
      }
    }
  };
  auto grow = [&](auto&& self, std::size_t start) -> void {
    if (!subset.empty()) emit(subset);
    if (subset.size() == t) return;
    for (std::size_t v = start; v < n; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  grow(grow, 0);
  return demands;
}

bool witnessed(const Matrix& adj, const Demand& d) {
  for (std::size_t w = 0; w < adj.n(); ++w) {
    bool ok = true;
    for (std::size_t u : d.with) ok = ok && adj.get(d.side, u, w);
    for (std::size_t u : d.without) ok = ok && !adj.get(d.side, u, w);
    if (ok) return true;
  }
  return false;
}

std::string describe(const Demand& d) {
  const char* prefix = d.side == 0 ? "a" : "b";
  auto list = [&](const std::vector<std::size_t>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i > 0) s += ",";
      s += prefix + std::to_string(vs[i]);
    }
    return s + "}";
  };
  return "U=" + list(d.with) + " W=" + list(d.without);
}

}  // namespace

Digraph build_generic_bipartite(std::size_t n, std::size_t t, std::uint64_t seed) {
  FamilySpec spec;
  spec.kind = FamilyKind::generic_bipartite;
  spec.n = n;
  spec.t = t;
  spec.validate();

  std::mt19937_64 rng(seed);
  Matrix adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) adj.set(0, i, j, rng() & 1);
  }
  const auto demands = all_demands(n, t);
  const Demand* failing = nullptr;
  for (std::size_t round = 0; round <= kMaxRounds; ++round) {
    failing = nullptr;
    for (const Demand& d : demands) {
      if (witnessed(adj, d)) continue;
      if (!failing) failing = &d;
      if (round == kMaxRounds) break;
      const std::size_t w = static_cast<std::size_t>(rng() % n);
      for (std::size_t u : d.with) adj.set(d.side, u, w, true);
      for (std::size_t u : d.without) adj.set(d.side, u, w, false);
    }
    if (!failing) break;
  }
  if (failing) {
    throw Error("generic bipartite construction failed for n=" + std::to_string(n) +
                ", t=" + std::to_string(t) + ": no witness for " + describe(*failing));
  }

  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  for (std::size_t j = 0; j < n; ++j) labels.push_back("b" + std::to_string(j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (adj.get(0, i, j)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(n + j)});
    }
  }
  return Digraph::from_edge_list(2 * n, edges, std::move(labels));
}

}  // namespace chd
