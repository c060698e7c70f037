#pragma once

// Generators for the digraph families of the classification. Finite members
// are produced exactly; infinite members are produced as breadth-first balls
// around a root with their boundary marked.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chd/core.hpp"

namespace chd {

enum class FamilyKind {
  T,                  // directed semi-regular tree T_{kappa,lambda}
  K,                  // complete bipartite digraph K_{kappa,lambda}
  CP,                 // directed complement of a perfect matching CP_kappa
  C,                  // alternating cycle C_{2m}
  X_undirected,       // X_{kappa,lambda}: blocks K_kappa, each vertex in lambda blocks
  X_lambda_T,         // X_lambda(T): blocks copies of a tournament T
  DL,                 // DL(Delta)
  M,                  // M(kappa, m)
  Mprime,             // M'(2m)
  tournament,
  generic_bipartite,
  line_of,            // line digraph of another member
};

enum class TournamentKind { trivial, triangle, linear, circular_P, paley_generic };

std::string to_string(FamilyKind kind);
std::string to_string(TournamentKind kind);

/// Symbolic description of a family member. Which fields matter depends on
/// `kind`; see validate().
struct FamilySpec {
  FamilyKind kind = FamilyKind::C;
  std::size_t kappa = 0;
  std::size_t lambda = 0;
  std::size_t m = 0;
  TournamentKind tournament_kind = TournamentKind::trivial;
  std::size_t n = 0;
  std::size_t t = 0;
  std::uint64_t seed = 0;
  std::size_t radius = 0;
  /// Delta for DL, the tournament for X_lambda_T, the host for line_of.
  std::shared_ptr<const FamilySpec> inner;

  /// Throws chd::Error on out-of-range parameters.
  void validate() const;
  /// True when the generator returns an exact finite digraph.
  bool finite() const;

  friend bool operator==(const FamilySpec& a, const FamilySpec& b);
};

/// Canonical text, e.g. `M(kappa=3,m=2,r=5)` or `DL(C(m=2),r=3)`.
std::string to_string(const FamilySpec& spec);
/// Parses the canonical text (whitespace tolerant). Throws chd::Error.
FamilySpec parse_family_spec(const std::string& text);

/// A digraph with a root, a radius and marked boundary. Finite family members
/// use the same type with an empty boundary.
struct BallDigraph {
  Digraph digraph;
  Vertex root = 0;
  std::size_t radius = 0;
  /// Vertices whose neighbourhood in the infinite object is not fully present.
  std::vector<Vertex> boundary;
  /// Partition of the boundary into groups standing in for ends.
  std::vector<std::vector<Vertex>> end_proxies;
  /// Canonical text of the generating spec, if any.
  std::string family;
  /// Free-form notes, e.g. "paley stand-in for the generic tournament".
  std::vector<std::string> notes;

  bool exact() const { return boundary.empty(); }
  /// Undirected distance of every vertex from the root.
  std::vector<std::size_t> distances() const;
  /// Vertices at distance <= radius - margin; all vertices when exact().
  std::vector<Vertex> interior(std::size_t margin) const;
  std::vector<char> interior_mask(std::size_t margin) const;
  std::vector<char> boundary_mask() const;
};

/// Wraps a finite digraph as an exact ball around `root`.
BallDigraph exact_ball(Digraph d, Vertex root = 0);

/// Rebuilds boundary-derived fields (end proxies) for a ball given its
/// digraph, root, radius and boundary. Proxies are the boundary vertices
/// grouped by the components of the outer shell (distance >= radius-1).
std::vector<std::vector<Vertex>> compute_end_proxies(const Digraph& d, Vertex root,
                                                     std::size_t radius,
                                                     const std::vector<Vertex>& boundary);

/// BFS ball of radius r around `root` inside `host`, re-rooted at vertex 0.
/// Boundary: host-boundary vertices that survive, plus the vertices at
/// distance exactly r (for an exact host only those with a neighbour outside).
BallDigraph sub_ball(const BallDigraph& host, Vertex root, std::size_t radius);

/// Audit data for the M and M' constructions. Scaffold node ids index
/// `scaffold`; ball vertex ids index the per-vertex vectors.
struct ConstructionTrace {
  struct Node {
    std::string address;               ///< path from the scaffold root, e.g. "r.0.2"
    bool in_u = false;                 ///< side U (cyclically ordered) or W
    std::vector<std::int64_t> neighbors;  ///< in cyclic/enumeration order
  };
  std::vector<Node> scaffold;
  std::vector<std::int64_t> u_of;       ///< per ball vertex: u_y
  std::vector<std::int64_t> w_of;       ///< per ball vertex: its W end
  std::vector<std::size_t> position;    ///< per ball vertex: 1-based index in N(u_y)
  std::vector<std::optional<Vertex>> sigma;  ///< successor in N(u_y), if in the ball
  /// M' only: for each materialised w, the ball vertices a_w and b_w if present.
  struct Pair {
    std::int64_t w = -1;
    std::optional<Vertex> a;
    std::optional<Vertex> b;
  };
  std::vector<Pair> ab_pairs;
};

/// Cyclic order of each N(u): scaffold generation order, or a seeded shuffle.
struct OrderChoice {
  std::optional<std::uint64_t> shuffle_seed;
};

struct ConstructedBall {
  BallDigraph ball;
  ConstructionTrace trace;
};

/// Generates any member; infinite kinds yield balls of spec.radius.
BallDigraph generate_catalog(const FamilySpec& spec);

BallDigraph build_tournament(TournamentKind kind, std::size_t n);
BallDigraph build_DL(const FamilySpec& delta, std::size_t radius);
ConstructedBall build_M(std::size_t kappa, std::size_t m, std::size_t radius,
                        OrderChoice order = {});
ConstructedBall build_M_prime(std::size_t m, std::size_t radius, OrderChoice order = {});
/// Bipartite digraph on sides of n vertices each (A = 0..n-1 -> B = n..2n-1)
/// satisfying the extension property up to level t on both sides.
Digraph build_generic_bipartite(std::size_t n, std::size_t t, std::uint64_t seed);
/// Line digraph of a ball, re-rooted at the first out-edge of the host root
/// and cut back to radius host.radius - 2 so that it is a ball of L(host).
BallDigraph build_line_of(const BallDigraph& host);

}  // namespace chd
