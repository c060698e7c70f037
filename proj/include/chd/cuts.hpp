#pragma once

// Vertex separations, cut systems with end proxies in place of ends, and the
// structure tree of separators and blocks.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chd/core.hpp"
#include "chd/families.hpp"

namespace chd {

using SharedGraph = std::shared_ptr<const Graph>;

/// A pair of sides (A, B) covering the vertex set with no edge between
/// A - B and B - A. All vertex sets are sorted.
struct Separation {
  SharedGraph host;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<Vertex> separator;  ///< A & B
  std::vector<Vertex> wing_a;     ///< A - B
  std::vector<Vertex> wing_b;     ///< B - A
  bool essential = false;

  std::size_t order() const { return separator.size(); }
  /// Same host and same sides in the same orientation.
  friend bool operator==(const Separation& x, const Separation& y) {
    return x.host == y.host && x.a == y.a && x.b == y.b;
  }
};

/// Validates the cover and the no-crossing-edge condition. Throws chd::Error.
Separation make_separation(SharedGraph g, std::vector<Vertex> a, std::vector<Vertex> b);

/// (A, ~) = (A, (V - A) + N(V - A)). Throws chd::Error if A is empty or all of V.
Separation separation_from_side(SharedGraph g, std::span<const Vertex> a);

/// Finite order, non-empty wings, connected wing A - B and no proper subset
/// of the separator separating the wings.
bool is_essential(const Graph& g, const Separation& s);

/// Flags are nullopt when not evaluated ("unverified").
struct CutSystem {
  SharedGraph host;
  std::vector<Separation> cuts;
  std::vector<std::vector<Vertex>> end_proxies;
  /// Vertices allowed in separators when the cuts were enumerated (all when empty).
  std::vector<char> separator_allowed;

  std::optional<bool> minimal;
  std::optional<bool> nested;
  std::optional<bool> condition_i;
  std::optional<bool> condition_ii;
  std::optional<bool> condition_iii;
  std::optional<bool> aut_invariant;
  std::optional<bool> separator_transitive;
  /// Every cut has a full proxy in both wings and no smaller order does.
  std::optional<bool> ends_separated;
  std::vector<std::string> notes;

  std::size_t min_order() const;
  /// Distinct separators in order of first occurrence.
  std::vector<std::vector<Vertex>> separators() const;
};

/// Builds the system and evaluates all flags. Automorphism-based checks run
/// only up to kBasicCheckLimit vertices.
CutSystem make_cut_system(SharedGraph g, std::vector<Separation> cuts,
                          std::vector<std::vector<Vertex>> end_proxies,
                          std::vector<char> separator_allowed = {});
inline constexpr std::size_t kBasicCheckLimit = 60;

struct CandidateCuts {
  std::vector<Separation> cuts;
  std::size_t order = 0;
  /// Empty on success, e.g. "no end proxies".
  std::string flag;
};

/// Every essential separation (C + N(C), ~), C a component of G - S for a
/// vertex set S of size <= max_order inside `separator_allowed` (all vertices
/// when empty), whose wings each contain a full end proxy. Only the smallest
/// order found is kept. Cost O(|V|^max_order); max_order is capped at 4.
CandidateCuts enumerate_candidate_cuts(SharedGraph g,
                                       const std::vector<std::vector<Vertex>>& end_proxies,
                                       std::size_t max_order,
                                       const std::vector<char>& separator_allowed = {});

/// Candidate cuts of the underlying graph of a ball with its end proxies and
/// separators restricted to interior(margin), wrapped as a system.
CutSystem ball_cut_system(const BallDigraph& ball, std::size_t max_order, std::size_t margin = 2);

/// Literal nestedness over `system`: some corner A_i & B_j has a wing of
/// (A_i & B_j, ~) holding no system component, and the opposite corner
/// contains both separators. Throws chd::Error on host mismatch.
bool are_nested(const Separation& s1, const Separation& s2, const CutSystem& system);

struct BlocksAndSeparators {
  std::vector<std::vector<Vertex>> separators;
  std::vector<std::vector<Vertex>> blocks;
};

/// Separators of the system cuts and the maximal one-sided vertex sets.
/// Throws chd::Error if the system is not nested.
BlocksAndSeparators derive_blocks_and_separators(const CutSystem& system);

struct StructureTree {
  std::vector<std::vector<Vertex>> separators;
  std::vector<std::vector<Vertex>> blocks;
  /// Nodes 0..S-1 are separators, S.. are blocks; S ~ X iff S is inside X.
  Graph tree;
  bool is_tree = false;
  /// Why the containment graph is not a tree.
  std::string diagnostic;

  std::size_t separator_node(std::size_t i) const { return i; }
  std::size_t block_node(std::size_t j) const { return separators.size() + j; }
};

StructureTree build_structure_tree(const CutSystem& system);

/// Separators as boxes, blocks as ellipses. Vertex names come from `labels`
/// when given.
std::string to_dot(const StructureTree& tree, const std::vector<std::string>& labels = {});

}  // namespace chd
