#pragma once

// Homogeneity, C-homogeneity and k-arc-transitivity verdicts with witnesses.

#include <optional>
#include <string>
#include <vector>

#include "chd/core.hpp"
#include "chd/families.hpp"

namespace chd {

enum class Property { homogeneous, c_homogeneous, k_arc_transitive, vertex_transitive, edge_transitive };
enum class Verdict { pass, fail, pass_local };

std::string to_string(Property p);
std::string to_string(Verdict v);

/// A map first[i] -> second[i] between two induced subdigraphs (or two
/// k-arcs) that has no extension of the required kind.
struct SymmetryWitness {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  std::string reason;
};

struct SearchBounds {
  std::size_t max_size = 0;
  std::size_t margin = 0;
  /// Subsets (or arcs) examined and extension searches run.
  std::size_t subsets = 0;
  std::size_t extension_checks = 0;
};

struct SymmetryVerdict {
  Property property = Property::c_homogeneous;
  std::size_t k = 0;  ///< arc length for k_arc_transitive
  Verdict result = Verdict::pass;
  std::optional<SymmetryWitness> witness;
  SearchBounds bounds;
  std::string note;

  bool passed() const { return result != Verdict::fail; }
};

enum class HomogeneityMode { homogeneous, c_homogeneous };

/// Exhaustive over induced subdigraphs of at most max_size vertices (only
/// connected ones in c mode). Per isomorphism type one representative A is
/// fixed; every automorphism of A and one isomorphism A -> B per member B must
/// extend to an automorphism of d, which covers all isomorphisms of the type.
/// Larger subdigraphs are examined first. With `classes` (one entry per
/// vertex) only class-preserving isomorphisms are considered, e.g. the
/// side-preserving maps of a bipartite digraph.
SymmetryVerdict check_homogeneity(const Digraph& d, HomogeneityMode mode, std::size_t max_size,
                                  const std::vector<std::uint32_t>& classes = {});

/// Ball version of the c mode: subdigraphs inside interior(margin) and
/// extension to an isomorphism between their radius-(margin-1)
/// neighbourhoods that respects the boundary. Exact balls are delegated to
/// check_homogeneity. Throws chd::Error if the interior is empty or margin is 0.
SymmetryVerdict check_local_c_homogeneity(const BallDigraph& ball, std::size_t max_size,
                                          std::size_t margin);

/// One verdict per k = 0..k_max. The first k-arc (in enumeration order) is
/// mapped to every other k-arc by an automorphism. Without k-arcs the verdict
/// is a vacuous pass with a note.
std::vector<SymmetryVerdict> check_arc_transitivity(const Digraph& d, std::size_t k_max);

/// Ball version: arcs inside interior(margin), mapped by isomorphisms between
/// their radius-(margin-1) neighbourhoods respecting the boundary.
std::vector<SymmetryVerdict> check_arc_transitivity(const BallDigraph& ball, std::size_t k_max,
                                                    std::size_t margin);

/// Every connected vertex set of size 1..max_size inside `allowed` (all
/// vertices when empty), each once and sorted.
std::vector<std::vector<Vertex>> connected_subsets(const Digraph& d, std::size_t max_size,
                                                   const std::vector<char>& allowed = {});

}  // namespace chd
