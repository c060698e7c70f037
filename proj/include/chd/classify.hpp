#pragma once

// Matching digraphs and bipartite graphs against the catalog of
// connected-homogeneous structures.

#include <optional>
#include <string>
#include <vector>

#include "chd/core.hpp"
#include "chd/families.hpp"

namespace chd {

enum class Confidence { exact, local_evidence };
enum class LabelStatus { classified, outside_classification, not_in_scope, insufficient_radius };

std::string to_string(Confidence c);

struct CatalogLabel {
  LabelStatus status = LabelStatus::outside_classification;
  /// "TypeI", "TypeII" or "bipartite".
  std::string type;
  /// Case of the classification theorem, e.g. "7.6(5)" or "6.4(iv)".
  std::string classification_case;
  /// Fitted member; its radius is the input radius.
  std::optional<FamilySpec> family;
  /// Other names of the same member, e.g. C(m=3) for CP(kappa=3).
  std::vector<FamilySpec> aliases;
  /// Highest t with a passing genericity scan, when one was run.
  std::size_t genericity_level = 0;
  Confidence confidence = Confidence::local_evidence;
  std::string reason;
  std::vector<std::string> notes;

  bool classified() const { return status == LabelStatus::classified; }
  /// True if `spec` is the fitted family or one of its aliases, ignoring the
  /// top-level radius and seeds.
  bool matches(const FamilySpec& spec) const;
};

/// Single line, e.g. `TypeII case=7.6(5) M(kappa=3,m=2) confidence=local-evidence`.
std::string to_string(const CatalogLabel& label);

struct GenericityWitness {
  int side = 0;  ///< 0: U, W inside the first side, witness sought in the second
  std::vector<Vertex> with;     ///< U
  std::vector<Vertex> without;  ///< W
};

struct GenericityResult {
  bool passed = true;
  std::size_t t = 0;
  std::optional<GenericityWitness> witness;
  std::size_t demands_checked = 0;
};

std::string to_string(const GenericityWitness& w, const std::vector<std::string>& labels = {});

/// For all disjoint U, W inside one side with 1 <= |U| + |W| <= t there is
/// a vertex of the other side adjacent to all of U and to none of W; both
/// sides are scanned. The first side is `first_side` if given, otherwise the
/// colour class of vertex 0. Throws chd::Error if g is not bipartite or t is 0.
GenericityResult check_genericity(const Graph& g, std::size_t t,
                                  const std::optional<std::vector<Vertex>>& first_side = {});

/// Cascade: tree, cycle, complete bipartite, complement of a perfect
/// matching, then genericity at the largest affordable t. `first_side`
/// fixes which side is kappa; otherwise kappa <= lambda. Throws chd::Error on
/// disconnected or non-bipartite input.
CatalogLabel classify_reachability_graph(const Graph& g,
                                         const std::optional<std::vector<Vertex>>& first_side = {});

/// Type I / Type II pipeline on a ball: tree and triangle tests, then the
/// reachability digraph and the local connectivity at the root. Fitted
/// parameters are confirmed by re-generating the ball and testing rooted
/// isomorphism. Throws chd::Error on disconnected input.
CatalogLabel classify_digraph(const BallDigraph& ball);
CatalogLabel classify_digraph(const Digraph& d);

}  // namespace chd
