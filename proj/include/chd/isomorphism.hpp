#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chd/core.hpp"

namespace chd {

/// Injective partial map from the vertices of one digraph to another.
class VertexMapping {
 public:
  static constexpr Vertex kUnmapped = static_cast<Vertex>(-1);

  VertexMapping() = default;
  explicit VertexMapping(std::size_t domain_order) : image_(domain_order, kUnmapped) {}
  /// Builds from (source, target) pairs; throws on conflicting or repeated sources.
  static VertexMapping from_pairs(std::size_t domain_order,
                                  std::span<const std::pair<Vertex, Vertex>> pairs);

  void set(Vertex from, Vertex to);
  std::optional<Vertex> operator()(Vertex v) const {
    if (v >= image_.size() || image_[v] == kUnmapped) return std::nullopt;
    return image_[v];
  }
  bool contains(Vertex v) const { return v < image_.size() && image_[v] != kUnmapped; }
  std::size_t domain_order() const { return image_.size(); }
  std::size_t size() const;
  bool total() const { return size() == image_.size(); }
  std::vector<std::pair<Vertex, Vertex>> pairs() const;
  std::span<const Vertex> raw() const { return image_; }

  friend bool operator==(const VertexMapping&, const VertexMapping&) = default;

 private:
  std::vector<Vertex> image_;
};

/// Injective, and for all u,v in the domain (u,v) in E1 <=> (f(u),f(v)) in E2.
bool is_partial_isomorphism(const Digraph& a, const Digraph& b, const VertexMapping& f);
bool is_partial_isomorphism(const Graph& a, const Graph& b, const VertexMapping& f);

struct IsoOptions {
  /// Partial isomorphism that every result must extend.
  std::optional<VertexMapping> seed;
  /// Optional vertex classes; a result maps class c of the first digraph into
  /// class c of the second. Both must be given together.
  std::vector<std::uint32_t> classes_first;
  std::vector<std::uint32_t> classes_second;
};

/// Exhaustive search for an isomorphism extending the seed and honouring the
/// vertex classes. Colour refinement on the disjoint union prunes the search;
/// returned mappings are re-verified. Throws chd::Error on an invalid seed.
std::optional<VertexMapping> find_isomorphism(const Digraph& a, const Digraph& b,
                                              const IsoOptions& options = {});
std::optional<VertexMapping> find_isomorphism(const Graph& a, const Graph& b,
                                              const IsoOptions& options = {});

inline bool isomorphic(const Digraph& a, const Digraph& b) {
  return find_isomorphism(a, b).has_value();
}
inline bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

/// Every isomorphism a -> b (e.g. all automorphisms when a == b). Intended for
/// small digraphs; stops after `limit` results.
std::vector<VertexMapping> all_isomorphisms(const Digraph& a, const Digraph& b,
                                            std::size_t limit = SIZE_MAX);

/// Coset representatives along a stabiliser chain; together they generate the
/// full automorphism group.
std::vector<VertexMapping> automorphism_generators(const Graph& g);

}  // namespace chd
