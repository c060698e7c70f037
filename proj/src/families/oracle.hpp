#pragma once

// Lazily materialised infinite digraphs, queried vertex by vertex while a
// ball is cut out of them.

#include <cstdint>
#include <string>
#include <vector>

#include "chd/families.hpp"

namespace chd::detail {

using Key = std::uint64_t;

struct Arc {
  Key other = 0;
  bool outgoing = false;
};

class NeighborOracle {
 public:
  virtual ~NeighborOracle() = default;
  virtual Key root() = 0;
  /// All arcs at v in the infinite digraph, in a deterministic order.
  virtual void incident(Key v, std::vector<Arc>& arcs) = 0;
  virtual std::string label(Key v) = 0;
};

struct ExtractedBall {
  BallDigraph ball;
  /// Oracle key of each ball vertex.
  std::vector<Key> keys;
};

/// BFS to `radius`; the result is the induced subdigraph on all vertices at
/// distance <= radius, boundary = the vertices at distance exactly radius.
ExtractedBall extract_ball(NeighborOracle& oracle, std::size_t radius);

/// Tree in which every vertex of type t has out_degree[t] out-neighbours of
/// type out_child[t] and in_degree[t] in-neighbours of type in_child[t]
/// (counting the parent).
class TreeOracle : public NeighborOracle {
 public:
  struct Type {
    std::size_t out_degree = 0;
    std::size_t in_degree = 0;
    std::size_t out_child = 0;
    std::size_t in_child = 0;
  };

  TreeOracle(std::vector<Type> types, std::size_t root_type);

  Key root() override { return 0; }
  void incident(Key v, std::vector<Arc>& arcs) override;
  std::string label(Key v) override { return nodes_[v].address; }

 private:
  struct Node {
    std::size_t type = 0;
    std::int64_t parent = -1;
    bool parent_is_head = false;  // edge v -> parent
    bool expanded = false;
    std::vector<Key> out_children;
    std::vector<Key> in_children;
    std::string address;
  };
  void expand(Key v);

  std::vector<Type> types_;
  std::vector<Node> nodes_;
};

/// Tree-like amalgam of copies of a finite digraph `block` in which every
/// vertex lies in exactly `lambda` copies, at slot 0 in all but one of them.
class BlockTreeOracle : public NeighborOracle {
 public:
  BlockTreeOracle(Digraph block, std::size_t lambda);

  Key root() override { return 0; }
  void incident(Key v, std::vector<Arc>& arcs) override;
  std::string label(Key v) override { return vertices_[v].address; }

 private:
  struct Membership {
    std::size_t copy = 0;
    Vertex slot = 0;
  };
  struct Node {
    std::vector<Membership> copies;
    bool expanded = false;
    std::string address;
  };
  std::size_t new_copy(Key v);
  void expand(Key v);

  Digraph block_;
  std::size_t lambda_;
  std::vector<Node> vertices_;
  std::vector<std::vector<Key>> copies_;
};

/// DL(delta): every vertex is a source in one copy of delta and a sink in
/// another.
class DLOracle : public NeighborOracle {
 public:
  explicit DLOracle(Digraph delta);

  Key root() override { return 0; }
  void incident(Key v, std::vector<Arc>& arcs) override;
  std::string label(Key v) override { return vertices_[v].address; }

 private:
  struct Node {
    std::int64_t copy_a = -1;
    Vertex slot_a = 0;
    std::int64_t copy_b = -1;
    Vertex slot_b = 0;
    std::string address;
  };
  void new_copy(Key v, bool as_source);

  Digraph delta_;
  Vertex first_source_ = 0;
  Vertex first_sink_ = 0;
  std::vector<Node> vertices_;
  std::vector<std::vector<Key>> copies_;
};

/// M(kappa, m) and M'(2m): vertices are the subdivision vertices of a lazily
/// grown scaffold tree with sides U (cyclically ordered) and W.
class ScaffoldOracle : public NeighborOracle {
 public:
  enum class Variant { M, Mprime };

  ScaffoldOracle(Variant variant, std::size_t kappa, std::size_t m, OrderChoice order);

  Key root() override { return 1; }
  void incident(Key v, std::vector<Arc>& arcs) override;
  std::string label(Key v) override;

  /// Fills the per-vertex trace for the given ball vertex keys.
  ConstructionTrace trace(const std::vector<Key>& keys);

 private:
  struct Node {
    bool in_u = false;
    std::int64_t parent = -1;
    std::size_t slot_in_parent = 0;
    std::size_t parent_slot = 0;
    bool expanded = false;
    std::vector<Key> neighbors;
    std::string address;
  };

  std::size_t degree(const Node& node) const { return node.in_u ? u_degree_ : w_degree_; }
  void expand(Key node);
  Key sub(Key a, Key b);
  Key u_of(Key y) const;
  Key w_of(Key y) const;
  std::size_t position(Key y) const;
  Key sigma(Key y);
  Key pred(Key y);
  void edges_at(Key w, std::vector<std::pair<Key, Key>>& edges);

  Variant variant_;
  std::size_t u_degree_;
  std::size_t w_degree_;
  OrderChoice order_;
  std::uint64_t shuffle_state_ = 0;
  std::vector<Node> nodes_;
};

}  // namespace chd::detail
