#pragma once

// Canonical JSON documents for digraphs and balls, and DOT rendering.

#include <optional>
#include <string>

#include "chd/core.hpp"
#include "chd/families.hpp"

namespace chd {

inline constexpr int kDocumentVersion = 1;

/// A loaded document. `ball` is always filled; finite digraphs without a
/// ball block become exact balls rooted at vertex 0.
struct DigraphDocument {
  BallDigraph ball;
  bool has_ball_block = false;
};

/// Canonical JSON: keys sorted, vertices ascending, edges lexicographic, one
/// line. The ball block is written for non-exact balls only.
std::string to_json(const BallDigraph& ball);
std::string to_json(const Digraph& d);

/// Throws chd::Error on malformed input.
DigraphDocument from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
DigraphDocument load_document(const std::string& path);

/// Directed edges; boundary vertices dashed, the root doubled.
std::string to_dot(const BallDigraph& ball);
std::string to_dot(const Digraph& d);

}  // namespace chd
