#include <algorithm>

#include "chd/families.hpp"
#include "oracle.hpp"

namespace chd {

namespace {

Digraph complete_bipartite(std::size_t kappa, std::size_t lambda, bool drop_matching) {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < kappa; ++i) labels.push_back("a" + std::to_string(i));
  for (std::size_t j = 0; j < lambda; ++j) labels.push_back("b" + std::to_string(j));
  for (std::size_t i = 0; i < kappa; ++i) {
    for (std::size_t j = 0; j < lambda; ++j) {
      if (drop_matching && i == j) continue;
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(kappa + j)});
    }
  }
  return Digraph::from_edge_list(kappa + lambda, edges, std::move(labels));
}

Digraph alternating_cycle(std::size_t m) {
  const std::size_t n = 2 * m;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < n; i += 2) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + n - 1) % n)});
  }
  return Digraph::from_edge_list(n, edges, std::move(labels));
}

BallDigraph tree_ball(std::size_t out_degree, std::size_t in_degree, std::size_t radius) {
  detail::TreeOracle oracle({{out_degree, in_degree, 0, 0}}, 0);
  return detail::extract_ball(oracle, radius).ball;
}

BallDigraph semiregular_tree_ball(std::size_t kappa, std::size_t lambda, std::size_t radius) {
  // Type 0 = A (kappa out-neighbours in B), type 1 = B (lambda in-neighbours in A).
  detail::TreeOracle oracle({{kappa, 0, 1, 1}, {0, lambda, 0, 0}}, 0);
  return detail::extract_ball(oracle, radius).ball;
}

BallDigraph block_tree_ball(Digraph block, std::size_t lambda, std::size_t radius) {
  detail::BlockTreeOracle oracle(std::move(block), lambda);
  return detail::extract_ball(oracle, radius).ball;
}

std::string tournament_note(TournamentKind kind) {
  switch (kind) {
    case TournamentKind::linear:
      return "finite slice of the rational order";
    case TournamentKind::circular_P:
      return "finite slice of the circular tournament";
    case TournamentKind::paley_generic:
      return "paley stand-in for the generic tournament";
    default:
      return {};
  }
}

}  // namespace

BallDigraph build_tournament(TournamentKind kind, std::size_t n) {
  FamilySpec spec;
  spec.kind = FamilyKind::tournament;
  spec.tournament_kind = kind;
  spec.n = n;
  spec.validate();
  if (kind == TournamentKind::trivial) n = 1;
  if (kind == TournamentKind::triangle) n = 3;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool arc = false;
      switch (kind) {
        case TournamentKind::trivial:
          break;
        case TournamentKind::triangle:
          arc = j == (i + 1) % 3;
          break;
        case TournamentKind::linear:
          arc = i < j;
          break;
        case TournamentKind::circular_P:
          arc = (i + n - j) % n <= (n - 1) / 2;
          break;
        case TournamentKind::paley_generic: {
          const std::size_t diff = (j + n - i) % n;
          for (std::size_t x = 1; x < n && !arc; ++x) arc = (x * x) % n == diff;
          break;
        }
      }
      if (arc) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  BallDigraph ball = exact_ball(Digraph::from_edge_list(n, edges));
  ball.family = to_string(spec);
  if (auto note = tournament_note(kind); !note.empty()) ball.notes.push_back(note);
  return ball;
}

BallDigraph build_DL(const FamilySpec& delta, std::size_t radius) {
  FamilySpec spec;
  spec.kind = FamilyKind::DL;
  spec.inner = std::make_shared<const FamilySpec>(delta);
  spec.radius = radius;
  spec.validate();
  BallDigraph ball;
  if (delta.kind == FamilyKind::T) {
    ball = tree_ball(delta.kappa, delta.lambda, radius);
    ball.notes.push_back("underlying graph is a tree; not Type II");
  } else {
    detail::DLOracle oracle(generate_catalog(delta).digraph);
    ball = detail::extract_ball(oracle, radius).ball;
  }
  ball.family = to_string(spec);
  return ball;
}

ConstructedBall build_M(std::size_t kappa, std::size_t m, std::size_t radius, OrderChoice order) {
  FamilySpec spec;
  spec.kind = FamilyKind::M;
  spec.kappa = kappa;
  spec.m = m;
  spec.radius = radius;
  spec.validate();
  detail::ScaffoldOracle oracle(detail::ScaffoldOracle::Variant::M, kappa, m, order);
  auto extracted = detail::extract_ball(oracle, radius);
  ConstructedBall out{std::move(extracted.ball), oracle.trace(extracted.keys)};
  out.ball.family = to_string(spec);
  return out;
}

ConstructedBall build_M_prime(std::size_t m, std::size_t radius, OrderChoice order) {
  FamilySpec spec;
  spec.kind = FamilyKind::Mprime;
  spec.m = m;
  spec.radius = radius;
  spec.validate();
  detail::ScaffoldOracle oracle(detail::ScaffoldOracle::Variant::Mprime, 2, m, order);
  auto extracted = detail::extract_ball(oracle, radius);
  ConstructedBall out{std::move(extracted.ball), oracle.trace(extracted.keys)};
  out.ball.family = to_string(spec);
  return out;
}

BallDigraph build_line_of(const BallDigraph& host) {
  const Digraph& d = host.digraph;
  const auto& edges = d.edges();
  if (edges.empty()) throw Error("line digraph of an edgeless digraph has no vertices");
  auto first_out = std::lower_bound(edges.begin(), edges.end(), Edge{host.root, 0});
  std::size_t e0 = 0;
  if (first_out != edges.end() && first_out->tail == host.root) {
    e0 = static_cast<std::size_t>(first_out - edges.begin());
  } else {
    auto first_in = std::find_if(edges.begin(), edges.end(),
                                 [&](const Edge& e) { return e.head == host.root; });
    if (first_in == edges.end()) throw Error("root of the host is isolated");
    e0 = static_cast<std::size_t>(first_in - edges.begin());
  }

  BallDigraph line;
  line.digraph = line_digraph(d);
  line.root = static_cast<Vertex>(e0);
  line.family = host.family.empty() ? std::string() : "line_of(" + host.family + ")";
  line.notes = host.notes;
  if (host.exact()) {
    BallDigraph exact = exact_ball(std::move(line.digraph), line.root);
    exact.family = line.family;
    exact.notes = line.notes;
    return exact;
  }
  if (host.radius < 3) throw Error("host radius must be at least 3");
  auto open = host.boundary_mask();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (open[edges[i].tail] || open[edges[i].head]) line.boundary.push_back(static_cast<Vertex>(i));
  }
  line.radius = host.radius;
  return sub_ball(line, line.root, host.radius - 2);
}

BallDigraph generate_catalog(const FamilySpec& spec) {
  spec.validate();
  BallDigraph ball;
  switch (spec.kind) {
    case FamilyKind::T:
      ball = semiregular_tree_ball(spec.kappa, spec.lambda, spec.radius);
      break;
    case FamilyKind::K:
      ball = exact_ball(complete_bipartite(spec.kappa, spec.lambda, false));
      break;
    case FamilyKind::CP:
      ball = exact_ball(complete_bipartite(spec.kappa, spec.kappa, true));
      break;
    case FamilyKind::C:
      ball = exact_ball(alternating_cycle(spec.m));
      break;
    case FamilyKind::X_undirected:
      ball = block_tree_ball(build_tournament(TournamentKind::linear, spec.kappa).digraph,
                             spec.lambda, spec.radius);
      ball.notes.push_back("blocks oriented as transitive tournaments");
      break;
    case FamilyKind::X_lambda_T: {
      const FamilySpec& t = *spec.inner;
      if (t.tournament_kind == TournamentKind::trivial) {
        ball = tree_ball((spec.lambda + 1) / 2, spec.lambda / 2, spec.radius);
        ball.notes.push_back("degenerate: lambda-regular directed tree");
      } else {
        BallDigraph block = build_tournament(t.tournament_kind, t.n);
        ball = block_tree_ball(block.digraph, spec.lambda, spec.radius);
        ball.notes = block.notes;
      }
      break;
    }
    case FamilyKind::DL:
      return build_DL(*spec.inner, spec.radius);
    case FamilyKind::M:
      return build_M(spec.kappa, spec.m, spec.radius).ball;
    case FamilyKind::Mprime:
      return build_M_prime(spec.m, spec.radius).ball;
    case FamilyKind::tournament:
      return build_tournament(spec.tournament_kind, spec.n);
    case FamilyKind::generic_bipartite:
      ball = exact_ball(build_generic_bipartite(spec.n, spec.t, spec.seed));
      break;
    case FamilyKind::line_of:
      ball = build_line_of(generate_catalog(*spec.inner));
      break;
  }
  ball.family = to_string(spec);
  return ball;
}

}  // namespace chd
