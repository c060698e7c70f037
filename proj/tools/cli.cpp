#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "chd/classify.hpp"
#include "chd/core.hpp"
#include "chd/cuts.hpp"
#include "chd/document.hpp"
#include "chd/families.hpp"
#include "chd/isomorphism.hpp"
#include "chd/reachability.hpp"
#include "chd/symmetry.hpp"
#include "criteria.hpp"

namespace chd::cli {

namespace {

/// Usage errors detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string names(const Digraph& d, const std::vector<Vertex>& vs, const char* open = "[",
                  const char* close = "]") {
  std::string s = open;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) s += ",";
    s += d.name(vs[i]);
  }
  return s + close;
}

Vertex vertex_by_name(const Digraph& d, const std::string& token) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.name(v) == token) return v;
  }
  if (!token.empty() && std::all_of(token.begin(), token.end(), ::isdigit)) {
    unsigned long v = std::stoul(token);
    if (v < d.order()) return static_cast<Vertex>(v);
  }
  throw Error("unknown vertex '" + token + "'");
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string spec;
  std::string output;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  FamilySpec spec = parse_family_spec(a.spec);
  BallDigraph ball;
  if (a.seed) {
    switch (spec.kind) {
      case FamilyKind::generic_bipartite:
        if (spec.seed != 0 && spec.seed != *a.seed) throw UsageError("--seed contradicts the seed in the family spec");
        spec.seed = *a.seed;
        ball = generate_catalog(spec);
        break;
      case FamilyKind::M:
        spec.validate();
        ball = build_M(spec.kappa, spec.m, spec.radius, OrderChoice{*a.seed}).ball;
        break;
      case FamilyKind::Mprime:
        spec.validate();
        ball = build_M_prime(spec.m, spec.radius, OrderChoice{*a.seed}).ball;
        break;
      default:
        throw UsageError("--seed applies to generic_bipartite, M and Mprime only");
    }
  } else {
    ball = generate_catalog(spec);
  }
  std::string text = a.format == "dot" ? to_dot(ball) : to_json(ball);
  if (a.output.empty()) {
    out << text;
  } else {
    write_file(a.output, text);
    out << "wrote " << ball.digraph.order() << " vertices, " << ball.digraph.size() << " edges to "
        << a.output << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string file;
  std::string prop;
  std::optional<std::size_t> max_size;
  std::optional<std::size_t> k;
  std::optional<std::size_t> margin;
};

void print_verdict(const Digraph& d, const SymmetryVerdict& v, std::ostream& out) {
  out << to_string(v.property);
  if (v.property == Property::k_arc_transitive) out << " k=" << v.k;
  out << ": " << to_string(v.result) << " (" << v.bounds.subsets << " subsets, " << v.bounds.extension_checks
      << " extension checks)\n";
  if (v.witness) {
    out << "  witness: " << names(d, v.witness->first) << " -> " << names(d, v.witness->second) << " "
        << v.witness->reason << "\n";
  }
  if (!v.note.empty()) out << "  note: " << v.note << "\n";
}

int run_check(const CheckArgs& a, std::ostream& out) {
  BallDigraph ball = load_document(a.file).ball;
  const Digraph& d = ball.digraph;
  const bool sized = a.prop == "c-homog" || a.prop == "homog";
  if (a.max_size && !sized) throw UsageError("--max-size applies to c-homog and homog only");
  if (a.k && a.prop != "arc-trans") throw UsageError("--k applies to arc-trans only");
  if (a.margin && (a.prop == "homog" || a.prop == "triangle-free")) {
    throw UsageError("--margin does not apply to " + a.prop);
  }
  if (a.margin && ball.exact()) throw UsageError("--margin needs a ball with a boundary");

  if (a.prop == "triangle-free") {
    Graph g = underlying_graph(d);
    for (auto [x, y] : g.edges()) {
      for (Vertex z : g.neighbors(x)) {
        if (z > y && g.adjacent(y, z)) {
          out << "triangle-free: fail\n  witness: " << names(d, {x, y, z}, "{", "}") << "\n";
          return kExitPropertyFail;
        }
      }
    }
    out << "triangle-free: pass\n";
    return kExitOk;
  }
  if (a.prop == "homog" || a.prop == "c-homog") {
    const std::size_t max_size = a.max_size.value_or(4);
    SymmetryVerdict v;
    if (a.prop == "homog") {
      if (!ball.exact()) throw UsageError("homog needs a finite digraph; use c-homog on balls");
      v = check_homogeneity(d, HomogeneityMode::homogeneous, max_size);
    } else if (ball.exact()) {
      v = check_homogeneity(d, HomogeneityMode::c_homogeneous, max_size);
    } else {
      v = check_local_c_homogeneity(ball, max_size, a.margin.value_or(2));
    }
    print_verdict(d, v, out);
    return v.passed() ? kExitOk : kExitPropertyFail;
  }
  if (a.prop == "arc-trans") {
    const std::size_t k = a.k.value_or(2);
    auto verdicts = ball.exact() ? check_arc_transitivity(d, k)
                                 : check_arc_transitivity(ball, k, a.margin.value_or(2));
    bool ok = true;
    for (const auto& v : verdicts) {
      print_verdict(d, v, out);
      ok = ok && v.passed();
    }
    return ok ? kExitOk : kExitPropertyFail;
  }
  throw UsageError("unknown property '" + a.prop + "'");
}

// ---------------------------------------------------------------------------

int run_iso(const std::string& f1, const std::string& f2, bool respect_boundary, std::ostream& out) {
  BallDigraph a = load_document(f1).ball;
  BallDigraph b = load_document(f2).ball;
  IsoOptions options;
  if (respect_boundary) {
    auto ma = a.boundary_mask();
    auto mb = b.boundary_mask();
    options.classes_first.assign(ma.begin(), ma.end());
    options.classes_second.assign(mb.begin(), mb.end());
  }
  auto f = find_isomorphism(a.digraph, b.digraph, options);
  if (!f) {
    out << "not isomorphic\n";
    return kExitPropertyFail;
  }
  out << "isomorphic\n";
  for (auto [x, y] : f->pairs()) out << "  " << a.digraph.name(x) << " -> " << b.digraph.name(y) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

void print_class(const Digraph& d, const ReachClass& c, std::ostream& out) {
  const Digraph& delta = c.delta.digraph;
  out << "class of " << d.name(c.representative.tail) << ">" << d.name(c.representative.head) << ": "
      << c.edges.size() << " edges on " << delta.order() << " vertices";
  if (c.universal) out << ", universal";
  if (!c.caveat.empty()) out << " (" << c.caveat << ")";
  out << "\n  vertices: " << names(d, c.delta.to_host, "{", "}") << "\n";
  Graph g = underlying_graph(delta);
  if (is_connected(g) && two_coloring(g)) {
    std::vector<Vertex> sources;
    for (Vertex v = 0; v < delta.order(); ++v) {
      if (delta.out_degree(v) > 0) sources.push_back(v);
    }
    bool oriented = true;
    for (Vertex v = 0; v < delta.order(); ++v) {
      if (delta.out_degree(v) > 0 && delta.in_degree(v) > 0) oriented = false;
    }
    auto hint = oriented ? std::optional<std::vector<Vertex>>(sources) : std::nullopt;
    CatalogLabel label = classify_reachability_graph(g, hint);
    out << "  Delta: " << to_string(label) << "\n";
    for (const auto& alias : label.aliases) out << "  alias " << to_string(alias) << "\n";
  } else {
    out << "  Delta: not bipartite\n";
  }
}

int run_reach(const std::string& file, const std::string& edge, std::ostream& out) {
  BallDigraph ball = load_document(file).ball;
  const Digraph& d = ball.digraph;
  if (!edge.empty()) {
    auto comma = edge.find(',');
    if (comma == std::string::npos) throw UsageError("--edge expects u,v");
    Edge e{vertex_by_name(d, edge.substr(0, comma)), vertex_by_name(d, edge.substr(comma + 1))};
    print_class(d, reachability_class(d, e), out);
    return kExitOk;
  }
  if (d.size() == 0) throw Error("digraph has no edges");
  auto partition = reachability_partition(d);
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t id : partition) ++sizes[id];
  std::map<std::size_t, std::size_t> census;
  for (auto [id, size] : sizes) ++census[size];
  out << sizes.size() << " classes;";
  for (auto [size, count] : census) out << " " << count << " of size " << size << ";";
  out << "\n";
  if (ball.exact()) {
    print_class(d, reachability_class(d, d.edges().front()), out);
    return kExitOk;
  }
  auto report = reachability_digraph(ball);
  out << report.interior_class_count << " interior classes, " << report.sampled << " sampled, "
      << (report.all_isomorphic ? "all isomorphic" : "not all isomorphic") << "\n";
  print_class(d, report.representative, out);
  return report.all_isomorphic ? kExitOk : kExitPropertyFail;
}

// ---------------------------------------------------------------------------

std::string flag(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "unverified"; }

int run_cuts(const std::string& file, std::size_t max_order, std::optional<std::size_t> margin, bool dot,
             std::ostream& out) {
  BallDigraph ball = load_document(file).ball;
  const Digraph& d = ball.digraph;
  if (margin && ball.exact()) throw UsageError("--margin needs a ball with a boundary");
  CutSystem system;
  if (ball.exact()) {
    auto host = std::make_shared<const Graph>(underlying_graph(d));
    auto candidates = enumerate_candidate_cuts(host, ball.end_proxies, max_order);
    if (!candidates.flag.empty()) {
      out << "no cuts: " << candidates.flag << "\n";
      return kExitPropertyFail;
    }
    system = make_cut_system(host, candidates.cuts, ball.end_proxies);
  } else {
    system = ball_cut_system(ball, max_order, margin.value_or(2));
  }
  if (system.cuts.empty()) {
    for (const auto& n : system.notes) out << "no cuts: " << n << "\n";
    if (system.notes.empty()) out << "no cuts\n";
    return kExitPropertyFail;
  }
  StructureTree tree;
  bool have_tree = system.nested.value_or(false);
  if (have_tree) tree = build_structure_tree(system);
  if (dot) {
    if (!have_tree) throw Error("cut system is not nested; no structure tree");
    out << to_dot(tree, d.has_labels() ? d.labels() : std::vector<std::string>{});
    return tree.is_tree ? kExitOk : kExitPropertyFail;
  }
  auto separators = system.separators();
  out << system.cuts.size() << " cuts of order " << system.min_order() << ", " << separators.size()
      << " separators\n";
  out << "nested: " << flag(system.nested) << "\nminimal: " << flag(system.minimal)
      << "\ncondition (i): " << flag(system.condition_i) << "\ncondition (ii): " << flag(system.condition_ii)
      << "\ncondition (iii): " << flag(system.condition_iii)
      << "\nautomorphism-invariant: " << flag(system.aut_invariant)
      << "\nseparator-transitive: " << flag(system.separator_transitive)
      << "\nends separated: " << flag(system.ends_separated) << "\n";
  for (const auto& n : system.notes) out << "note: " << n << "\n";
  for (const auto& s : separators) out << "separator " << names(d, s, "{", "}") << "\n";
  if (!have_tree) {
    out << "structure tree: not built (cut system is not nested)\n";
    return kExitPropertyFail;
  }
  for (const auto& b : tree.blocks) out << "block " << names(d, b, "{", "}") << "\n";
  if (tree.is_tree) {
    out << "structure tree: " << tree.tree.order() << " nodes\n";
    return kExitOk;
  }
  out << "structure tree: not a tree (" << tree.diagnostic << ")\n";
  return kExitPropertyFail;
}

// ---------------------------------------------------------------------------

int run_classify(const std::string& file, std::ostream& out) {
  BallDigraph ball = load_document(file).ball;
  CatalogLabel label = classify_digraph(ball);
  out << to_string(label) << "\n";
  for (const auto& n : label.notes) out << "  " << n << "\n";
  for (const auto& alias : label.aliases) out << "  alias " << to_string(alias) << "\n";
  return label.classified() ? kExitOk : kExitPropertyFail;
}

int run_verify(std::ostream& out) {
  bool ok = true;
  acceptance::run_all([&](const acceptance::CriterionResult& r) {
    out << acceptance::format(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? kExitOk : kExitPropertyFail;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected-homogeneous digraph toolkit", "chd"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a family member");
  gen_cmd->add_option("spec", gen.spec, "Family spec, e.g. M(kappa=3,m=2,r=5)")->required();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"json", "dot"}));
  gen_cmd->add_option("--seed", gen.seed, "Seed for randomized generators");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Check a property");
  check_cmd->add_option("file", check.file)->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--prop", check.prop)
      ->required()
      ->check(CLI::IsMember({"triangle-free", "c-homog", "homog", "arc-trans"}));
  check_cmd->add_option("--max-size", check.max_size);
  check_cmd->add_option("--k", check.k);
  check_cmd->add_option("--margin", check.margin);

  std::string iso1, iso2;
  bool respect = false;
  auto* iso_cmd = app.add_subcommand("iso", "Test two digraphs for isomorphism");
  iso_cmd->add_option("file1", iso1)->required()->check(CLI::ExistingFile);
  iso_cmd->add_option("file2", iso2)->required()->check(CLI::ExistingFile);
  iso_cmd->add_flag("--respect-boundary", respect, "Map boundary vertices to boundary vertices");

  std::string reach_file, reach_edge;
  auto* reach_cmd = app.add_subcommand("reach", "Reachability classes");
  reach_cmd->add_option("file", reach_file)->required()->check(CLI::ExistingFile);
  reach_cmd->add_option("--edge", reach_edge, "Edge as u,v (labels or ids)");

  std::string cuts_file;
  std::size_t max_order = 2;
  std::optional<std::size_t> cuts_margin;
  bool cuts_dot = false;
  auto* cuts_cmd = app.add_subcommand("cuts", "Cut system and structure tree");
  cuts_cmd->add_option("file", cuts_file)->required()->check(CLI::ExistingFile);
  cuts_cmd->add_option("--max-order", max_order)->check(CLI::Range(1, 4));
  cuts_cmd->add_option("--margin", cuts_margin);
  cuts_cmd->add_flag("--dot", cuts_dot, "Print the structure tree as DOT");

  std::string classify_file;
  auto* classify_cmd = app.add_subcommand("classify", "Match against the catalog");
  classify_cmd->add_option("file", classify_file)->required()->check(CLI::ExistingFile);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the acceptance suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "chd: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (check_cmd->parsed()) return run_check(check, out);
    if (iso_cmd->parsed()) return run_iso(iso1, iso2, respect, out);
    if (reach_cmd->parsed()) return run_reach(reach_file, reach_edge, out);
    if (cuts_cmd->parsed()) return run_cuts(cuts_file, max_order, cuts_margin, cuts_dot, out);
    if (classify_cmd->parsed()) return run_classify(classify_file, out);
    if (verify_cmd->parsed()) return run_verify(out);
  } catch (const UsageError& e) {
    err << "chd: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "chd: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace chd::cli
