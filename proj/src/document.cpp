#include "chd/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace chd {

namespace {

using nlohmann::json;

json vertex_list(const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<Vertex> checked_vertices(const json& value, const char* key, std::size_t order) {
  std::vector<Vertex> vs;
  try {
    vs = value.get<std::vector<Vertex>>();
  } catch (const json::exception&) {
    throw Error(std::string("field '") + key + "' is not a vertex list");
  }
  for (Vertex v : vs) {
    if (v >= order) throw Error(std::string("field '") + key + "' names unknown vertex " + std::to_string(v));
  }
  return vs;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const BallDigraph& ball) {
  const Digraph& d = ball.digraph;
  json j;
  j["format"] = "chd-digraph";
  j["version"] = kDocumentVersion;
  j["vertices"]["count"] = d.order();
  if (d.has_labels()) j["vertices"]["labels"] = d.labels();
  json edges = json::array();
  for (const Edge& e : d.edges()) edges.push_back({e.tail, e.head});
  j["edges"] = std::move(edges);
  if (!ball.exact()) {
    json b;
    b["root"] = ball.root;
    b["radius"] = ball.radius;
    b["boundary"] = vertex_list(ball.boundary);
    json proxies = json::array();
    for (const auto& p : ball.end_proxies) proxies.push_back(vertex_list(p));
    b["end_proxies"] = std::move(proxies);
    j["ball"] = std::move(b);
  }
  if (!ball.family.empty()) j["family"] = ball.family;
  if (!ball.notes.empty()) j["notes"] = ball.notes;
  return j.dump() + "\n";
}

std::string to_json(const Digraph& d) { return to_json(exact_ball(d)); }

DigraphDocument from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("document is not a JSON object");
  if (field<std::string>(j, "format") != "chd-digraph") throw Error("unknown document format");
  if (field<int>(j, "version") != kDocumentVersion) throw Error("unsupported document version");
  if (!j.contains("vertices") || !j["vertices"].is_object()) throw Error("missing field 'vertices'");
  const auto count = field<std::size_t>(j["vertices"], "count");
  std::vector<std::string> labels;
  if (j["vertices"].contains("labels")) {
    labels = field<std::vector<std::string>>(j["vertices"], "labels");
    if (labels.size() != count) throw Error("label count does not match vertex count");
  }
  auto pairs = field<std::vector<std::vector<Vertex>>>(j, "edges");
  std::vector<Edge> edges;
  for (const auto& p : pairs) {
    if (p.size() != 2) throw Error("edge entries must be pairs");
    edges.push_back({p[0], p[1]});
  }
  DigraphDocument doc;
  Digraph d = Digraph::from_edge_list(count, edges, std::move(labels));
  if (j.contains("ball")) {
    const json& b = j["ball"];
    doc.has_ball_block = true;
    doc.ball.digraph = std::move(d);
    doc.ball.root = field<Vertex>(b, "root");
    if (doc.ball.root >= count) throw Error("root is not a vertex");
    doc.ball.radius = field<std::size_t>(b, "radius");
    if (!b.contains("boundary")) throw Error("missing field 'boundary'");
    doc.ball.boundary = checked_vertices(b["boundary"], "boundary", count);
    if (!b.contains("end_proxies") || !b["end_proxies"].is_array()) throw Error("missing field 'end_proxies'");
    for (const auto& p : b["end_proxies"]) doc.ball.end_proxies.push_back(checked_vertices(p, "end_proxies", count));
  } else {
    doc.ball = exact_ball(std::move(d));
  }
  if (j.contains("family")) doc.ball.family = field<std::string>(j, "family");
  if (j.contains("notes")) doc.ball.notes = field<std::vector<std::string>>(j, "notes");
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

DigraphDocument load_document(const std::string& path) { return from_json(read_file(path)); }

std::string to_dot(const BallDigraph& ball) {
  const Digraph& d = ball.digraph;
  auto boundary = ball.boundary_mask();
  std::ostringstream out;
  out << "digraph chd {\n";
  for (Vertex v = 0; v < d.order(); ++v) {
    out << "  n" << v << " [label=" << quoted(d.name(v));
    if (boundary[v]) out << ",style=dashed";
    if (v == ball.root && !ball.exact()) out << ",peripheries=2";
    out << "];\n";
  }
  for (const Edge& e : d.edges()) out << "  n" << e.tail << " -> n" << e.head << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& d) { return to_dot(exact_ball(d)); }

}  // namespace chd
