#include "gbs/graph.hpp"

#include "gbs/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace gbs {

namespace {

using nlohmann::json;

bool is_identifier(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::Validation, message);
}

Integer read_label(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    Integer label;
    if (value.is_number_unsigned()) {
      label = Integer(std::to_string(value.get<std::uint64_t>()), 10);
    } else {
      label = Integer(std::to_string(value.get<std::int64_t>()), 10);
    }
    if (!fits_json_number(label)) {
      invalid(where + ": labels beyond 2^53-1 in magnitude must be decimal strings");
    }
    if (label == 0) invalid(where + ": label must be nonzero");
    return label;
  }
  if (value.is_string()) {
    auto parsed = parse_integer(value.get<std::string>());
    if (!parsed) invalid(where + ": not a decimal integer");
    if (*parsed == 0) invalid(where + ": label must be nonzero");
    return *parsed;
  }
  invalid(where + ": label must be an integer or a decimal string");
}

nlohmann::ordered_json write_label(const Integer& label) {
  if (fits_json_number(label)) return nlohmann::ordered_json(to_int64(label));
  return nlohmann::ordered_json(to_string(label));
}

}  // namespace

GbsGraph::GbsGraph(std::vector<std::string> vertices, std::vector<EdgeRecord> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) invalid("vertices: at least one vertex is required");
  std::set<std::string_view> seen;
  for (const auto& v : vertices_) {
    if (!is_identifier(v)) invalid("vertices: invalid vertex id '" + v + "'");
    if (!seen.insert(v).second) invalid("vertices: duplicate vertex id '" + v + "'");
  }
  seen.clear();
  for (const auto& e : edges_) {
    if (!is_identifier(e.id)) invalid("edges: invalid edge id '" + e.id + "'");
    if (!seen.insert(e.id).second) invalid("edges: duplicate edge id '" + e.id + "'");
    if (e.from >= vertices_.size() || e.to >= vertices_.size()) {
      invalid("edges." + e.id + ": endpoint out of range");
    }
    if (e.label_from == 0) invalid("edges." + e.id + ".label_from: label must be nonzero");
    if (e.label_to == 0) invalid("edges." + e.id + ".label_to: label must be nonzero");
  }

  std::vector<std::size_t> component(vertices_.size());
  std::iota(component.begin(), component.end(), 0);
  auto find = [&](std::size_t v) {
    while (component[v] != v) v = component[v] = component[component[v]];
    return v;
  };
  std::size_t parts = vertices_.size();
  for (const auto& e : edges_) {
    auto a = find(e.from), b = find(e.to);
    if (a != b) {
      component[a] = b;
      --parts;
    }
  }
  if (parts != 1) invalid("graph is disconnected");
}

std::optional<VertexIndex> GbsGraph::find_vertex(std::string_view id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

std::optional<EdgeIndex> GbsGraph::find_edge(std::string_view id) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const EdgeRecord& e) { return e.id == id; });
  if (it == edges_.end()) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

VertexIndex GbsGraph::source(Step s) const {
  const auto& e = edges_.at(s.edge);
  return s.dir == Direction::Forward ? e.from : e.to;
}

VertexIndex GbsGraph::target(Step s) const {
  const auto& e = edges_.at(s.edge);
  return s.dir == Direction::Forward ? e.to : e.from;
}

const Integer& GbsGraph::entering_label(Step s) const {
  const auto& e = edges_.at(s.edge);
  return s.dir == Direction::Forward ? e.label_from : e.label_to;
}

const Integer& GbsGraph::exiting_label(Step s) const {
  const auto& e = edges_.at(s.edge);
  return s.dir == Direction::Forward ? e.label_to : e.label_from;
}

GbsGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw Error(ErrorKind::Syntax, "syntax error at byte " + std::to_string(ex.byte) + ": " + ex.what());
  }
  if (!doc.is_object()) invalid("document: top level must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "vertices" && key != "edges") invalid("document: unknown key '" + key + "'");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    invalid("vertices: missing or not an array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) invalid("edges: missing or not an array");

  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) invalid("vertices: ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  auto lookup = [&](const json& value, const std::string& where) -> VertexIndex {
    if (!value.is_string()) invalid(where + ": must be a vertex id string");
    auto name = value.get<std::string>();
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) invalid(where + ": unknown vertex '" + name + "'");
    return static_cast<VertexIndex>(it - vertices.begin());
  };

  std::vector<EdgeRecord> edges;
  std::size_t position = 0;
  for (const auto& e : doc["edges"]) {
    std::string where = "edges[" + std::to_string(position++) + "]";
    if (!e.is_object()) invalid(where + ": must be an object");
    for (const auto& [key, _] : e.items()) {
      if (key != "id" && key != "from" && key != "to" && key != "label_from" && key != "label_to") {
        invalid(where + ": unknown key '" + key + "'");
      }
    }
    for (const char* key : {"id", "from", "to", "label_from", "label_to"}) {
      if (!e.contains(key)) invalid(where + ": missing field '" + key + "'");
    }
    if (!e["id"].is_string()) invalid(where + ".id: must be a string");
    EdgeRecord record;
    record.id = e["id"].get<std::string>();
    record.from = lookup(e["from"], where + ".from");
    record.to = lookup(e["to"], where + ".to");
    record.label_from = read_label(e["label_from"], where + ".label_from");
    record.label_to = read_label(e["label_to"], where + ".label_to");
    edges.push_back(std::move(record));
  }
  return GbsGraph(std::move(vertices), std::move(edges));
}

std::string serialize_graph(const GbsGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertices();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    nlohmann::ordered_json rec;
    rec["id"] = e.id;
    rec["from"] = g.vertices()[e.from];
    rec["to"] = g.vertices()[e.to];
    rec["label_from"] = write_label(e.label_from);
    rec["label_to"] = write_label(e.label_to);
    doc["edges"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

namespace {

TreeData breadth_first_tree(const GbsGraph& g, VertexIndex root, const std::vector<EdgeIndex>& order) {
  const auto n = g.vertices().size();
  const auto m = g.edges().size();
  std::vector<std::vector<EdgeIndex>> incident(n);
  for (EdgeIndex e : order) {
    const auto& rec = g.edge(e);
    incident[rec.from].push_back(e);
    if (rec.to != rec.from) incident[rec.to].push_back(e);
  }

  TreeData t;
  t.root = root;
  t.in_tree.assign(m, false);
  t.parent.assign(n, std::nullopt);
  t.depth.assign(n, 0);
  std::vector<bool> reached(n, false);
  reached[root] = true;
  std::deque<VertexIndex> queue{root};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (EdgeIndex e : incident[v]) {
      const auto& rec = g.edge(e);
      Step step{e, rec.from == v ? Direction::Forward : Direction::Backward};
      auto w = g.target(step);
      if (reached[w]) continue;
      reached[w] = true;
      t.in_tree[e] = true;
      t.tree_edges.push_back(e);
      t.parent[w] = ParentLink{v, e, step.dir};
      t.depth[w] = t.depth[v] + 1;
      queue.push_back(w);
    }
  }
  for (EdgeIndex e = 0; e < m; ++e) {
    if (!t.in_tree[e]) t.non_tree_edges.push_back(e);
  }
  return t;
}

}  // namespace

TreeData spanning_tree(const GbsGraph& g) {
  const auto& names = g.vertices();
  auto root = static_cast<VertexIndex>(std::min_element(names.begin(), names.end()) - names.begin());
  std::vector<EdgeIndex> order(g.edges().size());
  std::iota(order.begin(), order.end(), 0);
  return breadth_first_tree(g, root, order);
}

TreeData random_spanning_tree(const GbsGraph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.vertices().size() - 1);
  auto root = pick(rng);
  std::vector<EdgeIndex> order(g.edges().size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return breadth_first_tree(g, root, order);
}

std::size_t betti(const GbsGraph& g) { return g.edges().size() + 1 - g.vertices().size(); }

std::vector<Step> tree_path(const GbsGraph& g, const TreeData& t, VertexIndex from, VertexIndex to) {
  (void)g;
  std::vector<Step> up;    // from -> lca
  std::vector<Step> down;  // lca -> to, collected in reverse
  while (from != to) {
    if (t.depth[from] >= t.depth[to]) {
      const auto& link = *t.parent[from];
      up.push_back(Step{link.edge, opposite(link.dir)});
      from = link.parent;
    } else {
      const auto& link = *t.parent[to];
      down.push_back(Step{link.edge, link.dir});
      to = link.parent;
    }
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<Cycle> fundamental_cycles(const GbsGraph& g, const TreeData& t) {
  std::vector<Cycle> cycles;
  for (EdgeIndex e : t.non_tree_edges) {
    const auto& rec = g.edge(e);
    auto a = rec.from, b = rec.to;
    while (a != b) {
      if (t.depth[a] >= t.depth[b]) {
        a = t.parent[a]->parent;
      } else {
        b = t.parent[b]->parent;
      }
    }
    Cycle c;
    c.non_tree_edge = e;
    c.base_vertex = a;
    c.oriented_edges = tree_path(g, t, a, rec.from);
    c.oriented_edges.push_back(Step{e, Direction::Forward});
    auto back = tree_path(g, t, rec.to, a);
    c.oriented_edges.insert(c.oriented_edges.end(), back.begin(), back.end());
    cycles.push_back(std::move(c));
  }
  return cycles;
}

LoopLabels loop_labels(const GbsGraph& g, const std::vector<Step>& walk) {
  LoopLabels out{Integer(1), Integer(1)};
  for (const auto& s : walk) {
    out.entering *= g.entering_label(s);
    out.exiting *= g.exiting_label(s);
  }
  return out;
}

std::optional<Integer> transport(const GbsGraph& g, const std::vector<Step>& walk, const Integer& exponent) {
  Integer current = exponent;
  for (const auto& s : walk) {
    auto q = divide_exact(current, g.entering_label(s));
    if (!q) return std::nullopt;
    current = *q * g.exiting_label(s);
  }
  return current;
}

Integer min_transport_power(const GbsGraph& g, const std::vector<Step>& walk) {
  // Before step j the power is P * prod_{i<j} exiting_i / entering_i, and it
  // must be a multiple of entering_j.
  Rational scale = 1;
  Integer power = 1;
  for (const auto& s : walk) {
    Rational need = scale / Rational(g.entering_label(s));
    need.canonicalize();
    power = lcm(power, need.get_den());
    scale *= Rational(g.exiting_label(s)) / Rational(g.entering_label(s));
    scale.canonicalize();
  }
  return power;
}

std::vector<Step> rotate_walk(const GbsGraph& g, const std::vector<Step>& walk, VertexIndex vertex) {
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (g.source(walk[i]) == vertex) {
      std::vector<Step> out(walk.begin() + static_cast<std::ptrdiff_t>(i), walk.end());
      out.insert(out.end(), walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(i));
      return out;
    }
  }
  invalid("rotate_walk: vertex not on walk");
}

GbsGraph baumslag_solitar(const Integer& m, const Integer& n) {
  return GbsGraph({"v"}, {EdgeRecord{"e1", 0, 0, m, n}});
}

std::vector<Step> reverse_walk(const std::vector<Step>& walk) {
  std::vector<Step> out;
  out.reserve(walk.size());
  for (auto it = walk.rbegin(); it != walk.rend(); ++it) out.push_back(Step{it->edge, opposite(it->dir)});
  return out;
}

}  // namespace gbs
