#include "gbs/error.hpp"
#include "gbs/graph.hpp"
#include "gbs/presentation.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gbs;

namespace {

const char* kBs23 = R"({"vertices": ["v"], "edges": [{"id": "e1", "from": "v", "to": "v", "label_from": 2, "label_to": 3}]})";
const char* kTwoCycle = R"({"vertices": ["u", "v"], "edges": [
  {"id": "e1", "from": "u", "to": "v", "label_from": 1, "label_to": 2},
  {"id": "e2", "from": "v", "to": "u", "label_from": 1, "label_to": 3}]})";
const char* kPath = R"({"vertices": ["u", "v", "w"], "edges": [
  {"id": "a", "from": "u", "to": "v", "label_from": 2, "label_to": 3},
  {"id": "b", "from": "v", "to": "w", "label_from": 5, "label_to": 7}]})";

ErrorKind kind_of(const char* text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Syntax;
}

std::string message_of(const char* text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse BS(2,3)") {
  const auto g = parse_graph(kBs23);
  REQUIRE(g.vertices().size() == 1);
  REQUIRE(g.edges().size() == 1);
  CHECK(g.edge(0).label_from == 2);
  CHECK(g.edge(0).label_to == 3);
  CHECK(g == baumslag_solitar(2, 3));
}

TEST_CASE("parse rejects malformed documents") {
  CHECK(message_of(R"({"vertices": ["v"], "edges": [{"id": "e1", "from": "v", "to": "v", "label_from": 0, "label_to": 3}]})")
            .find("label must be nonzero") != std::string::npos);
  CHECK(kind_of(R"({"vertices": ["v"], "edges": [)") == ErrorKind::Syntax);
  CHECK(message_of(R"({"vertices": ["v"], "edges": [)").find("byte") != std::string::npos);
  CHECK(kind_of(R"({"vertices": ["u", "v"], "edges": []})") == ErrorKind::Validation);
  CHECK(kind_of(R"({"vertices": ["v", "v"], "edges": []})") == ErrorKind::Validation);
  CHECK(kind_of(R"({"vertices": [], "edges": []})") == ErrorKind::Validation);
  CHECK(kind_of(R"({"vertices": ["v"], "edges": [], "extra": 1})") == ErrorKind::Validation);
  CHECK(kind_of(R"({"vertices": ["v"], "edges": [{"id": "e1", "from": "v", "to": "w", "label_from": 1, "label_to": 1}]})") ==
        ErrorKind::Validation);
  CHECK(kind_of(R"({"vertices": ["v"], "edges": [{"id": "e1", "from": "v", "to": "v", "label_from": 1.5, "label_to": 1}]})") ==
        ErrorKind::Validation);
  CHECK(kind_of(R"({"vertices": ["v"], "edges": [{"id": "e1", "from": "v", "to": "v", "label_from": 1, "label_to": 1, "x": 0}]})") ==
        ErrorKind::Validation);
  // Numbers past 2^53 - 1 must be written as strings.
  CHECK(kind_of(R"({"vertices": ["v"], "edges": [{"id": "e1", "from": "v", "to": "v", "label_from": 9007199254740993, "label_to": 1}]})") ==
        ErrorKind::Validation);
}

TEST_CASE("two-cycle graph") {
  const auto g = parse_graph(kTwoCycle);
  CHECK(betti(g) == 1);
  const auto t = spanning_tree(g);
  CHECK(t.tree_edges.size() == 1);
  CHECK(t.non_tree_edges == std::vector<EdgeIndex>{1});
  const auto cycles = fundamental_cycles(g, t);
  REQUIRE(cycles.size() == 1);
  // Based at the root u: down e1, then across e2.
  CHECK(cycles[0].base_vertex == 0);
  CHECK(cycles[0].oriented_edges == std::vector<Step>{{0, Direction::Forward}, {1, Direction::Forward}});
}

TEST_CASE("spanning trees") {
  const auto bs = baumslag_solitar(2, 3);
  const auto t = spanning_tree(bs);
  CHECK(t.tree_edges.empty());
  CHECK(t.non_tree_edges.size() == 1);
  CHECK(fundamental_cycles(bs, t)[0].oriented_edges == std::vector<Step>{{0, Direction::Forward}});

  const auto path = parse_graph(kPath);
  const auto tp = spanning_tree(path);
  CHECK(tp.tree_edges.size() == 2);
  CHECK(tp.non_tree_edges.empty());
  CHECK(betti(path) == 0);
  CHECK(fundamental_cycles(path, tp).empty());
}

TEST_CASE("spanning tree root is the smallest id and the result is deterministic") {
  const auto g = parse_graph(R"({"vertices": ["z", "b", "m"], "edges": [
    {"id": "e1", "from": "z", "to": "b", "label_from": 1, "label_to": 2},
    {"id": "e2", "from": "m", "to": "z", "label_from": 3, "label_to": 2},
    {"id": "e3", "from": "b", "to": "m", "label_from": 2, "label_to": 2}]})");
  const auto t = spanning_tree(g);
  CHECK(g.vertices()[t.root] == "b");
  CHECK(t == spanning_tree(parse_graph(serialize_graph(g))));
}

TEST_CASE("presentations") {
  const auto bs = baumslag_solitar(2, 3);
  const auto p = presentation(bs, spanning_tree(bs));
  REQUIRE(p.generators.size() == 2);
  CHECK(p.generators[0].name == "x.v");
  CHECK(p.generators[1].name == "t.e1");
  REQUIRE(p.relators.size() == 1);
  CHECK(format_word(p.relators[0].word, bs) == "t.e1^-1 * x.v^2 * t.e1 * x.v^-3");

  const auto two = parse_graph(kTwoCycle);
  const auto p2 = presentation(two, spanning_tree(two));
  REQUIRE(p2.generators.size() == 3);
  CHECK(p2.generators[2].name == "t.e2");
  CHECK(format_word(p2.relators[0].word, two) == "x.u * x.v^-2");
  CHECK(format_word(p2.relators[1].word, two) == "t.e2^-1 * x.v * t.e2 * x.u^-3");

  const GbsGraph rose({"v"}, {{"e1", 0, 0, 1, 2}, {"e2", 0, 0, 1, 3}});
  const auto pr = presentation(rose, spanning_tree(rose));
  CHECK(pr.relators.size() == 2);
  CHECK(betti(rose) == 2);
}

TEST_CASE("serialization round-trips") {
  for (const char* text : {kBs23, kTwoCycle, kPath}) {
    const auto g = parse_graph(text);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
  const GbsGraph big({"v"}, {{"e1", 0, 0, Integer("1234567890"), Integer("-9876543210")}});
  CHECK(parse_graph(serialize_graph(big)) == big);
  const GbsGraph huge({"v"}, {{"e1", 0, 0, Integer("123456789012345678901234567890"), Integer(1)}});
  const auto text = serialize_graph(huge);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(parse_graph(text) == huge);
}

TEST_CASE("cycle count equals betti number on the corpus") {
  for (const auto& g : oracle::corpus(7, 40)) {
    const auto t = spanning_tree(g);
    CHECK(fundamental_cycles(g, t).size() == betti(g));
    CHECK(t.tree_edges.size() + 1 == g.vertices().size());
    for (const auto& c : fundamental_cycles(g, t)) {
      // Closed walk through exactly one non-tree edge.
      std::size_t crossings = 0;
      VertexIndex at = c.base_vertex;
      for (const auto& s : c.oriented_edges) {
        CHECK(g.source(s) == at);
        at = g.target(s);
        crossings += t.in_tree[s.edge] ? 0 : 1;
      }
      CHECK(at == c.base_vertex);
      CHECK(crossings == 1);
    }
    const auto p = presentation(g, t);
    for (const auto& r : p.relators) {
      for (const auto& l : r.word.letters()) CHECK(p.generator_of(l).has_value());
    }
  }
}

TEST_CASE("transport along walks") {
  const GbsGraph g({"u", "v"}, {{"e1", 0, 1, 2, 3}, {"e2", 1, 0, 3, 2}});
  const auto c = fundamental_cycles(g, spanning_tree(g))[0];
  CHECK(min_transport_power(g, c.oriented_edges) == 2);
  CHECK(*transport(g, c.oriented_edges, 2) == 2);
  CHECK_FALSE(transport(g, c.oriented_edges, 1).has_value());
  const auto labels = loop_labels(g, c.oriented_edges);
  CHECK(labels.entering == 6);
  CHECK(labels.exiting == 6);
  CHECK(reverse_walk(reverse_walk(c.oriented_edges)) == c.oriented_edges);
  const auto rotated = rotate_walk(g, c.oriented_edges, 1);
  CHECK(g.source(rotated.front()) == 1);
}
