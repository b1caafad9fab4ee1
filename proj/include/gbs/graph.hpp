#pragma once

// Graph-of-groups model for generalized Baumslag-Solitar groups.
//
// A GBS graph is a finite connected multigraph whose edge ends carry nonzero
// integer labels. Every vertex and edge group is infinite cyclic; the edge
// e = (from -> to) with labels (label_from, label_to) identifies
// x_from^label_from with x_to^label_to, twisted by a stable letter t_e when e
// lies outside the chosen spanning tree:
//
//   tree edge:      x_from^label_from = x_to^label_to
//   non-tree edge:  t_e^-1 x_from^label_from t_e = x_to^label_to
//
// Unimodularity quantifies over all loops of the graph. The loop products
// are multiplicative over the cycle space, so checking the fundamental cycles
// of one spanning tree is enough; everything downstream works with that
// basis.

#include "gbs/integer.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace gbs {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

enum class Direction : std::uint8_t { Forward, Backward };

constexpr Direction opposite(Direction d) {
  return d == Direction::Forward ? Direction::Backward : Direction::Forward;
}

struct EdgeRecord {
  std::string id;
  VertexIndex from = 0;
  VertexIndex to = 0;
  Integer label_from;
  Integer label_to;

  bool operator==(const EdgeRecord&) const = default;
};

// One traversal of an edge. Forward walks from -> to.
struct Step {
  EdgeIndex edge = 0;
  Direction dir = Direction::Forward;

  bool operator==(const Step&) const = default;
};

class GbsGraph {
 public:
  // Validates connectivity, id uniqueness and nonzero labels.
  GbsGraph(std::vector<std::string> vertices, std::vector<EdgeRecord> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const EdgeRecord& edge(EdgeIndex e) const { return edges_.at(e); }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  // Where a traversal starts and ends.
  VertexIndex source(Step s) const;
  VertexIndex target(Step s) const;
  // Label at the end a traversal leaves from, and at the end it arrives at.
  const Integer& entering_label(Step s) const;
  const Integer& exiting_label(Step s) const;

  bool operator==(const GbsGraph&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<EdgeRecord> edges_;
};

struct ParentLink {
  VertexIndex parent = 0;
  EdgeIndex edge = 0;
  Direction dir = Direction::Forward;  // traversal direction parent -> child

  bool operator==(const ParentLink&) const = default;
};

struct TreeData {
  VertexIndex root = 0;
  std::vector<bool> in_tree;                       // per edge
  std::vector<std::optional<ParentLink>> parent;   // per vertex; empty at root
  std::vector<std::size_t> depth;                  // per vertex
  std::vector<EdgeIndex> tree_edges;               // discovery order
  std::vector<EdgeIndex> non_tree_edges;           // input order

  bool operator==(const TreeData&) const = default;
};

struct Cycle {
  EdgeIndex non_tree_edge = 0;
  std::vector<Step> oriented_edges;
  VertexIndex base_vertex = 0;
};

// BS(m, n) as one vertex "v" with one loop "e1" labelled (m, n).
GbsGraph baumslag_solitar(const Integer& m, const Integer& n);

// Parses the JSON graph document. Throws Error(Syntax) or Error(Validation).
GbsGraph parse_graph(std::string_view text);
std::string serialize_graph(const GbsGraph& g);

// Breadth-first from the lexicographically smallest vertex id, exploring
// incident edges in input order.
TreeData spanning_tree(const GbsGraph& g);
// Breadth-first from a random root with shuffled edge order; used to check
// that results do not depend on the tree.
TreeData random_spanning_tree(const GbsGraph& g, std::mt19937_64& rng);

std::size_t betti(const GbsGraph& g);

// Steps along the tree from `from` to `to` (through their lowest common
// ancestor).
std::vector<Step> tree_path(const GbsGraph& g, const TreeData& t, VertexIndex from,
                            VertexIndex to);

// One cycle per non-tree edge, in input order. Each cycle is based at the
// lowest common ancestor of the edge ends, runs down the tree to `from`,
// crosses the edge forward and climbs back from `to`.
std::vector<Cycle> fundamental_cycles(const GbsGraph& g, const TreeData& t);

// Products of entering and exiting labels along a walk.
struct LoopLabels {
  Integer entering;
  Integer exiting;
};
LoopLabels loop_labels(const GbsGraph& g, const std::vector<Step>& walk);

// Carries x^exponent at the start of a walk across each edge group in turn:
// x_source^(q * entering) becomes x_target^(q * exiting). Nullopt as soon as
// the current power is outside an edge group.
std::optional<Integer> transport(const GbsGraph& g, const std::vector<Step>& walk, const Integer& exponent);
// Least positive exponent that can be carried along the whole walk; its
// multiples are exactly the exponents that can.
Integer min_transport_power(const GbsGraph& g, const std::vector<Step>& walk);

// Rotates a closed walk so it starts at `vertex` (which must lie on it).
std::vector<Step> rotate_walk(const GbsGraph& g, const std::vector<Step>& walk,
                              VertexIndex vertex);
std::vector<Step> reverse_walk(const std::vector<Step>& walk);

}  // namespace gbs
