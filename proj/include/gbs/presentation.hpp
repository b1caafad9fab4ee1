#pragma once

#include "gbs/graph.hpp"
#include "gbs/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gbs {

struct Generator {
  Letter::Kind kind = Letter::Kind::Vertex;
  std::size_t index = 0;  // vertex index or (non-tree) edge index
  std::string name;       // "x.<vertex>" or "t.<edge>"

  GroupWord word() const;
};

struct Relator {
  GroupWord word;                  // equals the identity in the group
  std::optional<EdgeIndex> edge;   // edge the relator comes from, if any
};

// Fundamental-group presentation relative to a spanning tree: generators are
// x_v for every vertex and t_e for every non-tree edge (vertices first, then
// edges, both in input order); one relator per edge.
struct Presentation {
  std::vector<Generator> generators;
  std::vector<Relator> relators;

  std::optional<std::size_t> find(std::string_view name) const;
  // Generator index of a letter; nullopt for stable letters of tree edges.
  std::optional<std::size_t> generator_of(const Letter& letter) const;
};

Presentation presentation(const GbsGraph& g, const TreeData& t);

// Relator word for one edge under the tree convention.
GroupWord edge_relator(const GbsGraph& g, const TreeData& t, EdgeIndex e);

// Word of a walk in the tree presentation: tree edges are trivial, non-tree
// edges contribute t_e^{+-1}.
GroupWord walk_word(const TreeData& t, const std::vector<Step>& walk);

}  // namespace gbs
