#include "gbs/presentation.hpp"

namespace gbs {

GroupWord Generator::word() const {
  return kind == Letter::Kind::Vertex ? GroupWord::vertex(index) : GroupWord::stable(index);
}

std::optional<std::size_t> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Presentation::generator_of(const Letter& letter) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].kind == letter.kind && generators[i].index == letter.index) return i;
  }
  return std::nullopt;
}

GroupWord edge_relator(const GbsGraph& g, const TreeData& t, EdgeIndex e) {
  const auto& rec = g.edge(e);
  auto lhs = GroupWord::vertex(rec.from, rec.label_from);
  if (!t.in_tree[e]) lhs = conjugate(lhs, GroupWord::stable(e));
  return lhs * GroupWord::vertex(rec.to, -rec.label_to);
}

Presentation presentation(const GbsGraph& g, const TreeData& t) {
  Presentation p;
  for (VertexIndex v = 0; v < g.vertices().size(); ++v) {
    p.generators.push_back(Generator{Letter::Kind::Vertex, v, "x." + g.vertices()[v]});
  }
  for (EdgeIndex e : t.non_tree_edges) {
    p.generators.push_back(Generator{Letter::Kind::Stable, e, "t." + g.edge(e).id});
  }
  for (EdgeIndex e = 0; e < g.edges().size(); ++e) {
    p.relators.push_back(Relator{edge_relator(g, t, e), e});
  }
  return p;
}

GroupWord walk_word(const TreeData& t, const std::vector<Step>& walk) {
  std::vector<Letter> letters;
  for (const auto& s : walk) {
    if (t.in_tree[s.edge]) continue;
    letters.push_back(Letter::stable(s.edge, s.dir == Direction::Forward ? 1 : -1));
  }
  return GroupWord(std::move(letters));
}

}  // namespace gbs
