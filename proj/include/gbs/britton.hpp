#pragma once

// Word problem for GBS groups via Britton's lemma on graph-of-groups paths.
//
// A group element is written as a closed walk at the tree root,
//
//   g_0 (e_1, d_1) g_1 (e_2, d_2) ... (e_l, d_l) g_l,
//
// where g_i is a power of the generator of the vertex reached after i steps.
// A pinch is a back-and-forth (e, d) g (e, -d) whose middle power lies in the
// edge group at that end (the label divides it); it rewrites to the matching
// power on the other end. A path without pinches is trivial exactly when it
// has no steps and g_0 = 0. Vertex and edge groups are all infinite cyclic,
// so edge-group membership is a divisibility test and the procedure is a
// decision procedure.

#include "gbs/graph.hpp"
#include "gbs/presentation.hpp"
#include "gbs/word.hpp"

#include <string_view>
#include <vector>

namespace gbs {

struct PathWord {
  VertexIndex base = 0;
  std::vector<Integer> exponents{Integer(0)};  // always steps.size() + 1 entries
  std::vector<Step> steps;

  bool empty() const { return steps.empty() && exponents.front() == 0; }
  bool operator==(const PathWord&) const = default;
};

// Word grammar:
//   word := term (WS* "*" WS* term)* | "1"
//   term := gen ("^" int)?
//   gen  := "x." id | "t." id
// Throws Error(Syntax) or Error(UnknownGenerator).
GroupWord parse_word(std::string_view text, const Presentation& p);

PathWord to_path_form(const GroupWord& w, const GbsGraph& g, const TreeData& t);
// Inverse translation of a root-based path back into the tree presentation.
GroupWord from_path_form(const PathWord& pw, const GbsGraph& g, const TreeData& t);

// Leftmost-innermost pinch elimination; the result is pinch-free.
PathWord britton_reduce(const PathWord& pw, const GbsGraph& g);

bool is_trivial(const GroupWord& w, const GbsGraph& g, const TreeData& t);
bool are_equal(const GroupWord& a, const GroupWord& b, const GbsGraph& g, const TreeData& t);

// Reduced word: britton_reduce round-tripped through the path form.
GroupWord reduce_word(const GroupWord& w, const GbsGraph& g, const TreeData& t);

}  // namespace gbs
