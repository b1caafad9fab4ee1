#pragma once

#include "gbs/graph.hpp"
#include "gbs/integer.hpp"

#include <string>
#include <vector>

namespace gbs {

// A vertex power x_v^exponent or a single stable letter t_e^{+-1}.
struct Letter {
  enum class Kind : std::uint8_t { Vertex, Stable };

  Kind kind = Kind::Vertex;
  std::size_t index = 0;  // vertex index or edge index
  Integer exponent;       // nonzero; +-1 for stable letters

  static Letter vertex(VertexIndex v, Integer exponent) { return {Kind::Vertex, v, std::move(exponent)}; }
  static Letter stable(EdgeIndex e, int sign) { return {Kind::Stable, e, Integer(sign)}; }

  bool is_vertex() const { return kind == Kind::Vertex; }
  bool is_stable() const { return kind == Kind::Stable; }

  bool operator==(const Letter&) const = default;
};

// Freely reduced word over vertex generators and stable letters. Adjacent
// powers of the same vertex generator merge, zero powers vanish and t t^-1
// cancels. The empty word is the identity.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);

  static GroupWord vertex(VertexIndex v, const Integer& exponent = 1);
  // t_e^exponent, expanded into |exponent| letters.
  static GroupWord stable(EdgeIndex e, long exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  std::size_t stable_count() const;

  bool operator==(const GroupWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

GroupWord invert(const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);
// Negative powers are powers of the inverse.
GroupWord power(const GroupWord& w, long k);
// w^by = by^-1 w by.
GroupWord conjugate(const GroupWord& w, const GroupWord& by);
// [a, b] = a^-1 b^-1 a b.
GroupWord commutator(const GroupWord& a, const GroupWord& b);

GroupWord operator*(const GroupWord& a, const GroupWord& b);

// Renders in the word grammar, e.g. "x.v^3 * t.e1^-1 * x.v^2"; runs of equal
// stable letters collapse to one power; the identity renders as "1".
std::string format_word(const GroupWord& w, const GbsGraph& g);

}  // namespace gbs
