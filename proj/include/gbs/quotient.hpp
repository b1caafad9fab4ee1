#pragma once

// Finite quotients of a GBS presentation: homomorphisms into cyclic groups
// (read off the Smith normal form of the relator matrix) and into symmetric
// groups (depth-first search with relator pruning), plus the bounded
// residual-finiteness probe built on top of them.

#include "gbs/britton.hpp"
#include "gbs/graph.hpp"
#include "gbs/integer.hpp"
#include "gbs/presentation.hpp"
#include "gbs/word.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gbs {

inline constexpr std::size_t kMaxPermutationDegree = 8;

// Permutation of {0..degree-1}; products compose left to right, so
// (a * b)(i) = b(a(i)) and words evaluate in reading order.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t degree);
  static Permutation from_images(const std::vector<std::uint8_t>& images);

  std::size_t degree() const { return degree_; }
  std::uint8_t operator()(std::size_t i) const { return images_[i]; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation pow(const Integer& exponent) const;
  bool is_identity() const;
  std::uint64_t order() const;

  // Cycle notation on 1..degree, e.g. "(1 2 3)"; identity is "()".
  std::string cycle_notation() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::array<std::uint8_t, kMaxPermutationDegree> images_{};
  std::uint8_t degree_ = 0;
};

// All permutations of the given degree in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t degree);

struct FiniteTarget {
  enum class Family : std::uint8_t { Symmetric, Cyclic };
  Family family = Family::Cyclic;
  std::uint64_t size = 1;  // degree d or order k

  bool operator==(const FiniteTarget&) const = default;
};

using Residue = std::uint64_t;
using FiniteElement = std::variant<Permutation, Residue>;

// Images of the presentation generators, in generator order.
struct FiniteHom {
  FiniteTarget target;
  std::vector<FiniteElement> images;
};

FiniteElement evaluate(const FiniteHom& h, const GroupWord& w, const Presentation& p);
bool is_identity(const FiniteElement& e);
bool is_killed(const FiniteHom& h, const GroupWord& w, const Presentation& p);
// Every relator maps to the identity.
bool is_homomorphism(const FiniteHom& h, const Presentation& p);

std::string render_element(const FiniteElement& e);

// Integer matrix in row-major order.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> entries;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
  static IntegerMatrix identity(std::size_t n);

  Integer& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  IntegerMatrix operator*(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix&) const = default;
};

// Smith normal form D = left * relations * right with unimodular left/right.
// The inverses are tracked alongside so that
// left_inverse * D * right_inverse reproduces the relator matrix.
struct AbelianizationData {
  IntegerMatrix relations;  // rows = relators, columns = generators
  IntegerMatrix diagonal;
  IntegerMatrix left, left_inverse, right, right_inverse;
  std::vector<Integer> invariant_factors;  // nonzero diagonal, d_1 | d_2 | ...
  std::size_t free_rank = 0;

  // Torsion part with the trivial factors dropped, e.g. {2} for Z + Z/2.
  std::vector<Integer> torsion() const;
};

AbelianizationData abelianization(const Presentation& p);
// Exponent-sum vector of a word over the presentation generators.
std::vector<Integer> exponent_sums(const GroupWord& w, const Presentation& p);

std::vector<FiniteHom> cyclic_homs(const Presentation& p, std::uint64_t order);
std::vector<FiniteHom> cyclic_homs(const Presentation& p, const AbelianizationData& ab, std::uint64_t order);

struct SymmetricSearch {
  std::vector<FiniteHom> homs;
  bool limit_exceeded = false;
  std::uint64_t nodes = 0;  // partial assignments visited
};

// Visits homomorphisms into S_degree in lexicographic order of images.
// Return false from the visitor to stop early. Returns the visit count.
struct SearchStats {
  std::uint64_t found = 0;
  std::uint64_t nodes = 0;
  bool stopped = false;
};
SearchStats for_each_symmetric_hom(const Presentation& p, std::size_t degree,
                                   const std::function<bool(const FiniteHom&)>& visit);

SymmetricSearch symmetric_homs(const Presentation& p, std::size_t degree, std::uint64_t limit);

struct ProbeBounds {
  std::size_t sym_max = 5;
  std::uint64_t cyc_max = 100;
  std::uint64_t limit = 1000000;
};

struct ProbeReport {
  GroupWord word;
  ProbeBounds bounds;
  std::uint64_t cyclic_homs_found = 0;
  std::uint64_t symmetric_homs_found = 0;
  std::uint64_t search_nodes = 0;
  bool limit_exceeded = false;
  bool killed_in_all = true;
  std::optional<FiniteHom> separating_hom;
  double elapsed_ms = 0;  // wall clock; not part of serialized reports
};

// Rejects words the word engine proves trivial (Error TrivialWordRejected).
ProbeReport rf_probe(const GbsGraph& g, const TreeData& t, const GroupWord& w, const ProbeBounds& bounds);

}  // namespace gbs
