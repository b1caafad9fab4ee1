#pragma once

// Exact rational matrix representations.
//
// BS(1, n) embeds in GL(2, Q) by x -> A = [[1, 1], [0, 1]] and
// t -> T = [[1/n, 0], [0, 1]]; then T^-1 A T = A^n. More generally every GBS
// graph maps to affine matrices by x_v -> [[1, value(v)], [0, 1]] and
// t_e -> diag(cycle_ratio(e), 1), with value and cycle_ratio from the modular
// map. For a graph recognized as BS(1, n) this map is faithful.
//
// Induction from a finite-index subgroup is block-wise over a coset table:
// block (i, j) of g is sub(r_i^-1 g r_j) when g r_j lies in r_i H.

#include "gbs/classifier.hpp"
#include "gbs/graph.hpp"
#include "gbs/integer.hpp"
#include "gbs/presentation.hpp"
#include "gbs/word.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace gbs {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), entries_(n * n, Rational(0)) {}
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t size() const { return n_; }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  // Throws PreconditionViolated when singular.
  RationalMatrix inverse() const;
  RationalMatrix pow(const Integer& exponent) const;
  Rational trace() const;
  bool is_identity() const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

// Images indexed like the presentation generators.
struct MatrixRep {
  std::size_t dimension = 0;
  Presentation presentation;
  std::vector<RationalMatrix> images;
  bool verified = false;  // every relator maps to the identity
};

RationalMatrix evaluate_rep(const MatrixRep& rep, const GroupWord& w);
bool relators_hold(const MatrixRep& rep);

// Standard BS(1, n) on the one-vertex graph {v, loop e: 1 -> n}; generators
// ordered (x, t). Throws NotSolvableForm for n = 0.
MatrixRep bs1n_rep(const Integer& n);
// Affine representation of any GBS graph; verified when relators hold.
MatrixRep affine_rep(const GbsGraph& g, const TreeData& t);

struct FaithfulnessReport {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t trivial = 0;  // samples the word engine proved trivial
  std::uint64_t disagreements = 0;
  std::vector<GroupWord> counterexamples;  // first few
};

// Seeded random words (at most 20 letters, exponents in [-5, 5]); about a
// quarter are replaced by conjugates v r^+-1 v^-1 of relators so the trivial
// side is exercised too. Each is compared for "matrix is identity" against
// Britton triviality.
FaithfulnessReport faithfulness_check(const MatrixRep& rep, const GbsGraph& g, const TreeData& t,
                                      std::uint64_t samples, std::uint64_t seed);

// Coset i of H is r_i H. action[j][s] says s r_j = r_target h.
struct CosetAction {
  std::size_t target = 0;
  GroupWord element;
};

struct CosetTable {
  std::vector<GroupWord> representatives;           // representatives[0] is empty
  std::vector<std::vector<CosetAction>> action;     // [coset][generator]

  std::size_t index() const { return representatives.size(); }
};

using SubgroupRep = std::function<RationalMatrix(const GroupWord&)>;

// Checks that each generator permutes the cosets and that every entry
// satisfies s r_j = r_target h in the group (InconsistentCosetTable
// otherwise), then assembles the block matrices and verifies the relators.
MatrixRep induce(const SubgroupRep& sub, std::size_t sub_dimension, const CosetTable& table, const GbsGraph& g,
                 const TreeData& t);

// Homomorphism to {+1, -1} recording whether each generator fixes or inverts
// the certified normal cyclic subgroup, and the coset table of its kernel.
struct OrientationCharacter {
  std::vector<int> signs;  // per presentation generator
  CosetTable kernel;
};

OrientationCharacter orientation_character(const GbsGraph& g, const TreeData& t, const NormalityCertificate& c);

}  // namespace gbs
