#pragma once

// Non-residual-finiteness witnesses: explicit words that every homomorphism
// to a finite group kills, checked here to be nontrivial by the word engine.
//
// The word templates take their letters as arguments so they can be
// instantiated inside any Baumslag-Solitar subgroup <x, t> of a GBS group,
// typically a loop subgroup generated by a base vertex generator and the
// loop's stable-letter product.

#include "gbs/graph.hpp"
#include "gbs/quotient.hpp"
#include "gbs/word.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gbs {

enum class WitnessRecipe {
  CoprimeExponents,  // neither exponent divides the other
  ProperDivisor,     // BS(m, mq) with |m|, |q| >= 2
  LoopCommutator,    // two ascending loops at one vertex
  LoopMixed,         // ascending loop against a unimodular loop
  HangingEdge,       // single ascending loop with an edge that does not collapse
  MultiLoop,         // two loops rebased and rescaled to a common vertex power
};

// Wire name used in reports ("Claim1", "Claim2", ...).
std::string recipe_name(WitnessRecipe recipe);

using WitnessParameters = std::map<std::string, Integer>;

struct TemplateWord {
  WitnessParameters parameters;
  GroupWord word;
};

// For t^-1 x^m t = x^n with s = gcd, m = m's, n = n's and |m'|, |n'| > 1:
// w = x^s (t^-1 x^(as) t x^(-bs))^m' where a is the least 0 <= a < m' with
// an' = -1 (mod m') and b = (an' + 1) / m'. (m, n) is first replaced by
// (-m, -n) when m < 0; the relation is the same.
TemplateWord claim1_witness(const Integer& m, const Integer& n, const GroupWord& x, const GroupWord& t);

// For t^-1 x^m t = x^(mq): w = x^(-m-q) (t x^m t^-1 x)^q.
TemplateWord claim2_witness(const Integer& m, const Integer& q, const GroupWord& x, const GroupWord& t);

// [t x^P t^-1, u x^P u^-1].
GroupWord sec4_commutator_witness(const GroupWord& x, const GroupWord& t, const GroupWord& u, const Integer& power);

// u t x^m t^-1 u^-1 t x^(-em) t^-1.
GroupWord sec4_mixed_witness(const GroupWord& x, const GroupWord& t, const GroupWord& u, const Integer& m, int e);

// The subgroup <u, x> of a fundamental cycle: x is the base-vertex generator,
// u the cycle's stable-letter product, and u^-1 x^M u = x^N with M, N the
// products of entering and exiting labels.
struct LoopSubgroup {
  VertexIndex base = 0;
  GroupWord u;
  GroupWord x;
  Integer M;
  Integer N;
};
LoopSubgroup loop_subgroup(const GbsGraph& g, const TreeData& t, const Cycle& c);

// Single loop of type (1, l) with a tree edge whose far label n has |n| >= 2.
// Instantiates claim2_witness(n, l) on the far vertex generator and the loop
// element rebased at the attachment vertex.
TemplateWord claim5_route_witness(const GbsGraph& g, const TreeData& t, EdgeIndex offending_edge,
                                  const Cycle& cycle);

struct ValidatedWitness {
  GroupWord word;
  WitnessRecipe recipe = WitnessRecipe::CoprimeExponents;
  WitnessParameters parameters;
  bool nontrivial = false;
  std::optional<ProbeReport> probe;
};

struct WitnessOutcome {
  std::optional<ValidatedWitness> witness;
  std::vector<std::string> diagnostics;
};

// Strategy order: coprime loop, properly dividing loop, hanging edge (one
// loop), two-loop composite. Every candidate must pass validate_witness;
// the composite retries with doubled power up to 8 times. A probe is run and
// attached when bounds are given.
WitnessOutcome build_witness(const GbsGraph& g, const TreeData& t,
                             const std::optional<ProbeBounds>& probe = std::nullopt);

bool validate_witness(const GroupWord& w, const GbsGraph& g, const TreeData& t);

}  // namespace gbs
