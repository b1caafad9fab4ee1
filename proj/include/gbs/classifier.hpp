#pragma once

// Residual finiteness and linearity of GBS groups. Exactly one of three cases
// holds:
//
//   Unimodular           some power x^k of a vertex generator is normal;
//                        the group is residually finite and linear.
//   SolvableBS           the group is BS(1, n); residually finite, linear.
//   NotResiduallyFinite  a witness word survives in the group but dies in
//                        every finite quotient.
//
// Unimodularity is tested first, so BS(1, +-1) and trees are Unimodular.

#include "gbs/graph.hpp"
#include "gbs/presentation.hpp"
#include "gbs/quotient.hpp"
#include "gbs/witness.hpp"
#include "gbs/word.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gbs {

// value(root) = 1 and value(to) / value(from) = label_from / label_to along
// tree edges, so x_v is commensurable with "x_root^value(v)". A non-tree edge
// closes a loop with ratio value(from) * label_from / (value(to) * label_to).
struct ModularMap {
  std::vector<Rational> value;                // per vertex
  std::map<EdgeIndex, Rational> cycle_ratio;  // per non-tree edge
};

ModularMap modular_map(const GbsGraph& g, const TreeData& t);
bool is_unimodular(const GbsGraph& g, const TreeData& t);

// Least positive k_v with x_v^(k_v) all equal to one element up to sign and
// every x_v^(k_v) inside the edge groups at v. Throws NotUnimodular, or
// CertificateFailure if no candidate verifies.
std::vector<Integer> normal_exponents(const GbsGraph& g, const TreeData& t);

struct CertificateCheck {
  std::size_t generator = 0;  // presentation generator index
  int sign = 1;               // s z s^-1 = z^sign
};

struct NormalityCertificate {
  VertexIndex vertex = 0;
  Integer exponent;  // z = x_vertex^exponent
  GroupWord element;
  std::vector<CertificateCheck> checks;
};

NormalityCertificate normality_certificate(const GbsGraph& g, const TreeData& t, const std::vector<Integer>& k);
// Re-runs every check of a certificate through the word engine.
bool verify_certificate(const GbsGraph& g, const TreeData& t, const NormalityCertificate& c);

struct SolvableForm {
  Integer n;
  std::vector<std::string> trace;  // collapse steps in order
};

// BS(1, n) recognition for a non-unimodular graph: one loop whose entering
// labels are units in one orientation, and every other edge collapsing
// (far label a unit, oriented away from the loop).
std::optional<SolvableForm> recognize_solvable(const GbsGraph& g, const TreeData& t);

enum class Tag { Unimodular, SolvableBS, NotResiduallyFinite };
std::string tag_name(Tag tag);

struct Classification {
  Tag tag = Tag::Unimodular;
  // Unimodular
  std::vector<Integer> k;
  std::optional<NormalityCertificate> certificate;
  // SolvableBS
  std::optional<SolvableForm> solvable;
  // NotResiduallyFinite
  std::optional<WitnessOutcome> witness;

  bool residually_finite() const { return tag != Tag::NotResiduallyFinite; }
  bool linear() const { return residually_finite(); }
};

struct ClassifyOptions {
  bool build_witness = true;
  std::optional<ProbeBounds> probe;
};

Classification classify(const GbsGraph& g, const TreeData& t, const ClassifyOptions& options = {});
Classification classify(const GbsGraph& g, const ClassifyOptions& options = {});

// G / <<x_root^k_root>>: the tree presentation plus x_v^(k_v) for every v.
Presentation finite_quotient_graph(const GbsGraph& g, const TreeData& t, const std::vector<Integer>& k);

}  // namespace gbs
