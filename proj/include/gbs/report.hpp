#pragma once

// JSON documents for everything the command-line tool prints. Key order is
// fixed and wall-clock times are left out, so equal inputs give equal bytes.

#include "gbs/britton.hpp"
#include "gbs/classifier.hpp"
#include "gbs/linearity.hpp"
#include "gbs/quotient.hpp"
#include "gbs/witness.hpp"

#include <json.hpp>

namespace gbs {

using Json = nlohmann::ordered_json;

// Number when it fits a double exactly, decimal string otherwise.
Json json_integer(const Integer& value);

Json to_json(const FiniteHom& h, const Presentation& p);
Json to_json(const ProbeReport& r, const GbsGraph& g, const TreeData& t);
Json to_json(const ValidatedWitness& w, const GbsGraph& g, const TreeData& t);
Json to_json(const WitnessOutcome& w, const GbsGraph& g, const TreeData& t);
Json to_json(const Classification& c, const GbsGraph& g, const TreeData& t);
// Entries as "p/q" strings, "1/1" included.
Json to_json(const RationalMatrix& m);
Json to_json(const MatrixRep& rep);
Json to_json(const FaithfulnessReport& r, const GbsGraph& g);
Json to_json(const Presentation& p, const GbsGraph& g);
Json to_json(const PathWord& pw, const GbsGraph& g);
Json tree_json(const GbsGraph& g, const TreeData& t);

// Flattened "path: value" lines, one per leaf, for the plain-text mode.
std::string to_text(const Json& doc);

}  // namespace gbs
