#pragma once

#include "octodp/blowdown.hpp"
#include "octodp/sampler.hpp"
#include "octodp/tropical.hpp"

#include <json.hpp>

#include <string>

namespace octodp {

using Json = nlohmann::ordered_json;

// Rationals are always emitted as exact decimal strings such as "-7/25".
Json to_json(const Rational& q);
Json to_json(const ExtValuation& v);  // integer or the string "inf"
Json to_json(const ProjPoint& p);
Json to_json(const ModuliVector& d);
Json to_json(const OctanomialCoefficients& c);
Json to_json(const QuaternaryCubic& f);  // [[exponent, coefficient], ...]

Json build_report(const ModuliVector& d);
Json census_report(const LineCensus& census);
Json classification_report(const Classification& c, bool with_trees = false);
/// Orbits of all regular triangulations with the matching class-table row
/// for the unimodular ones.
Json triangulation_census_report();
Json roundtrip_report(const RoundTrip& r);
Json finding_report(const Finding& f);

/// The Schläfli incidence graph in DOT syntax.
std::string schlafli_dot(const LineCensus& census);
/// One "LABEL newick" line per tree.
std::string arrangement_newick(const TreeArrangement& arrangement, const LineCensus& census);

}  // namespace octodp
