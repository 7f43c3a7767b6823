#pragma once

#include "octodp/lines.hpp"
#include "octodp/triangulation.hpp"
#include "octodp/valuation.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace octodp {

std::array<ExtValuation, 8> coefficient_valuations(const OctanomialCoefficients& c, const Prime& p);

struct SmoothnessResult {
  /// Some coefficient vanishes, so the heights are not all finite.
  bool boundary = false;
  std::vector<PointSet> subdivision;
  /// Row 1..10 of the unimodular class table when tropically smooth.
  std::optional<int> triangulation_class;
  std::optional<Triangulation> triangulation;

  bool smooth() const { return triangulation_class.has_value(); }
};

SmoothnessResult tropical_smoothness(const OctanomialCoefficients& c, const Prime& p);

/// Strictly inside the secondary cone of t; false when a valuation is infinite.
bool cone_inequalities(const Triangulation& t, std::span<const ExtValuation, 8> vals);

/// Plücker valuations shifted so the finite minimum is 0; infinite exactly
/// on the zero coordinates.
struct TropicalLineSignature {
  std::array<bool, 6> zero_pattern{};
  std::array<ExtValuation, 6> vals;
  friend bool operator==(const TropicalLineSignature&, const TropicalLineSignature&) = default;
};

TropicalLineSignature tropical_signature(const Plucker& l, const Prime& p);

struct DistinctLinesResult {
  bool distinct = true;
  std::optional<std::pair<LineLabel, LineLabel>> collision;
};

DistinctLinesResult distinct_tropical_lines(std::span<const PluckerLine> lines, const Prime& p);
DistinctLinesResult distinct_tropical_lines(const LineCensus& census, const Prime& p);

/// The 10 lines meeting `line`, in label order; they are the tree's leaves.
std::vector<LineLabel> tree_leaves(const LineLabel& line);

/// Plücker positions k with p_k != 0: projecting onto that coordinate pair is
/// an isomorphism from the line onto P^1.
std::vector<int> projection_axes(const Plucker& l);

/// Valuations of the 45 minors of the 2x10 matrix of projected intersection
/// points, indexed by leaf pairs (i<j) in lexicographic order. Uses the first
/// valid axis unless one is given. Throws PreconditionError when two points
/// coincide (an infinite minor).
std::vector<ExtValuation> tree_metric(const LineLabel& line, const LineCensus& census, const Prime& p,
                                      std::optional<int> axis = std::nullopt);

/// Position of the pair (i, j) with i != j in tree_metric's output.
std::size_t pair_index(int i, int j, int leaves = 10);

/// Every quartet has its minimal pairing sum attained at least twice.
bool four_point_condition(const std::vector<ExtValuation>& metric, int leaves = 10);

/// Bipartition stored as the side not containing leaf 0.
using Split = std::uint16_t;

struct PhyloTree {
  std::vector<std::string> leaves;
  std::vector<Split> splits;  // sorted
  std::vector<Rational> edge_weights;  // parallel to splits
};

/// All bipartitions with both sides of size >= 2 whose quartets resolve
/// together. Throws InvariantError when the result is not a compatible
/// family (a four-point violation).
PhyloTree recover_tree(const std::vector<ExtValuation>& metric, std::vector<std::string> leaves);

bool splits_compatible(Split a, Split b, int leaves = 10);

std::string to_newick(const PhyloTree& t, bool with_lengths = false);

struct SplitString {
  std::array<int, 4> s{};  // s2, s3, s4, s5
  friend bool operator==(const SplitString&, const SplitString&) = default;
  friend auto operator<=>(const SplitString&, const SplitString&) = default;
};

SplitString split_string(const PhyloTree& t);
std::string to_string(const SplitString& s);
SplitString parse_split_string(std::string_view text);

using ArrangementStatistic = std::map<SplitString, int>;

std::string to_string(const ArrangementStatistic& stat);
/// Parses "{[4021]^24, [4020]^3}".
ArrangementStatistic parse_statistic(std::string_view text);

struct TreeArrangement {
  std::vector<PhyloTree> trees;  // in line index order
  std::vector<SplitString> strings;
  ArrangementStatistic statistic;
};

TreeArrangement tree_arrangement(const LineCensus& census, const Prime& p);
ArrangementStatistic arrangement_statistic(const ModuliVector& d, const Prime& p);

enum class ArrangementType { AAAA, AAAB, AAB, AAA, OtherStable, NonStableUnknown };
std::string to_string(ArrangementType t);

/// True iff s is coordinatewise at most one of the generic strings
/// [4021], [4020], [2221], [4201], [4210].
bool is_contraction_of_generic(const SplitString& s);

ArrangementType classify_arrangement(const ArrangementStatistic& stat);

/// Initial form of the discriminant at the valuation vector.
struct InitialFormCheck {
  bool discriminant_nonzero = false;
  ExtValuation min_term_valuation;
  int min_term_count = 0;
  ExtValuation delta_valuation;

  bool holds() const {
    return discriminant_nonzero && min_term_count == 1 && min_term_valuation == delta_valuation;
  }
};

InitialFormCheck initial_form_check(const OctanomialCoefficients& c, const Prime& p);

/// Everything the classifier reports for one moduli vector.
struct Classification {
  ModuliVector moduli;
  Prime prime;
  OctanomialCoefficients coefficients;
  std::array<ExtValuation, 8> valuations;
  SmoothnessResult smoothness;
  DistinctLinesResult distinct_lines;
  LineCensus census;
  TreeArrangement arrangement;
  ArrangementType type;
};

Classification classify_moduli(const ModuliVector& d, const Prime& p);

}  // namespace octodp
