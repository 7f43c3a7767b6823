#pragma once

#include "octodp/matrix.hpp"
#include "octodp/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace octodp {

/// Subset of the support points {a..h}; bit i is the i-th point.
using PointSet = std::uint8_t;

std::string point_set_label(PointSet s);
/// Inverse of point_set_label; throws PreconditionError on letters outside a..h.
PointSet parse_point_set(std::string_view label);

/// Heights indexed by a..h.
using WeightVector = std::array<Rational, 8>;
WeightVector weights_from_ints(const std::array<long, 8>& w);

/// The support A, dehomogenized by dropping the last exponent (all points
/// have degree 3, so this is an affine isomorphism onto its image).
const std::array<std::array<int, 3>, 8>& support_points();

/// |det| of the homogenized 4x4 matrix; 0 for degenerate or non-4 subsets.
int normalized_volume(PointSet simplex);
inline constexpr int kSupportVolume = 7;

/// Vertex sets of the facets of conv(A), sorted by label.
std::vector<PointSet> support_facets();

/// Cells sorted ascending by bitmask. A triangulation is a set of
/// full-dimensional 4-point cells meeting face to face and covering conv(A).
struct Triangulation {
  std::vector<PointSet> cells;

  bool is_unimodular() const { return cells.size() == static_cast<std::size_t>(kSupportVolume); }
  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  friend auto operator<=>(const Triangulation&, const Triangulation&) = default;
};

/// Whether two full-dimensional simplices on A meet in a common face, via
/// the circuits of A.
bool simplices_intersect_properly(PointSet s, PointSet t);

bool is_triangulation(const std::vector<PointSet>& cells);

/// Subdivision induced by the lower hull of the lifted points (a_i, w_i).
/// Cells sorted by bitmask. Non-generic w gives coarser (non-simplex) cells.
std::vector<PointSet> regular_subdivision(std::span<const Rational, 8> w);

/// The subdivision as a triangulation when every cell is a 4-point simplex.
std::optional<Triangulation> regular_triangulation(std::span<const Rational, 8> w);

/// Rows r with r . w > 0 for all w in the interior of the secondary cone:
/// for each cell s and point j outside it, w_j minus the value at a_j of the
/// affine interpolation of w on s.
RatMatrix secondary_cone_inequalities(const Triangulation& t);

bool in_secondary_cone(const Triangulation& t, std::span<const Rational, 8> w);

/// An integral interior point of the secondary cone, or nullopt when t is
/// not regular.
std::optional<WeightVector> regularity_witness(const Triangulation& t);

/// Every triangulation of A, sorted.
std::vector<Triangulation> enumerate_triangulations();

struct RegularTriangulation {
  Triangulation triangulation;
  WeightVector witness;
};

/// All regular triangulations with LP witnesses, sorted; computed once.
const std::vector<RegularTriangulation>& enumerate_regular_triangulations();

using GkzVector = std::array<int, 8>;
/// Throws PreconditionError when t is not a triangulation.
GkzVector gkz_vector(const Triangulation& t);

/// Minimal non-faces sorted by size, then label.
using SRIdeal = std::vector<PointSet>;
SRIdeal sr_ideal(const std::vector<PointSet>& cells);
/// "<ah, bg, cf>"
std::string to_string(const SRIdeal& ideal);
SRIdeal parse_sr_ideal(std::string_view text);

/// perm[i] is the image of point i.
using PointPermutation = std::array<int, 8>;

/// Permutations of A induced by affine automorphisms of conv(A).
const std::vector<PointPermutation>& symmetry_group();

PointSet apply(const PointPermutation& perm, PointSet s);
Triangulation apply(const PointPermutation& perm, const Triangulation& t);

/// Indices into ts grouped by orbit, each orbit ascending, orbits ordered by
/// their first index.
std::vector<std::vector<std::size_t>> symmetry_orbits(const std::vector<Triangulation>& ts);

struct BinomialCheck {
  std::string lead;
  std::string trail;
  bool homogeneous = false;
  /// The monomial of highest weight, or nullopt on a tie.
  std::optional<std::string> initial;
};

/// The eight quadratic generators of the toric ideal of A.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 8> kToricGenerators = {{
    {"ab", "cf"}, {"ac", "eg"}, {"ad", "fg"}, {"ah", "cd"},
    {"bg", "cd"}, {"cf", "de"}, {"eh", "bc"}, {"fh", "bd"},
}};

std::vector<BinomialCheck> toric_ideal_check(std::span<const Rational, 8> w);

/// One row of the table of unimodular symmetry classes.
struct UnimodularClass {
  int row;
  int orbit_size;
  std::string_view sr_ideal;
  std::array<long, 8> weights;
  GkzVector gkz;
};

const std::array<UnimodularClass, 10>& unimodular_class_table();

/// Row (1..10) of the class containing t, or 0 when t is not unimodular.
int unimodular_class(const Triangulation& t);

}  // namespace octodp
