#pragma once

#include "octodp/octanomial.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace octodp {

/// Homogeneous coordinates; canonical form divides by the first nonzero entry.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Rational> coords);
  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size() - 1; }
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const ProjPoint& p);

enum class LineKind { E, F, G };

/// E_i, F_ij (i < j) or G_i with 1-based indices.
struct LineLabel {
  LineKind kind = LineKind::E;
  int i = 1;
  int j = 0;

  static LineLabel e(int i);
  static LineLabel f(int i, int j);
  static LineLabel g(int i);
  static LineLabel parse(std::string_view text);
  /// Position 0..26 in the order E1..E6, F12..F56, G1..G6.
  int index() const;
  static LineLabel from_index(int index);
  friend bool operator==(const LineLabel&, const LineLabel&) = default;
};

std::string to_string(const LineLabel& label);

/// Intersection number of two distinct lines in the del Pezzo labeling.
bool labels_meet(const LineLabel& l, const LineLabel& m);

/// Plücker coordinates (p01, p02, p03, p12, p13, p23) are stored as a
/// primitive integer vector with positive first nonzero entry.
using Plucker = std::array<Rational, 6>;
inline constexpr std::array<std::pair<int, int>, 6> kPluckerPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

Plucker plucker_from_span(std::span<const Rational, 4> u, std::span<const Rational, 4> v);
Plucker canonical_plucker(const Plucker& p);
/// p01 p23 - p02 p13 + p03 p12.
Rational plucker_relation(const Plucker& p);
/// Zero iff the two lines meet.
Rational plucker_pairing(const Plucker& p, const Plucker& q);
/// Two points spanning the line, taken from the columns of its skew matrix.
std::array<std::array<Rational, 4>, 2> line_span(const Plucker& p);

struct PluckerLine {
  LineLabel label;
  Plucker p;
};

/// (1 : d_i : d_i^3), as points of P^2.
std::array<ProjPoint, 6> base_points(const ModuliVector& d);

/// Throws InvariantError when the Jacobian at p_i does not have rank 2.
PluckerLine exceptional_line(const ModuliVector& d, int i);
PluckerLine connecting_line(const ModuliVector& d, int i, int j);
/// The rational curve that is the image of the conic through the other five
/// base points.
PluckerLine conic_line(const ModuliVector& d, int i);

/// The point where two meeting lines cross; nullopt when they are skew or equal.
std::optional<ProjPoint> intersection_point(const Plucker& l, const Plucker& m);

/// True iff the cubic vanishes at four distinct points of the line.
bool line_on_surface(const Plucker& l, const QuaternaryCubic& cubic);

struct LineCensus {
  OctanomialCoefficients coefficients;
  std::vector<PluckerLine> lines;  // in LineLabel::index() order
  std::array<std::array<bool, 27>, 27> incidence{};
  std::map<std::pair<int, int>, ProjPoint> intersections;  // keyed by (i < j)

  std::size_t incident_pair_count() const { return intersections.size(); }
  const PluckerLine& line(const LineLabel& label) const { return lines[label.index()]; }
};

/// All 27 lines, their incidences and the 135 intersection points. Every
/// structural property of the census is checked; a violation throws
/// InvariantError naming the failing check.
LineCensus full_census(const ModuliVector& d);

/// Strongly regular with parameters (27, 10, 1, 5).
bool is_schlafli_graph(const std::array<std::array<bool, 27>, 27>& adjacency);

/// The line with coordinates (bg-ah : fh-bd : ad-fg : bc-eh : eg-ac : cf-de).
Plucker middle_line_formula(const OctanomialCoefficients& c);

/// The two printed triplet members, as functions of d.
Plucker triplet_formula_p02_p13(const std::array<Rational, 6>& d);
Plucker triplet_formula_p03_p12(const std::array<Rational, 6>& d);

/// For each of the two formulas, the label of the census line in its triplet
/// that is proportional to it (nullopt when none is).
struct TripletMatch {
  std::optional<LineLabel> p02_p13;
  std::optional<LineLabel> p03_p12;
  bool ok() const { return p02_p13.has_value() && p03_p12.has_value(); }
};
TripletMatch triplet_formula_check(const ModuliVector& d, const LineCensus& census);
bool triplet_formula_check(const ModuliVector& d);

bool proportional(std::span<const Rational> u, std::span<const Rational> v);

}  // namespace octodp
