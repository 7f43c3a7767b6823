#pragma once

#include "octodp/lines.hpp"
#include "octodp/matrix.hpp"

#include <array>
#include <optional>

namespace octodp {

/// A linear form on P^3, canonicalized to a primitive integer vector with
/// positive first nonzero entry.
using PlaneForm = std::array<Rational, 4>;

/// The plane containing two meeting lines. Throws PreconditionError when the
/// lines are skew or equal.
PlaneForm plane_span(const Plucker& l1, const Plucker& l2);

Rational evaluate(const PlaneForm& h, std::span<const Rational, 4> q);

/// The blow-down S -> P^2 contracting E1..E6, given on the charts
/// U12, U13, U23 by quadratic maps in the forms h_ij = plane(G_i, E_j).
class BlowdownMap {
 public:
  explicit BlowdownMap(const LineCensus& census);

  /// Chart 0, 1, 2 is U12, U13, U23. nullopt when all three products vanish.
  std::optional<ProjPoint> chart(int index, std::span<const Rational, 4> q) const;
  /// First chart defined at q.
  std::optional<ProjPoint> operator()(std::span<const Rational, 4> q) const;

  /// Image of a contracted line E_i, evaluated at points of the line in
  /// every chart; throws InvariantError when charts disagree.
  ProjPoint contracted_image(int i) const;

  const PlaneForm& h(int i, int j) const { return h_[i - 1][j - 1]; }
  const std::array<std::array<Rational, 3>, 3>& constants() const { return constants_; }

 private:
  std::array<Rational, 3> raw_chart(int index, std::span<const Rational, 4> q) const;
  std::vector<std::array<Rational, 4>> sample_points(const LineLabel& l) const;

  const LineCensus* census_;
  std::array<std::array<PlaneForm, 3>, 3> h_{};
  std::array<std::array<Rational, 3>, 3> constants_{};
};

/// The projective transform sending a[k] to b[k] for k = 0..3 (general position).
std::optional<RatMatrix> projective_transform(const std::array<std::array<Rational, 3>, 4>& a,
                                              const std::array<std::array<Rational, 3>, 4>& b);

struct RoundTrip {
  RatMatrix transform{3, 3};
  std::array<ProjPoint, 6> recovered;  // pi(E_1..E_6)
  bool projective = false;        // pi o phi agrees with T on the check points
  bool configuration = false;     // T(p_i) = pi(E_i) for all six i
  bool ok() const { return projective && configuration; }
};

/// Composes the plane parametrization with the blow-down, fits the
/// transform on four points, checks it on `checks` more, then compares the
/// base points with the contracted lines.
RoundTrip roundtrip_check(const ModuliVector& d, int checks = 9);

struct CuspidalFrame {
  std::array<Rational, 3> ell0, ell1, ell2;
};

/// ell1^3 - ell0^2 ell2 in X, Y, Z.
SparsePoly frame_cubic(const CuspidalFrame& frame);

/// d_i = ell1(p_i) / ell0(p_i). Throws PreconditionError when a point is off
/// the cubic or ell0 vanishes there.
std::array<Rational, 6> moduli_from_frame(const CuspidalFrame& frame, const std::array<ProjPoint, 6>& points);

}  // namespace octodp
