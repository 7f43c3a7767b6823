#pragma once

#include "octodp/rational.hpp"
#include "octodp/sparse_poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace octodp {

/// One of the 36 linear forms d_i - d_j (i<j), d_i + d_j + d_k (i<j<k) and
/// d1 + ... + d6. Labels are 1-based, e.g. "d1-d2", "d1+d2+d3".
struct RootForm {
  std::string label;
  std::array<int, 6> coefficients{};
  Rational value;
};

/// The 36 root forms, in the order: 15 differences (lexicographic pairs),
/// 20 triple sums (lexicographic triples), the total sum.
std::vector<RootForm> root_forms(const std::array<Rational, 6>& d);

/// Six moduli off every E6 hyperplane. Construction validates admissibility
/// and reports the first vanishing root form by label.
class ModuliVector {
 public:
  explicit ModuliVector(std::array<Rational, 6> d);
  static ModuliVector from_string(std::string_view comma_separated);

  /// 0-based access: operator[](0) is d1.
  const Rational& operator[](std::size_t i) const { return d_[i]; }
  const std::array<Rational, 6>& values() const { return d_; }

  friend bool operator==(const ModuliVector&, const ModuliVector&) = default;

 private:
  std::array<Rational, 6> d_;
};

/// The first root form that vanishes, or an empty string when admissible.
std::string violated_root_form(const std::array<Rational, 6>& d);

/// Coefficients a..h of the octanomial, stored unnormalized.
struct OctanomialCoefficients {
  std::array<Rational, 8> values;

  const Rational& a() const { return values[0]; }
  const Rational& b() const { return values[1]; }
  const Rational& c() const { return values[2]; }
  const Rational& d() const { return values[3]; }
  const Rational& e() const { return values[4]; }
  const Rational& f() const { return values[5]; }
  const Rational& g() const { return values[6]; }
  const Rational& h() const { return values[7]; }

  Rational sum() const;
  friend bool operator==(const OctanomialCoefficients&, const OctanomialCoefficients&) = default;
};

inline constexpr std::array<char, 8> kCoefficientNames = {'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'};

/// The support of the octanomial: exponent vectors in (x,y,z,w) of the
/// monomials xyz, xyw, xzw, yzw, x^2y, xy^2, z^2w, zw^2 carrying a..h.
inline constexpr std::array<std::array<int, 4>, 8> kSupport = {{
    {1, 1, 1, 0},
    {1, 1, 0, 1},
    {1, 0, 1, 1},
    {0, 1, 1, 1},
    {2, 1, 0, 0},
    {1, 2, 0, 0},
    {0, 0, 2, 1},
    {0, 0, 1, 2},
}};

OctanomialCoefficients coefficients_from_moduli(const ModuliVector& d);

/// Same formulas without the admissibility check; used to probe the
/// vanishing loci of the coefficients.
OctanomialCoefficients coefficients_from_values(const std::array<Rational, 6>& d);

/// The linear form F_ij through the i-th and j-th base points (1-based).
SparsePoly line_through_base_points(const std::array<Rational, 6>& d, int i, int j);

/// Ternary cubics in X, Y, Z vanishing at the six base points:
/// x = F12 F34 F56, y = F13 F25 F46, z = F12 F35 F46, w = F13 F24 F56.
struct PlaneCubicBasis {
  SparsePoly x, y, z, w;
  std::array<const SparsePoly*, 4> as_array() const { return {&x, &y, &z, &w}; }
};

PlaneCubicBasis plane_cubic_basis(const ModuliVector& d);

const std::vector<std::string>& plane_variables();  // X, Y, Z
const std::vector<std::string>& space_variables();  // x, y, z, w

/// Homogeneous quaternary cubic in x, y, z, w.
struct QuaternaryCubic {
  SparsePoly poly;
};

QuaternaryCubic octanomial_cubic(const OctanomialCoefficients& c);

/// The cubic composed with the plane parametrization, as a form of degree 9
/// in X, Y, Z.
SparsePoly parametrization_residual(const PlaneCubicBasis& basis, const QuaternaryCubic& cubic);

/// True iff composing the basis with the octanomial of d is identically zero.
bool verify_parametrization(const ModuliVector& d);

/// The basis cubics evaluated at a plane point: the map P^2 --> P^3.
std::array<Rational, 4> evaluate_basis(const PlaneCubicBasis& basis,
                                       std::span<const Rational, 3> point);

}  // namespace octodp
