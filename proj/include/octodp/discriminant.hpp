#pragma once

#include "octodp/octanomial.hpp"
#include "octodp/sparse_poly.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace octodp {

/// Variables a..h of the coefficient ring.
const std::vector<std::string>& coefficient_variables();

/// Parses the A-discriminant data format: '#' comments, then one term per
/// line as "coefficient e_a e_b ... e_h". Throws PreconditionError on
/// malformed lines or repeated exponents.
SparsePoly parse_a_discriminant(std::string_view text);
std::string format_a_discriminant(const SparsePoly& delta);
SparsePoly load_a_discriminant(const std::filesystem::path& path);

/// The built-in 49-term A-discriminant of degree 8 (embedded from
/// data/delta_a.txt at build time).
const SparsePoly& a_discriminant();

/// 2^16 * 3^5, the constant in front of the factored discriminant.
Integer discriminant_constant();

struct DiscriminantReport {
  Rational full_discriminant;
  Rational a_disc_value;
  Rational principal_value;
  bool is_smooth = false;
  /// Label of the first vanishing factor: "e", "f", "g", "h", "ac-eg",
  /// "ad-fg", "bc-eh", "bd-fh" or "Delta_A".
  std::optional<std::string> vanishing_factor;
};

/// Evaluates 2^16 3^5 e^2 f^2 g^2 h^2 (ac-eg)^2 (ad-fg)^2 (bc-eh)^2 (bd-fh)^2 Delta_A.
DiscriminantReport full_discriminant(const OctanomialCoefficients& c,
                                     const SparsePoly& delta = a_discriminant());

/// E_A = abcd e^2 f^2 g^2 h^2 (ac-eg)(ad-fg)(bc-eh)(bd-fh) Delta_A.
Rational principal_a_determinant(const OctanomialCoefficients& c,
                                 const SparsePoly& delta = a_discriminant());
/// The same product expanded as a polynomial in a..h (degree 28).
SparsePoly principal_a_determinant_poly(const SparsePoly& delta = a_discriminant());

/// Exponent of the unique term minimizing the weight functional. Throws
/// PreconditionError when the minimum is attained more than once.
Exponent lowest_monomial(const SparsePoly& f, std::span<const Rational> weights);

/// The four partial derivatives of a quaternary form.
std::array<SparsePoly, 4> gradient(const QuaternaryCubic& cubic);

/// How the resultant was obtained.
struct ResultantTrace {
  /// Priority order of the variables used for the Macaulay row assignment,
  /// or empty when the perturbation fallback was needed.
  std::vector<int> variable_order;
  bool perturbed = false;
};

/// Resultant of four quaternary quadrics, normalized so that
/// Res(x^2, y^2, z^2, w^2) = 1, computed as the quotient of the degree-5
/// Macaulay determinant (56 monomials) by its extraneous minor. When the
/// minor vanishes for every variable order, the system is perturbed to
/// f_i + t x_i^2 and the value at t = 0 is interpolated from 33 nonsingular
/// samples.
Rational resultant_oracle(const std::array<SparsePoly, 4>& quadrics,
                          ResultantTrace* trace = nullptr);

}  // namespace octodp
