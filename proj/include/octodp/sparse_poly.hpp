#pragma once

#include "octodp/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace octodp {

using Exponent = std::vector<int>;

/// Graded lexicographic order, larger first: total degree decides, ties are
/// broken lexicographically on the exponent vector.
struct GrlexDescending {
  bool operator()(const Exponent& lhs, const Exponent& rhs) const;
};

/// Sparse multivariate polynomial with exact rational coefficients over an
/// ordered list of variable names. Zero coefficients are never stored.
class SparsePoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexDescending>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> variables);

  static SparsePoly constant(std::vector<std::string> variables, const Rational& c);
  static SparsePoly variable(std::vector<std::string> variables, std::size_t index);
  static SparsePoly monomial(std::vector<std::string> variables, Exponent exponent,
                             const Rational& c = 1);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous(int degree) const;

  Rational coefficient(const Exponent& exponent) const;
  void add_term(const Exponent& exponent, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;
  SparsePoly derivative(std::size_t index) const;

  SparsePoly& operator+=(const SparsePoly& rhs);
  SparsePoly& operator-=(const SparsePoly& rhs);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
  friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
  friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);
  friend SparsePoly operator*(SparsePoly lhs, const Rational& c) { return lhs *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly rhs) { return rhs *= c; }
  friend SparsePoly operator-(SparsePoly p) { return p *= Rational(-1); }
  friend bool operator==(const SparsePoly& lhs, const SparsePoly& rhs);

 private:
  void require_same_variables(const SparsePoly& other) const;

  std::vector<std::string> variables_;
  TermMap terms_;
};

SparsePoly pow(const SparsePoly& base, unsigned exponent);

/// Replaces every variable of f by the assigned polynomial. All assigned
/// polynomials must share one variable list; the result lives there.
/// Throws PreconditionError when a variable of f has no assignment.
SparsePoly substitute(const SparsePoly& f, const std::map<std::string, SparsePoly>& assignment);

/// Human-readable form, terms in descending grlex order, e.g. "2*x^2*y - z".
std::string to_string(const SparsePoly& f);

}  // namespace octodp
