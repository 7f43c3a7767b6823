#include "octodp/octanomial.hpp"

#include "octodp/error.hpp"

namespace octodp {

std::vector<RootForm> root_forms(const std::array<Rational, 6>& d) {
  std::vector<RootForm> forms;
  forms.reserve(36);
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      RootForm f;
      f.label = "d" + std::to_string(i + 1) + "-d" + std::to_string(j + 1);
      f.coefficients[i] = 1;
      f.coefficients[j] = -1;
      f.value = d[i] - d[j];
      forms.push_back(std::move(f));
    }
  }
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      for (int k = j + 1; k < 6; ++k) {
        RootForm f;
        f.label = "d" + std::to_string(i + 1) + "+d" + std::to_string(j + 1) + "+d" +
                  std::to_string(k + 1);
        f.coefficients[i] = f.coefficients[j] = f.coefficients[k] = 1;
        f.value = d[i] + d[j] + d[k];
        forms.push_back(std::move(f));
      }
    }
  }
  RootForm total;
  total.label = "d1+d2+d3+d4+d5+d6";
  total.coefficients.fill(1);
  for (const auto& v : d) total.value += v;
  forms.push_back(std::move(total));
  return forms;
}

std::string violated_root_form(const std::array<Rational, 6>& d) {
  for (const auto& f : root_forms(d)) {
    if (f.value == 0) return f.label;
  }
  return {};
}

ModuliVector::ModuliVector(std::array<Rational, 6> d) : d_(std::move(d)) {
  const auto bad = violated_root_form(d_);
  if (!bad.empty()) {
    throw PreconditionError("inadmissible moduli: root form " + bad + " vanishes");
  }
}

ModuliVector ModuliVector::from_string(std::string_view comma_separated) {
  const auto values = parse_rational_list(comma_separated);
  if (values.size() != 6) {
    throw PreconditionError("expected six moduli, got " + std::to_string(values.size()));
  }
  std::array<Rational, 6> d;
  std::copy(values.begin(), values.end(), d.begin());
  return ModuliVector(d);
}

Rational OctanomialCoefficients::sum() const {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

namespace {

// The D4-invariant quintic shared by a, b, c, d, written in terms of the
// three pairs {p, q}, {r, s}, {t, u} it is built from.
Rational d4_quintic(const Rational& p, const Rational& q, const Rational& r, const Rational& s,
                    const Rational& t, const Rational& u) {
  auto sq = [](const Rational& v) { return v * v; };
  return p * q * r * s * (p + q - r - s) + r * s * t * u * (r + s - t - u) +
         t * u * p * q * (t + u - p - q) + t * u * (t + u) * (sq(p) + sq(q) - sq(r) - sq(s)) +
         p * q * (p + q) * (sq(r) + sq(s) - sq(t) - sq(u)) +
         r * s * (r + s) * (sq(t) + sq(u) - sq(p) - sq(q));
}

}  // namespace

OctanomialCoefficients coefficients_from_values(const std::array<Rational, 6>& d) {
  const auto& d1 = d[0];
  const auto& d2 = d[1];
  const auto& d3 = d[2];
  const auto& d4 = d[3];
  const auto& d5 = d[4];
  const auto& d6 = d[5];
  OctanomialCoefficients c;
  c.values[0] = d4_quintic(d1, d3, d2, d4, d5, d6);
  c.values[1] = d4_quintic(d1, d2, d3, d5, d4, d6);
  c.values[2] = d4_quintic(d1, d3, d2, d5, d4, d6);
  c.values[3] = d4_quintic(d1, d2, d3, d4, d5, d6);
  c.values[4] = -(d1 + d3 + d5) * (d2 + d4 + d6) * (d1 - d5) * (d2 - d6) * (d3 - d4);
  c.values[5] = -(d1 + d2 + d4) * (d3 + d5 + d6) * (d1 - d4) * (d2 - d5) * (d3 - d6);
  c.values[6] = -(d1 + d3 + d4) * (d2 + d5 + d6) * (d1 - d4) * (d2 - d6) * (d3 - d5);
  c.values[7] = -(d1 + d2 + d5) * (d3 + d4 + d6) * (d1 - d5) * (d3 - d6) * (d2 - d4);
  return c;
}

OctanomialCoefficients coefficients_from_moduli(const ModuliVector& d) {
  return coefficients_from_values(d.values());
}

const std::vector<std::string>& plane_variables() {
  static const std::vector<std::string> vars = {"X", "Y", "Z"};
  return vars;
}

const std::vector<std::string>& space_variables() {
  static const std::vector<std::string> vars = {"x", "y", "z", "w"};
  return vars;
}

SparsePoly line_through_base_points(const std::array<Rational, 6>& d, int i, int j) {
  const Rational& di = d[static_cast<std::size_t>(i - 1)];
  const Rational& dj = d[static_cast<std::size_t>(j - 1)];
  SparsePoly f(plane_variables());
  f.add_term({1, 0, 0}, di * dj * (di + dj));
  f.add_term({0, 1, 0}, -(di * di + di * dj + dj * dj));
  f.add_term({0, 0, 1}, 1);
  return f;
}

PlaneCubicBasis plane_cubic_basis(const ModuliVector& md) {
  const auto& d = md.values();
  auto F = [&](int i, int j) { return line_through_base_points(d, i, j); };
  return PlaneCubicBasis{
      F(1, 2) * F(3, 4) * F(5, 6),
      F(1, 3) * F(2, 5) * F(4, 6),
      F(1, 2) * F(3, 5) * F(4, 6),
      F(1, 3) * F(2, 4) * F(5, 6),
  };
}

QuaternaryCubic octanomial_cubic(const OctanomialCoefficients& c) {
  SparsePoly f(space_variables());
  for (std::size_t k = 0; k < kSupport.size(); ++k) {
    f.add_term(Exponent(kSupport[k].begin(), kSupport[k].end()), c.values[k]);
  }
  return {std::move(f)};
}

SparsePoly parametrization_residual(const PlaneCubicBasis& basis, const QuaternaryCubic& cubic) {
  const std::map<std::string, SparsePoly> assignment = {
      {"x", basis.x}, {"y", basis.y}, {"z", basis.z}, {"w", basis.w}};
  return substitute(cubic.poly, assignment);
}

bool verify_parametrization(const ModuliVector& d) {
  return parametrization_residual(plane_cubic_basis(d),
                                  octanomial_cubic(coefficients_from_moduli(d)))
      .is_zero();
}

std::array<Rational, 4> evaluate_basis(const PlaneCubicBasis& basis,
                                       std::span<const Rational, 3> point) {
  return {basis.x.evaluate(point), basis.y.evaluate(point), basis.z.evaluate(point),
          basis.w.evaluate(point)};
}

}  // namespace octodp
