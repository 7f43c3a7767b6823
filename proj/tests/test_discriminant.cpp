#include "doctest.h"

#include "octodp/discriminant.hpp"
#include "octodp/error.hpp"
#include "octodp/matrix.hpp"
#include "octodp/triangulation.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace octodp;

namespace {

const std::vector<std::string>& V() { return space_variables(); }

SparsePoly linear(const std::array<int, 4>& c) {
  SparsePoly p(V());
  for (int j = 0; j < 4; ++j) {
    Exponent e(4, 0);
    e[j] = 1;
    p.add_term(e, c[j]);
  }
  return p;
}

SparsePoly square(std::size_t i, const Rational& c = 1) {
  Exponent e(4, 0);
  e[i] = 2;
  return SparsePoly::monomial(V(), e, c);
}

OctanomialCoefficients random_coefficients(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> u(-bound, bound);
  OctanomialCoefficients c;
  for (auto& v : c.values) v = u(rng);
  return c;
}

OctanomialCoefficients nonzero_coefficients(std::mt19937_64& rng) {
  for (;;) {
    auto c = random_coefficients(rng);
    if (full_discriminant(c).is_smooth) return c;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("A-discriminant shape") {
  const auto& delta = a_discriminant();
  CHECK(delta.size() == 49);
  CHECK(delta.is_homogeneous(8));
  CHECK(delta.coefficient({0, 0, 0, 0, 2, 2, 2, 2}) == -27);
}

TEST_CASE("embedded data matches the data file") {
  // independent reader: whitespace tokens, '#' comments
  const std::string text = read_file(std::string(OCTODP_SOURCE_DIR) + "/data/delta_a.txt");
  std::istringstream in(text);
  std::string line;
  std::set<std::vector<long>> exponents;
  long coefficient_sum = 0;
  int terms = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long c;
    std::vector<long> e(8);
    ls >> c;
    for (auto& x : e) ls >> x;
    REQUIRE(ls);
    coefficient_sum += c;
    exponents.insert(e);
    ++terms;
    CHECK(a_discriminant().coefficient(Exponent(e.begin(), e.end())) == c);
  }
  CHECK(terms == 49);
  CHECK(exponents.size() == 49);
  const std::vector<Rational> ones(8, 1);
  CHECK(a_discriminant().evaluate(ones) == coefficient_sum);
  CHECK(parse_a_discriminant(format_a_discriminant(a_discriminant())) == a_discriminant());
}

TEST_CASE("data file parser rejects malformed input") {
  CHECK_THROWS_AS(parse_a_discriminant("1 2 3\n"), PreconditionError);
  CHECK_THROWS_AS(parse_a_discriminant("1 1 0 0 0 0 0 0 0\n2 1 0 0 0 0 0 0 0\n"), PreconditionError);
  CHECK_THROWS_AS(parse_a_discriminant("x 1 0 0 0 0 0 0 0\n"), PreconditionError);
}

TEST_CASE("vanishing factors are named") {
  std::mt19937_64 rng(1);
  auto c = nonzero_coefficients(rng);
  c.values[4] = 0;
  auto r = full_discriminant(c);
  CHECK(r.full_discriminant == 0);
  CHECK_FALSE(r.is_smooth);
  CHECK(r.vanishing_factor == std::optional<std::string>("e"));

  OctanomialCoefficients b;
  b.values = {2, 1, 3, 5, 1, 7, 6, 11};  // ac = eg = 6
  r = full_discriminant(b);
  CHECK(r.full_discriminant == 0);
  CHECK(r.vanishing_factor == std::optional<std::string>("ac-eg"));
}

TEST_CASE("resultant normalization and a common zero") {
  CHECK(resultant_oracle({square(0), square(1), square(2), square(3)}) == 1);
  CHECK(resultant_oracle({square(0), SparsePoly(V()), square(2), square(3)}) == 0);
  // Res(a x^2, b y^2, c z^2, d w^2) = (abcd)^8
  CHECK(resultant_oracle({square(0, 2), square(1, 3), square(2, -1), square(3, 5)}) == pow(Rational(-30), 8));
}

TEST_CASE("resultant of products of linear forms") {
  // Res is multiplicative in each argument and equals det on linear forms,
  // so Res(L1 M1, ..., L4 M4) is the product of the 16 determinants.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> u(-3, 3);
  for (int k = 0; k < 4; ++k) {
    std::array<std::array<std::array<int, 4>, 2>, 4> forms;
    for (auto& pair : forms)
      for (auto& f : pair)
        for (auto& x : f) x = u(rng);
    std::array<SparsePoly, 4> q;
    for (int i = 0; i < 4; ++i) q[i] = linear(forms[i][0]) * linear(forms[i][1]);
    Rational expected = 1;
    for (int mask = 0; mask < 16; ++mask) {
      RatMatrix m(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = forms[i][(mask >> i) & 1][j];
      expected *= det_exact(m);
    }
    CHECK(resultant_oracle(q) == expected);
  }
}

TEST_CASE("resultant transforms with det^24 under a change of coordinates") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> u(-2, 2);
  const auto c = nonzero_coefficients(rng);
  const auto f = octanomial_cubic(c);
  RatMatrix t(4, 4);
  do {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t(i, j) = u(rng);
  } while (det_exact(t) == 0);
  std::map<std::string, SparsePoly> as;
  for (int i = 0; i < 4; ++i) {
    SparsePoly p(V());
    for (int j = 0; j < 4; ++j) {
      Exponent e(4, 0);
      e[j] = 1;
      p.add_term(e, t(i, j));
    }
    as[V()[i]] = p;
  }
  const QuaternaryCubic g{substitute(f.poly, as)};
  CHECK(resultant_oracle(gradient(g)) == resultant_oracle(gradient(f)) * pow(det_exact(t), 24));
}

TEST_CASE("resultant of the gradient is a fixed multiple of the factored discriminant") {
  // A constant ratio over random coefficient vectors certifies every term of
  // Delta_A. The ratio itself comes out as -1/2^16, not 1 (see README).
  std::mt19937_64 rng(2024);
  std::set<Rational> ratios;
  int nonzero = 0;
  for (int k = 0; k < 12; ++k) {
    const auto c = random_coefficients(rng);
    const Rational res = resultant_oracle(gradient(octanomial_cubic(c)));
    const Rational prod = full_discriminant(c).full_discriminant;
    CHECK((res == 0) == (prod == 0));
    if (prod != 0) {
      ratios.insert(res / prod);
      ++nonzero;
    }
  }
  CHECK(nonzero >= 8);
  REQUIRE(ratios.size() == 1);
  CHECK(*ratios.begin() == Rational(-1, 65536));
}

TEST_CASE("a single flipped sign in Delta_A breaks proportionality") {
  SparsePoly corrupt = a_discriminant();
  const auto first = *corrupt.terms().begin();
  corrupt.add_term(first.first, Rational(-2) * first.second);  // c -> -c
  REQUIRE(corrupt.size() == 49);
  std::mt19937_64 rng(77);
  std::set<Rational> ratios;
  for (int k = 0; k < 6; ++k) {
    const auto c = nonzero_coefficients(rng);
    ratios.insert(resultant_oracle(gradient(octanomial_cubic(c))) / full_discriminant(c, corrupt).full_discriminant);
  }
  CHECK(ratios.size() > 1);
}

TEST_CASE("principal A-determinant") {
  std::mt19937_64 rng(3);
  auto c = nonzero_coefficients(rng);
  const Rational ea = principal_a_determinant(c);
  const Rational full = full_discriminant(c).full_discriminant;
  const auto& v = c.values;
  const Rational binomials = (v[0] * v[2] - v[4] * v[6]) * (v[0] * v[3] - v[5] * v[6]) *
                             (v[1] * v[2] - v[4] * v[7]) * (v[1] * v[3] - v[5] * v[7]);
  CHECK(full * v[0] * v[1] * v[2] * v[3] == Rational(discriminant_constant()) * binomials * ea);
  c.values[0] = 0;
  CHECK(principal_a_determinant(c) == 0);

  const auto poly = principal_a_determinant_poly();
  CHECK(poly.is_homogeneous(28));
  for (int k = 0; k < 5; ++k) {
    const auto r = random_coefficients(rng);
    CHECK(poly.evaluate(r.values) == principal_a_determinant(r));
  }
}

TEST_CASE("lowest monomials of E_A are the GKZ vectors") {
  const auto poly = principal_a_determinant_poly();
  const auto row1 = weights_from_ints({4, 1, 7, 2, 9, 5, 9, 9});
  CHECK(lowest_monomial(poly, row1) == Exponent{5, 5, 5, 5, 2, 2, 2, 2});
  // every regular triangulation, from its own witness height
  for (const auto& rt : enumerate_regular_triangulations()) {
    const auto e = lowest_monomial(poly, rt.witness);
    const auto gkz = gkz_vector(rt.triangulation);
    CHECK(e == Exponent(gkz.begin(), gkz.end()));
  }
  const WeightVector flat{};
  CHECK_THROWS_AS(lowest_monomial(poly, flat), PreconditionError);
}

TEST_CASE("Delta_A is invariant up to sign under the support symmetries") {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 5; ++k) {
    const auto c = random_coefficients(rng);
    const Rational base = a_discriminant().evaluate(c.values);
    for (const auto& pi : symmetry_group()) {
      std::vector<Rational> moved(8);
      for (int i = 0; i < 8; ++i) moved[pi[i]] = c.values[i];
      const Rational value = a_discriminant().evaluate(moved);
      CHECK((value == base || value == -base));
    }
  }
}

TEST_CASE("surfaces from admissible moduli are smooth") {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> u(-50, 50);
  int count = 0;
  while (count < 100) {
    std::array<Rational, 6> d;
    for (auto& x : d) x = u(rng);
    if (!violated_root_form(d).empty()) continue;
    ++count;
    CHECK(full_discriminant(coefficients_from_moduli(ModuliVector(d))).is_smooth);
  }
}
