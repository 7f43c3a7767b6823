#include "doctest.h"

#include "octodp/error.hpp"
#include "octodp/octanomial.hpp"
#include "octodp/triangulation.hpp"

#include <algorithm>
#include <random>

using namespace octodp;

namespace {

std::array<Rational, 6> ints(std::array<long, 6> v) {
  std::array<Rational, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = v[i];
  return out;
}

std::array<Rational, 6> random_admissible(std::mt19937_64& rng, int bound = 50) {
  std::uniform_int_distribution<int> u(-bound, bound);
  for (;;) {
    std::array<Rational, 6> d;
    for (auto& x : d) x = u(rng);
    if (violated_root_form(d).empty()) return d;
  }
}

}  // namespace

TEST_CASE("root forms") {
  const auto forms = root_forms(ints({0, 1, 2, 3, 4, 5}));
  REQUIRE(forms.size() == 36);
  CHECK(forms[0].label == "d1-d2");
  CHECK(forms[0].value == -1);  // so d2 - d1 = 1
  CHECK(forms.back().value == 15);
  CHECK(forms[15].label == "d1+d2+d3");
  CHECK(std::count_if(forms.begin(), forms.end(), [](const RootForm& f) { return f.value == 0; }) == 0);

  const auto bad = root_forms(ints({0, 1, 3, 3, 4, 5}));
  const auto it = std::find_if(bad.begin(), bad.end(), [](const RootForm& f) { return f.label == "d3-d4"; });
  REQUIRE(it != bad.end());
  CHECK(it->value == 0);
}

TEST_CASE("admissibility is checked at construction") {
  CHECK_THROWS_WITH_AS(ModuliVector(ints({1, 1, 2, 3, 4, 5})), doctest::Contains("d1-d2"), PreconditionError);
  CHECK_THROWS_WITH_AS(ModuliVector(ints({0, 1, -1, 5, 7, 11})), doctest::Contains("d1+d2+d3"), PreconditionError);
  CHECK_THROWS_AS(ModuliVector::from_string("1,2,3"), PreconditionError);
  CHECK(ModuliVector::from_string("0, 1, 2, 3, 4, 5")[5] == 5);
  CHECK(ModuliVector::from_string("1/2,3,-7,11,2,-5/3")[0] == Rational(1) / 2);
}

TEST_CASE("coefficient e at d = (0,...,5)") {
  const auto d = ints({0, 1, 2, 3, 4, 5});
  const auto c = coefficients_from_moduli(ModuliVector(d));
  const Rational e = -(d[0] + d[2] + d[4]) * (d[1] + d[3] + d[5]) * (d[0] - d[4]) * (d[1] - d[5]) * (d[2] - d[3]);
  CHECK(e == 864);
  CHECK(c.e() == 864);
  CHECK(c.sum() == 0);
  CHECK(coefficients_from_values(ints({0, 1, 3, 3, 4, 5})).e() == 0);
}

TEST_CASE("coefficients sum to zero") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) CHECK(coefficients_from_moduli(ModuliVector(random_admissible(rng))).sum() == 0);
}

TEST_CASE("plane cubic basis") {
  const ModuliVector d(ints({0, 1, 2, 3, 4, 5}));
  const auto basis = plane_cubic_basis(d);
  for (const SparsePoly* f : basis.as_array()) {
    CHECK(f->is_homogeneous(3));
    for (int i = 0; i < 6; ++i) {
      const std::vector<Rational> p = {1, d[i], d[i] * d[i] * d[i]};
      CHECK(f->evaluate(p) == 0);
    }
  }
  // F12 vanishes at p1 and p2 only among the six
  const auto f12 = line_through_base_points(d.values(), 1, 2);
  for (int i = 0; i < 6; ++i) {
    const std::vector<Rational> p = {1, d[i], d[i] * d[i] * d[i]};
    CHECK((f12.evaluate(p) == 0) == (i < 2));
  }
}

TEST_CASE("octanomial support") {
  OctanomialCoefficients c;
  for (int i = 0; i < 8; ++i) c.values[i] = i + 1;
  const auto f = octanomial_cubic(c);
  CHECK(f.poly.size() == 8);
  CHECK(f.poly.is_homogeneous(3));
  for (int i = 0; i < 8; ++i) {
    const Exponent e(kSupport[i].begin(), kSupport[i].end());
    CHECK(f.poly.coefficient(e) == i + 1);
  }
  CHECK(octanomial_cubic(OctanomialCoefficients{}).poly.is_zero());
  CHECK(octanomial_cubic(coefficients_from_moduli(ModuliVector(ints({0, 1, 2, 3, 4, 5})))).poly.size() == 8);
}

TEST_CASE("parametrization identity") {
  const ModuliVector d(ints({0, 1, 2, 3, 4, 5}));
  CHECK(verify_parametrization(d));

  // perturbing a leaves a nonzero residual
  auto c = coefficients_from_moduli(d);
  c.values[0] += 1;
  CHECK_FALSE(parametrization_residual(plane_cubic_basis(d), octanomial_cubic(c)).is_zero());

  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) CHECK(verify_parametrization(ModuliVector(random_admissible(rng))));
  // rational moduli too
  CHECK(verify_parametrization(ModuliVector::from_string("1/2,3,-7,11,2,-5/3")));
}

TEST_CASE("support symmetries are induced by moduli permutations") {
  // For each point permutation pi of the support there is one sigma in S6
  // with coeffs(d o sigma)[pi(k)] = +-coeffs(d)[k] for all admissible d.
  std::mt19937_64 rng(4);
  std::vector<std::array<Rational, 6>> samples;
  for (int k = 0; k < 3; ++k) samples.push_back(random_admissible(rng, 30));
  for (const auto& pi : symmetry_group()) {
    int matches = 0;
    std::array<int, 6> s = {0, 1, 2, 3, 4, 5};
    do {
      bool all = true;
      for (const auto& d0 : samples) {
        std::array<Rational, 6> d;
        for (int i = 0; i < 6; ++i) d[i] = d0[s[i]];
        const auto c0 = coefficients_from_values(d0).values;
        const auto c = coefficients_from_values(d).values;
        const Rational lambda = c[pi[0]] / c0[0];
        bool ok = lambda == 1 || lambda == -1;
        for (int k = 0; k < 8 && ok; ++k) ok = c[pi[k]] == lambda * c0[k];
        all = all && ok;
      }
      matches += all;
    } while (std::next_permutation(s.begin(), s.end()));
    CHECK(matches == 1);
  }
}

TEST_CASE("evaluate_basis lands on the surface") {
  const ModuliVector d(ints({2, -3, 5, 7, -11, 13}));
  const auto basis = plane_cubic_basis(d);
  const auto cubic = octanomial_cubic(coefficients_from_moduli(d));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> u(-20, 20);
  for (int k = 0; k < 20; ++k) {
    const std::array<Rational, 3> q = {Rational(u(rng)), Rational(u(rng)), Rational(u(rng))};
    const auto x = evaluate_basis(basis, q);
    CHECK(cubic.poly.evaluate(x) == 0);
  }
}
