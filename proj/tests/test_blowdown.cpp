#include "doctest.h"

#include "octodp/blowdown.hpp"
#include "octodp/error.hpp"

#include <algorithm>
#include <random>

using namespace octodp;

namespace {

ModuliVector ints(std::array<long, 6> v) {
  std::array<Rational, 6> d;
  for (int i = 0; i < 6; ++i) d[i] = v[i];
  return ModuliVector(d);
}

ModuliVector random_moduli(std::mt19937_64& rng, int bound = 30) {
  std::uniform_int_distribution<int> u(-bound, bound);
  for (;;) {
    std::array<Rational, 6> d;
    for (auto& x : d) x = u(rng);
    if (violated_root_form(d).empty()) return ModuliVector(d);
  }
}

std::vector<std::array<Rational, 4>> points_on(const Plucker& l, int n) {
  const auto s = line_span(l);
  std::vector<std::array<Rational, 4>> out;
  for (int t = 0; t < n; ++t) {
    std::array<Rational, 4> x;
    for (int k = 0; k < 4; ++k) x[k] = s[0][k] + Rational(t) * s[1][k];
    out.push_back(x);
  }
  return out;
}

bool same_point(const ProjPoint& a, const std::vector<Rational>& b) { return proportional(a.coords(), b); }

}  // namespace

TEST_CASE("plane spanned by two meeting lines") {
  const auto census = full_census(ints({0, 1, 2, 3, 4, 5}));
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i == j) continue;
      const auto h = plane_span(census.line(LineLabel::g(i)).p, census.line(LineLabel::e(j)).p);
      for (const auto& q : points_on(census.line(LineLabel::g(i)).p, 3)) CHECK(evaluate(h, q) == 0);
      for (const auto& q : points_on(census.line(LineLabel::e(j)).p, 3)) CHECK(evaluate(h, q) == 0);
      // primitive integers, first nonzero positive
      Integer g = 0;
      for (const auto& x : h) {
        CHECK(x.get_den() == 1);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
      }
      CHECK(g == 1);
      const auto first = std::find_if(h.begin(), h.end(), [](const Rational& x) { return x != 0; });
      REQUIRE(first != h.end());
      CHECK(*first > 0);
    }
  CHECK_THROWS_AS(plane_span(census.line(LineLabel::e(1)).p, census.line(LineLabel::e(2)).p), PreconditionError);
  CHECK_THROWS_AS(plane_span(census.line(LineLabel::e(1)).p, census.line(LineLabel::e(1)).p), PreconditionError);
}

TEST_CASE("blow-down normalization") {
  const auto census = full_census(ints({0, 1, 2, 3, 4, 5}));
  const BlowdownMap pi(census);
  CHECK(pi.contracted_image(1) == ProjPoint({1, 0, 0}));
  CHECK(pi.contracted_image(2) == ProjPoint({0, 1, 0}));
  CHECK(pi.contracted_image(3) == ProjPoint({0, 0, 1}));
  CHECK(pi.contracted_image(4) == ProjPoint({1, 1, 1}));
  // E5 and E6 land off the coordinate lines of the frame
  for (int i : {5, 6}) {
    const auto& x = pi.contracted_image(i).coords();
    CHECK(x[0] != 0);
    CHECK(x[1] != 0);
    CHECK(x[2] != 0);
  }
}

TEST_CASE("charts agree on overlaps") {
  const auto d = ints({2, -3, 5, 7, -11, 13});
  const auto census = full_census(d);
  const BlowdownMap pi(census);
  const auto basis = plane_cubic_basis(d);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> u(-15, 15);
  int overlaps = 0;
  for (int k = 0; k < 30; ++k) {
    const std::array<Rational, 3> q = {Rational(u(rng)), Rational(u(rng)), Rational(u(rng))};
    const auto x = evaluate_basis(basis, q);
    if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; })) continue;
    std::vector<ProjPoint> images;
    for (int c = 0; c < 3; ++c)
      if (auto img = pi.chart(c, x)) images.push_back(*img);
    REQUIRE_FALSE(images.empty());
    for (const auto& img : images) CHECK(img == images.front());
    overlaps += images.size() > 1;
  }
  CHECK(overlaps > 20);
}

TEST_CASE("round trip at d = (0,...,5)") {
  const auto d = ints({0, 1, 2, 3, 4, 5});
  const auto r = roundtrip_check(d);
  CHECK(r.projective);
  CHECK(r.configuration);
  // independent check of T(p_i) ~ pi(E_i)
  const auto pts = base_points(d);
  for (int i = 0; i < 6; ++i) {
    std::vector<Rational> image(3, 0);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) image[a] += r.transform(a, b) * pts[i].coords()[b];
    CHECK(same_point(r.recovered[i], image));
  }
  CHECK(r.recovered[0] == ProjPoint({1, 0, 0}));
  CHECK(r.recovered[3] == ProjPoint({1, 1, 1}));
}

TEST_CASE("round trip on random moduli") {
  std::mt19937_64 rng(50);
  for (int k = 0; k < 20; ++k) {
    const auto d = random_moduli(rng);
    CAPTURE(k);
    CHECK(roundtrip_check(d).ok());
  }
  CHECK(roundtrip_check(ModuliVector::from_string("1/2,3,-7,11,2,-5/3")).ok());
}

TEST_CASE("projective transform") {
  const std::array<std::array<Rational, 3>, 4> std_frame = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};
  const std::array<std::array<Rational, 3>, 4> target = {{{2, 1, 0}, {0, 3, 1}, {1, 0, 5}, {1, 2, 2}}};
  const auto t = projective_transform(std_frame, target);
  REQUIRE(t);
  for (int k = 0; k < 4; ++k) {
    std::vector<Rational> image(3, 0);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) image[a] += (*t)(a, b) * std_frame[k][b];
    CHECK(proportional(image, std::vector<Rational>(target[k].begin(), target[k].end())));
  }
  // three collinear points are not a frame
  const std::array<std::array<Rational, 3>, 4> collinear = {{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}}};
  CHECK_FALSE(projective_transform(collinear, target));
}

TEST_CASE("moduli from a cuspidal frame") {
  const auto d = ints({2, -3, 5, 7, -11, 13});
  const auto pts = base_points(d);
  const CuspidalFrame standard{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto f = frame_cubic(standard);
  for (const auto& p : pts) CHECK(f.evaluate(p.coords()) == 0);
  CHECK(moduli_from_frame(standard, pts) == d.values());

  // (ell0, ell1) -> (mu ell0, lambda ell1), ell2 -> lambda^3/mu^2 ell2
  const Rational mu = 3, lambda = -2;
  const CuspidalFrame scaled{{mu, 0, 0}, {0, lambda, 0}, {0, 0, lambda * lambda * lambda / (mu * mu)}};
  const auto e = moduli_from_frame(scaled, pts);
  for (int i = 0; i < 6; ++i) CHECK(e[i] == d[i] * lambda / mu);

  auto with_cusp = pts;
  with_cusp[2] = ProjPoint({0, 0, 1});
  CHECK_THROWS_AS(moduli_from_frame(standard, with_cusp), PreconditionError);
  auto off = pts;
  off[4] = ProjPoint({1, 1, 2});
  CHECK_THROWS_AS(moduli_from_frame(standard, off), PreconditionError);
}
