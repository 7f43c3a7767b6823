#include "doctest.h"

#include "octodp/error.hpp"
#include "octodp/lines.hpp"
#include "octodp/matrix.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace octodp;

namespace {

using Vec4 = std::array<Rational, 4>;

ModuliVector ints(std::array<long, 6> v) {
  std::array<Rational, 6> d;
  for (int i = 0; i < 6; ++i) d[i] = v[i];
  return ModuliVector(d);
}

ModuliVector random_moduli(std::mt19937_64& rng, int bound = 40) {
  std::uniform_int_distribution<int> u(-bound, bound);
  for (;;) {
    std::array<Rational, 6> d;
    for (auto& x : d) x = u(rng);
    if (violated_root_form(d).empty()) return ModuliVector(d);
  }
}

// u ^ v in the order (01, 02, 03, 12, 13, 23)
Plucker wedge(const Vec4& u, const Vec4& v) {
  Plucker p;
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kPluckerPairs[k];
    p[k] = u[i] * v[j] - u[j] * v[i];
  }
  return p;
}

// line as the intersection of the planes x_i = 0 and l . x = 0 (l_i ignored)
Plucker plane_line(int i, const Vec4& l) {
  std::vector<int> rest;
  for (int k = 0; k < 4; ++k)
    if (k != i) rest.push_back(k);
  // two independent solutions of l . x = 0 in the remaining coordinates
  std::vector<Vec4> sols;
  for (int a = 0; a < 3 && sols.size() < 2; ++a)
    for (int b = a + 1; b < 3 && sols.size() < 2; ++b) {
      Vec4 x{};
      x[rest[a]] = l[rest[b]];
      x[rest[b]] = -l[rest[a]];
      if (x != Vec4{} && (sols.empty() || !proportional(sols[0], x))) sols.push_back(x);
    }
  REQUIRE(sols.size() == 2);
  return wedge(sols[0], sols[1]);
}

Vec4 unit(int i) {
  Vec4 v{};
  v[i] = 1;
  return v;
}

// Leibniz expansion
Rational det4(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
  const std::array<const Vec4*, 4> rows = {&a, &b, &c, &d};
  std::array<int, 4> s = {0, 1, 2, 3};
  Rational total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += s[i] > s[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < 4; ++i) term *= (*rows[i])[s[i]];
    total += term;
  } while (std::next_permutation(s.begin(), s.end()));
  return total;
}

// intersection numbers from the labels, written out from scratch
bool meet_oracle(const LineLabel& l, const LineLabel& m) {
  auto ends = [](const LineLabel& x) { return std::set<int>{x.i, x.j}; };
  using K = LineKind;
  if (l == m) return false;
  if (l.kind == K::E && m.kind == K::E) return false;
  if (l.kind == K::G && m.kind == K::G) return false;
  if (l.kind == K::E && m.kind == K::G) return l.i != m.i;
  if (l.kind == K::G && m.kind == K::E) return l.i != m.i;
  if (l.kind == K::F && m.kind == K::F) {
    for (int x : ends(l))
      if (ends(m).contains(x)) return false;
    return true;
  }
  const LineLabel& f = l.kind == K::F ? l : m;
  const LineLabel& o = l.kind == K::F ? m : l;
  return f.i == o.i || f.j == o.i;
}

}  // namespace

TEST_CASE("labels") {
  CHECK(to_string(LineLabel::f(1, 2)) == "F12");
  CHECK(LineLabel::parse("G6") == LineLabel::g(6));
  CHECK(LineLabel::parse("F46").index() == LineLabel::f(4, 6).index());
  for (int k = 0; k < 27; ++k) CHECK(LineLabel::from_index(k).index() == k);
  CHECK(LineLabel::from_index(0) == LineLabel::e(1));
  CHECK(LineLabel::from_index(6) == LineLabel::f(1, 2));
  CHECK(LineLabel::from_index(26) == LineLabel::g(6));
  CHECK(LineLabel::parse("F21") == LineLabel::f(1, 2));
  CHECK_THROWS_AS(LineLabel::parse("F22"), PreconditionError);
  CHECK_THROWS_AS(LineLabel::parse("E7"), PreconditionError);
  int total = 0;
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b) {
      const auto l = LineLabel::from_index(a), m = LineLabel::from_index(b);
      if (a != b) CHECK(labels_meet(l, m) == meet_oracle(l, m));
      total += a < b && meet_oracle(l, m);
    }
  CHECK(total == 135);
}

TEST_CASE("Plücker basics") {
  const Vec4 u{1, 2, 3, 4}, v{0, 1, -1, 2};
  const auto p = plucker_from_span(u, v);
  CHECK(proportional(p, wedge(u, v)));
  CHECK(plucker_relation(p) == 0);
  const auto c = canonical_plucker(Plucker{2, 4, -6, 0, 8, 10});
  CHECK(c == Plucker{1, 2, -3, 0, 4, 5});
  CHECK(canonical_plucker(Plucker{0, Rational(-1) / 2, Rational(1) / 3, 0, 0, 0}) == Plucker{0, 3, -2, 0, 0, 0});
  // pairing vanishes iff the spans are dependent
  const Vec4 a{1, 0, 0, 0}, b{0, 1, 0, 0}, e{0, 0, 1, 0}, f{0, 0, 0, 1};
  CHECK(plucker_pairing(wedge(a, b), wedge(e, f)) != 0);
  CHECK(plucker_pairing(wedge(a, b), wedge(b, e)) == 0);
  const auto span = line_span(p);
  CHECK(proportional(wedge(span[0], span[1]), p));
  const auto x = intersection_point(wedge(a, b), wedge(b, e));
  REQUIRE(x);
  CHECK(*x == ProjPoint({0, 1, 0, 0}));
  CHECK_FALSE(intersection_point(wedge(a, b), wedge(e, f)));
  CHECK(to_string(ProjPoint({0, 2, -4, 6})) == "(0:1:-2:3)");
}

TEST_CASE("base points lie on the cuspidal cubic") {
  const auto pts = base_points(ints({2, 3, 5, 7, 11, 13}));
  for (const auto& p : pts) {
    const auto& x = p.coords();
    CHECK(x[0] * x[0] * x[2] == x[1] * x[1] * x[1]);
  }
}

TEST_CASE("census at d = (0,...,5)") {
  const auto d = ints({0, 1, 2, 3, 4, 5});
  const auto census = full_census(d);
  const auto& c = census.coefficients;
  REQUIRE(census.lines.size() == 27);
  CHECK(census.incident_pair_count() == 135);
  CHECK(is_schlafli_graph(census.incidence));

  // coordinate lines
  CHECK(proportional(census.line(LineLabel::f(1, 2)).p, wedge(unit(1), unit(3))));
  CHECK(proportional(census.line(LineLabel::f(1, 3)).p, wedge(unit(0), unit(2))));
  CHECK(proportional(census.line(LineLabel::f(4, 6)).p, wedge(unit(0), unit(3))));
  CHECK(proportional(census.line(LineLabel::f(5, 6)).p, wedge(unit(1), unit(2))));
  // lines in coordinate planes
  CHECK(proportional(census.line(LineLabel::f(3, 4)).p, plane_line(0, {0, c.d(), c.g(), c.h()})));
  CHECK(proportional(census.line(LineLabel::f(2, 5)).p, plane_line(1, {c.c(), 0, c.g(), c.h()})));
  CHECK(proportional(census.line(LineLabel::f(3, 5)).p, plane_line(2, {c.e(), c.f(), 0, c.b()})));
  CHECK(proportional(census.line(LineLabel::f(2, 4)).p, plane_line(3, {c.e(), c.f(), c.a(), 0})));

  // the middle line: maximal minors of [[a,b,e,f],[g,h,c,d]]
  const std::array<std::array<Rational, 4>, 2> m = {{{c.a(), c.b(), c.e(), c.f()}, {c.g(), c.h(), c.c(), c.d()}}};
  Plucker minors;
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kPluckerPairs[k];
    minors[k] = m[0][i] * m[1][j] - m[0][j] * m[1][i];
  }
  // minor of columns (i, j) against the printed coordinates
  const Plucker printed = {-minors[0], -minors[4], minors[2], minors[3], -minors[1], -minors[5]};
  CHECK(printed == middle_line_formula(c));
  CHECK(proportional(census.line(LineLabel::f(1, 6)).p, printed));

  // coordinate-line incidences
  const std::array<LineLabel, 4> coord = {LineLabel::f(1, 2), LineLabel::f(1, 3), LineLabel::f(4, 6),
                                          LineLabel::f(5, 6)};
  auto hits = [&](const LineLabel& l) {
    std::set<int> out;
    for (int k = 0; k < 4; ++k)
      if (plucker_pairing(census.line(l).p, census.line(coord[k]).p) == 0 && !(l == coord[k])) out.insert(k);
    return out;
  };
  for (const auto& l : {LineLabel::e(1), LineLabel::f(4, 5), LineLabel::g(1)}) CHECK(hits(l) == std::set<int>{0, 1});
  for (const auto& l : {LineLabel::e(6), LineLabel::f(2, 3), LineLabel::g(6)}) CHECK(hits(l) == std::set<int>{2, 3});
  for (const auto& l : {LineLabel::e(2), LineLabel::f(3, 6), LineLabel::g(2)}) CHECK(hits(l) == std::set<int>{0});
  for (const auto& l : {LineLabel::e(3), LineLabel::f(2, 6), LineLabel::g(3)}) CHECK(hits(l) == std::set<int>{1});
  for (const auto& l : {LineLabel::e(4), LineLabel::f(1, 5), LineLabel::g(4)}) CHECK(hits(l) == std::set<int>{2});
  for (const auto& l : {LineLabel::e(5), LineLabel::f(1, 4), LineLabel::g(5)}) CHECK(hits(l) == std::set<int>{3});
  CHECK(hits(LineLabel::f(1, 6)).empty());

  // the two triplets have the stated zero coordinates
  for (const auto& l : {LineLabel::e(1), LineLabel::f(4, 5), LineLabel::g(1)}) {
    CHECK(census.line(l).p[1] == 0);
    CHECK(census.line(l).p[4] == 0);
  }
  for (const auto& l : {LineLabel::e(6), LineLabel::f(2, 3), LineLabel::g(6)}) {
    CHECK(census.line(l).p[2] == 0);
    CHECK(census.line(l).p[3] == 0);
  }
}

TEST_CASE("census geometry against direct oracles") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 6; ++round) {
    const auto d = random_moduli(rng);
    const auto census = full_census(d);
    const auto cubic = octanomial_cubic(census.coefficients);
    std::set<Plucker> distinct;
    std::vector<std::array<Vec4, 2>> spans;
    for (const auto& l : census.lines) {
      CHECK(l.p == canonical_plucker(l.p));
      CHECK(plucker_relation(l.p) == 0);
      distinct.insert(l.p);
      const auto s = line_span(l.p);
      spans.push_back(s);
      // the restriction of the cubic to the line vanishes at 5 points
      for (int t = -2; t <= 2; ++t) {
        Vec4 x;
        for (int k = 0; k < 4; ++k) x[k] = s[0][k] + Rational(t) * s[1][k];
        CHECK(cubic.poly.evaluate(x) == 0);
      }
    }
    CHECK(distinct.size() == 27);
    // incidence by a 4x4 determinant of the spanning points
    int pairs = 0;
    for (int i = 0; i < 27; ++i)
      for (int j = i + 1; j < 27; ++j) {
        const bool meet = det4(spans[i][0], spans[i][1], spans[j][0], spans[j][1]) == 0;
        CHECK(meet == census.incidence[i][j]);
        CHECK(meet == meet_oracle(census.lines[i].label, census.lines[j].label));
        pairs += meet;
        if (!meet) continue;
        const auto& x = census.intersections.at({i, j}).coords();
        // x lies on both lines: rank of {span, x} stays 2
        for (int other : {i, j}) {
          RatMatrix m(3, 4);
          for (int k = 0; k < 4; ++k) {
            m(0, k) = spans[other][0][k];
            m(1, k) = spans[other][1][k];
            m(2, k) = x[k];
          }
          CHECK(rank(m) == 2);
        }
        CHECK(cubic.poly.evaluate(x) == 0);
      }
    CHECK(pairs == 135);
    // every line meets exactly 10 others; two skew lines have 5 common neighbours
    for (int i = 0; i < 27; ++i) {
      int deg = 0;
      for (int j = 0; j < 27; ++j) deg += census.incidence[i][j];
      CHECK(deg == 10);
    }
  }
}

TEST_CASE("the Schläfli graph test rejects perturbed graphs") {
  const auto census = full_census(ints({0, 1, 2, 3, 4, 5}));
  auto adj = census.incidence;
  CHECK(is_schlafli_graph(adj));
  std::swap(adj[0][6], adj[0][12]);
  std::swap(adj[6][0], adj[12][0]);
  CHECK_FALSE(is_schlafli_graph(adj));
}

TEST_CASE("line_on_surface") {
  const auto d = ints({2, -3, 5, 7, -11, 13});
  const auto cubic = octanomial_cubic(coefficients_from_moduli(d));
  CHECK(line_on_surface(wedge(unit(1), unit(3)), cubic));  // x = z = 0
  CHECK_FALSE(line_on_surface(wedge(unit(0), unit(1)), cubic));  // z = w = 0
}

TEST_CASE("triplet formulas") {
  const auto d = ints({0, 1, 2, 3, 4, 5});
  const auto f = triplet_formula_p02_p13(d.values());
  CHECK(f[0] == 8);  // (-1)(-2)(-2)(-2)
  CHECK(f[2] == 24);
  CHECK(f[1] == 0);
  CHECK(f[4] == 0);
  CHECK(plucker_relation(f) == 0);
  const auto g = triplet_formula_p03_p12(d.values());
  CHECK(g[2] == 0);
  CHECK(g[3] == 0);
  CHECK(plucker_relation(g) == 0);

  const auto census = full_census(d);
  const auto match = triplet_formula_check(d, census);
  CHECK(match.ok());
  MESSAGE("formula lines: " << (match.p02_p13 ? to_string(*match.p02_p13) : "-") << ", "
                            << (match.p03_p12 ? to_string(*match.p03_p12) : "-"));

  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) CHECK(triplet_formula_check(random_moduli(rng)));
}

TEST_CASE("rational moduli") {
  const auto d = ModuliVector::from_string("1/2,3,-7,11,2,-5/3");
  const auto census = full_census(d);
  CHECK(is_schlafli_graph(census.incidence));
  CHECK(triplet_formula_check(d, census).ok());
}
