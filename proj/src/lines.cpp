#include "octodp/lines.hpp"

#include "octodp/error.hpp"
#include "octodp/matrix.hpp"

#include <algorithm>
#include <set>

namespace octodp {

namespace {

const std::vector<std::string>& binary_variables() {
  static const std::vector<std::string> v = {"s", "t"};
  return v;
}

// Coefficients of s^(n-k) t^k, k = 0..n.
using BinaryForm = std::vector<Rational>;

BinaryForm to_binary(const SparsePoly& f, int degree) {
  BinaryForm out(degree + 1);
  for (const auto& [e, c] : f.terms()) {
    if (e[0] + e[1] != degree) throw InvariantError("binary form is not homogeneous");
    out[e[1]] = c;
  }
  return out;
}

// Exact quotient of f by (alpha s + beta t); nullopt when it does not divide.
std::optional<BinaryForm> divide_linear(const BinaryForm& f, const Rational& alpha,
                                        const Rational& beta) {
  const std::size_t n = f.size() - 1;
  BinaryForm q(n);
  BinaryForm r = f;
  if (alpha != 0) {
    for (std::size_t k = 0; k < n; ++k) {
      q[k] = r[k] / alpha;
      r[k] = 0;
      r[k + 1] -= q[k] * beta;
    }
    if (r[n] != 0) return std::nullopt;
  } else {
    if (beta == 0) throw InvariantError("division by the zero linear form");
    // f = t * q: the s^n coefficient must vanish.
    if (r[0] != 0) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) q[k] = r[k + 1] / beta;
  }
  return q;
}

// Composes the four plane cubics with a map (s,t) -> P^2 of the given degree.
std::array<BinaryForm, 4> compose(const PlaneCubicBasis& basis, const std::array<SparsePoly, 3>& map,
                                  int degree) {
  const std::map<std::string, SparsePoly> assignment = {{"X", map[0]}, {"Y", map[1]}, {"Z", map[2]}};
  std::array<BinaryForm, 4> out;
  const auto cubics = basis.as_array();
  for (int k = 0; k < 4; ++k) out[k] = to_binary(substitute(*cubics[k], assignment), 3 * degree);
  return out;
}

// The four residual linear forms lambda_k = l_k0 s + l_k1 t span the image line.
Plucker line_from_residuals(const std::array<BinaryForm, 4>& residual) {
  std::array<Rational, 4> u, v;
  for (int k = 0; k < 4; ++k) {
    if (residual[k].size() != 2) throw InvariantError("residual is not linear");
    u[k] = residual[k][0];
    v[k] = residual[k][1];
  }
  const Plucker p = plucker_from_span(u, v);
  if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; })) {
    throw InvariantError("residual forms do not span a line");
  }
  return canonical_plucker(p);
}

SparsePoly binary_linear(const Rational& cs, const Rational& ct) {
  const auto& vars = binary_variables();
  return cs * SparsePoly::variable(vars, 0) + ct * SparsePoly::variable(vars, 1);
}

std::array<Rational, 3> plane_point(const Rational& d) { return {Rational(1), d, d * d * d}; }

// Conic coefficients on X^2, XY, XZ, Y^2, YZ, Z^2.
using Conic = std::array<Rational, 6>;

Rational conic_bilinear(const Conic& q, const std::array<Rational, 3>& u,
                        const std::array<Rational, 3>& v) {
  return q[0] * u[0] * v[0] + q[3] * u[1] * v[1] + q[5] * u[2] * v[2] +
         q[1] * (u[0] * v[1] + u[1] * v[0]) / 2 + q[2] * (u[0] * v[2] + u[2] * v[0]) / 2 +
         q[4] * (u[1] * v[2] + u[2] * v[1]) / 2;
}

std::optional<Plucker> conic_line_via(const ModuliVector& d, const PlaneCubicBasis& basis, int i,
                                      int pivot) {
  std::vector<int> others;
  for (int k = 1; k <= 6; ++k) {
    if (k != i) others.push_back(k);
  }
  RatMatrix m(5, 6);
  for (int r = 0; r < 5; ++r) {
    const auto p = plane_point(d[others[r] - 1]);
    const std::array<Rational, 6> mono = {p[0] * p[0], p[0] * p[1], p[0] * p[2],
                                          p[1] * p[1], p[1] * p[2], p[2] * p[2]};
    for (int c = 0; c < 6; ++c) m(r, c) = mono[c];
  }
  const auto kernel = null_space(m);
  if (kernel.size() != 1) return std::nullopt;
  Conic q;
  std::copy(kernel[0].begin(), kernel[0].end(), q.begin());

  const auto r = plane_point(d[pivot - 1]);
  // Directions q(s,t) = s u0 + t u1 on a line missing r.
  std::array<std::array<Rational, 3>, 2> dir{};
  bool found = false;
  for (int a = 0; a < 3 && !found; ++a) {
    for (int b = a + 1; b < 3 && !found; ++b) {
      std::array<Rational, 3> ea{}, eb{};
      ea[a] = 1;
      eb[b] = 1;
      const RatMatrix frame = RatMatrix::from_columns(
          {{r[0], r[1], r[2]}, {ea[0], ea[1], ea[2]}, {eb[0], eb[1], eb[2]}});
      if (det_exact(frame) != 0) {
        dir = {ea, eb};
        found = true;
      }
    }
  }
  // P(q) = Q(q) r - 2 B(q, r) q is the second intersection of the conic with
  // the line through r in direction q.
  const auto& vars = binary_variables();
  const SparsePoly s = SparsePoly::variable(vars, 0), t = SparsePoly::variable(vars, 1);
  std::array<SparsePoly, 3> qdir;
  for (int c = 0; c < 3; ++c) qdir[c] = dir[0][c] * s + dir[1][c] * t;
  SparsePoly qq(vars);
  {
    const std::array<std::pair<int, int>, 6> mono = {{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};
    for (int k = 0; k < 6; ++k) qq += q[k] * (qdir[mono[k].first] * qdir[mono[k].second]);
  }
  const SparsePoly bqr = conic_bilinear(q, dir[0], r) * s + conic_bilinear(q, dir[1], r) * t;
  std::array<SparsePoly, 3> map;
  for (int c = 0; c < 3; ++c) map[c] = r[c] * qq - Rational(2) * (bqr * qdir[c]);
  if (std::all_of(map.begin(), map.end(), [](const SparsePoly& f) { return f.is_zero(); })) {
    return std::nullopt;
  }

  // Parameters of the five base points: the tangent direction at r, and the
  // direction towards each other point.
  std::vector<std::pair<Rational, Rational>> factors;
  factors.push_back({conic_bilinear(q, dir[0], r), conic_bilinear(q, dir[1], r)});
  const RatMatrix frame = RatMatrix::from_columns(
      {{r[0], r[1], r[2]}, {dir[0][0], dir[0][1], dir[0][2]}, {dir[1][0], dir[1][1], dir[1][2]}});
  for (int k : others) {
    if (k == pivot) continue;
    const auto p = plane_point(d[k - 1]);
    const auto coords = solve(frame, {p[0], p[1], p[2]});
    if (!coords) return std::nullopt;
    // The direction is (s_k : t_k) = (coords[1] : coords[2]).
    factors.push_back({(*coords)[2], -(*coords)[1]});
  }

  auto forms = compose(basis, map, 2);
  for (auto& f : forms) {
    for (const auto& [alpha, beta] : factors) {
      if (alpha == 0 && beta == 0) return std::nullopt;
      auto quotient = divide_linear(f, alpha, beta);
      if (!quotient) return std::nullopt;
      f = std::move(*quotient);
    }
  }
  return line_from_residuals(forms);
}

bool kills_line(const Plucker& l, const std::array<Rational, 4>& form) {
  for (const auto& pt : line_span(l)) {
    Rational s;
    for (int k = 0; k < 4; ++k) s += form[k] * pt[k];
    if (s != 0) return false;
  }
  return true;
}

Plucker coordinate_line(int nonzero) {
  Plucker p;
  p[nonzero] = 1;
  return p;
}

}  // namespace

ProjPoint::ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  const auto it = std::find_if(coords_.begin(), coords_.end(), [](const Rational& x) { return x != 0; });
  if (it == coords_.end()) throw PreconditionError("projective point with all coordinates zero");
  const Rational scale = *it;
  for (auto& x : coords_) x /= scale;
}

std::string to_string(const ProjPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) out += ":";
    out += to_string(p.coords()[i]);
  }
  return out + ")";
}

LineLabel LineLabel::e(int i) {
  if (i < 1 || i > 6) throw PreconditionError("line index out of range");
  return {LineKind::E, i, 0};
}

LineLabel LineLabel::f(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 6 || i == j) throw PreconditionError("F needs two distinct indices in 1..6");
  return {LineKind::F, i, j};
}

LineLabel LineLabel::g(int i) {
  if (i < 1 || i > 6) throw PreconditionError("line index out of range");
  return {LineKind::G, i, 0};
}

LineLabel LineLabel::parse(std::string_view text) {
  auto digit = [&](std::size_t k) {
    if (k >= text.size() || text[k] < '1' || text[k] > '6') {
      throw PreconditionError("bad line label '" + std::string(text) + "'");
    }
    return text[k] - '0';
  };
  if (text.size() == 2 && text[0] == 'E') return e(digit(1));
  if (text.size() == 2 && text[0] == 'G') return g(digit(1));
  if (text.size() == 3 && text[0] == 'F') return f(digit(1), digit(2));
  throw PreconditionError("bad line label '" + std::string(text) + "'");
}

int LineLabel::index() const {
  switch (kind) {
    case LineKind::E:
      return i - 1;
    case LineKind::G:
      return 21 + i - 1;
    case LineKind::F: {
      int k = 6;
      for (int a = 1; a <= 6; ++a) {
        for (int b = a + 1; b <= 6; ++b, ++k) {
          if (a == i && b == j) return k;
        }
      }
    }
  }
  throw InvariantError("invalid line label");
}

LineLabel LineLabel::from_index(int index) {
  if (index < 0 || index >= 27) throw PreconditionError("line index out of range");
  if (index < 6) return e(index + 1);
  if (index >= 21) return g(index - 20);
  int k = 6;
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b, ++k) {
      if (k == index) return f(a, b);
    }
  }
  throw InvariantError("unreachable");
}

std::string to_string(const LineLabel& label) {
  switch (label.kind) {
    case LineKind::E:
      return "E" + std::to_string(label.i);
    case LineKind::F:
      return "F" + std::to_string(label.i) + std::to_string(label.j);
    case LineKind::G:
      return "G" + std::to_string(label.i);
  }
  return "?";
}

bool labels_meet(const LineLabel& l, const LineLabel& m) {
  if (l == m) return false;
  auto in_pair = [](int k, const LineLabel& f) { return k == f.i || k == f.j; };
  using K = LineKind;
  if (l.kind == K::E && m.kind == K::E) return false;
  if (l.kind == K::G && m.kind == K::G) return false;
  if ((l.kind == K::E && m.kind == K::G) || (l.kind == K::G && m.kind == K::E)) return l.i != m.i;
  if (l.kind == K::F && m.kind == K::F) {
    return !in_pair(l.i, m) && !in_pair(l.j, m);
  }
  // One F and one E or G: incident iff the index lies in the pair.
  const LineLabel& f = l.kind == K::F ? l : m;
  const LineLabel& other = l.kind == K::F ? m : l;
  return in_pair(other.i, f);
}

Plucker plucker_from_span(std::span<const Rational, 4> u, std::span<const Rational, 4> v) {
  Plucker p;
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kPluckerPairs[k];
    p[k] = u[i] * v[j] - u[j] * v[i];
  }
  return p;
}

Plucker canonical_plucker(const Plucker& p) {
  const auto v = primitive_integer_vector(p);
  Plucker out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

Rational plucker_relation(const Plucker& p) { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

Rational plucker_pairing(const Plucker& p, const Plucker& q) {
  return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0];
}

std::array<std::array<Rational, 4>, 2> line_span(const Plucker& p) {
  // Skew matrix M with M_ij = p_ij; its columns lie on the line.
  std::array<std::array<Rational, 4>, 4> m{};
  for (int k = 0; k < 6; ++k) {
    const auto [i, j] = kPluckerPairs[k];
    m[i][j] = p[k];
    m[j][i] = -p[k];
  }
  std::vector<std::array<Rational, 4>> cols;
  for (int c = 0; c < 4; ++c) {
    std::array<Rational, 4> col;
    for (int r = 0; r < 4; ++r) col[r] = m[r][c];
    if (std::all_of(col.begin(), col.end(), [](const Rational& x) { return x == 0; })) continue;
    if (cols.empty()) {
      cols.push_back(col);
      continue;
    }
    const Plucker test = plucker_from_span(cols[0], col);
    if (std::any_of(test.begin(), test.end(), [](const Rational& x) { return x != 0; })) {
      return {cols[0], col};
    }
  }
  throw PreconditionError("Plücker vector does not describe a line");
}

std::array<ProjPoint, 6> base_points(const ModuliVector& d) {
  auto pt = [&](int i) {
    const auto p = plane_point(d[i]);
    return ProjPoint({p[0], p[1], p[2]});
  };
  return {pt(0), pt(1), pt(2), pt(3), pt(4), pt(5)};
}

PluckerLine exceptional_line(const ModuliVector& d, int i) {
  if (i < 1 || i > 6) throw PreconditionError("exceptional_line: index out of range");
  const auto basis = plane_cubic_basis(d);
  const auto p = plane_point(d[i - 1]);
  const auto cubics = basis.as_array();
  RatMatrix jac(4, 3);
  for (int k = 0; k < 4; ++k) {
    for (int c = 0; c < 3; ++c) jac(k, c) = cubics[k]->derivative(c).evaluate(p);
  }
  if (rank(jac) != 2) throw InvariantError("Jacobian at a base point does not have rank 2");
  std::vector<std::array<Rational, 4>> cols;
  for (int c = 0; c < 3; ++c) {
    const auto col = jac.column(c);
    cols.push_back({col[0], col[1], col[2], col[3]});
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const Plucker pl = plucker_from_span(cols[a], cols[b]);
      if (std::any_of(pl.begin(), pl.end(), [](const Rational& x) { return x != 0; })) {
        return {LineLabel::e(i), canonical_plucker(pl)};
      }
    }
  }
  throw InvariantError("Jacobian columns do not span a line");
}

PluckerLine connecting_line(const ModuliVector& d, int i, int j) {
  const LineLabel label = LineLabel::f(i, j);
  const auto basis = plane_cubic_basis(d);
  const auto pi = plane_point(d[label.i - 1]);
  const auto pj = plane_point(d[label.j - 1]);
  std::array<SparsePoly, 3> map;
  for (int c = 0; c < 3; ++c) map[c] = binary_linear(pi[c], pj[c]);
  auto forms = compose(basis, map, 1);
  // Each restriction vanishes at s = 0 (p_j) and t = 0 (p_i).
  for (auto& f : forms) {
    auto q = divide_linear(f, 1, 0);
    if (q) q = divide_linear(*q, 0, 1);
    if (!q) throw InvariantError("restriction to " + to_string(label) + " is not divisible by st");
    f = std::move(*q);
  }
  return {label, line_from_residuals(forms)};
}

PluckerLine conic_line(const ModuliVector& d, int i) {
  if (i < 1 || i > 6) throw PreconditionError("conic_line: index out of range");
  const auto basis = plane_cubic_basis(d);
  for (int pivot = 1; pivot <= 6; ++pivot) {
    if (pivot == i) continue;
    if (auto p = conic_line_via(d, basis, i, pivot)) return {LineLabel::g(i), *p};
  }
  throw InvariantError("every conic parametrization degenerates for G" + std::to_string(i));
}

std::optional<ProjPoint> intersection_point(const Plucker& l, const Plucker& m) {
  const auto a = line_span(l);
  const auto b = line_span(m);
  RatMatrix sys(4, 4);
  for (int r = 0; r < 4; ++r) {
    sys(r, 0) = a[0][r];
    sys(r, 1) = a[1][r];
    sys(r, 2) = -b[0][r];
    sys(r, 3) = -b[1][r];
  }
  const auto kernel = null_space(sys);
  if (kernel.size() != 1) return std::nullopt;
  std::vector<Rational> pt(4);
  for (int r = 0; r < 4; ++r) pt[r] = kernel[0][0] * a[0][r] + kernel[0][1] * a[1][r];
  return ProjPoint(std::move(pt));
}

bool line_on_surface(const Plucker& l, const QuaternaryCubic& cubic) {
  const auto span = line_span(l);
  for (int k = 0; k < 4; ++k) {
    std::array<Rational, 4> pt;
    for (int r = 0; r < 4; ++r) pt[r] = span[0][r] + Rational(k) * span[1][r];
    if (k == 3) pt = span[1];
    if (cubic.poly.evaluate(pt) != 0) return false;
  }
  return true;
}

bool is_schlafli_graph(const std::array<std::array<bool, 27>, 27>& adj) {
  for (int i = 0; i < 27; ++i) {
    if (adj[i][i]) return false;
    int degree = 0;
    for (int j = 0; j < 27; ++j) {
      if (adj[i][j] != adj[j][i]) return false;
      degree += adj[i][j];
    }
    if (degree != 10) return false;
    for (int j = i + 1; j < 27; ++j) {
      int common = 0;
      for (int k = 0; k < 27; ++k) common += adj[i][k] && adj[j][k];
      if (common != (adj[i][j] ? 1 : 5)) return false;
    }
  }
  return true;
}

bool proportional(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) return false;
  const bool uz = std::all_of(u.begin(), u.end(), [](const Rational& x) { return x == 0; });
  const bool vz = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  if (uz || vz) return uz && vz;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

Plucker middle_line_formula(const OctanomialCoefficients& c) {
  return {c.b() * c.g() - c.a() * c.h(), c.f() * c.h() - c.b() * c.d(), c.a() * c.d() - c.f() * c.g(),
          c.b() * c.c() - c.e() * c.h(), c.e() * c.g() - c.a() * c.c(), c.c() * c.f() - c.d() * c.e()};
}

Plucker triplet_formula_p02_p13(const std::array<Rational, 6>& d) {
  const auto& [d1, d2, d3, d4, d5, d6] = d;
  (void)d1;
  Plucker p;
  p[0] = (d5 - d6) * (d4 - d6) * (d3 - d5) * (d2 - d4);
  p[2] = (d4 - d6) * (d4 - d6) * (d3 - d5) * (d2 - d5);
  p[3] = -(d5 - d6) * (d5 - d6) * (d3 - d4) * (d2 - d4);
  p[5] = (d5 - d6) * (d4 - d6) * (d3 - d4) * (d2 - d5);
  return p;
}

Plucker triplet_formula_p03_p12(const std::array<Rational, 6>& d) {
  const auto& [d1, d2, d3, d4, d5, d6] = d;
  (void)d6;
  const Rational s345 = d3 + d4 + d5, s245 = d2 + d4 + d5, s134 = d1 + d3 + d4, s125 = d1 + d2 + d5,
                 s124 = d1 + d2 + d4, s135 = d1 + d3 + d5;
  Plucker p;
  p[0] = s345 * s245 * s134 * s125;
  p[1] = s345 * s345 * s125 * s124;
  p[4] = -s245 * s245 * s135 * s134;
  p[5] = -s345 * s245 * s135 * s124;
  return p;
}

TripletMatch triplet_formula_check(const ModuliVector& d, const LineCensus& census) {
  TripletMatch match;
  const auto first = triplet_formula_p02_p13(d.values());
  for (const auto& label : {LineLabel::e(1), LineLabel::f(4, 5), LineLabel::g(1)}) {
    if (proportional(census.line(label).p, first)) match.p02_p13 = label;
  }
  const auto second = triplet_formula_p03_p12(d.values());
  for (const auto& label : {LineLabel::e(6), LineLabel::f(2, 3), LineLabel::g(6)}) {
    if (proportional(census.line(label).p, second)) match.p03_p12 = label;
  }
  return match;
}

bool triplet_formula_check(const ModuliVector& d) { return triplet_formula_check(d, full_census(d)).ok(); }

LineCensus full_census(const ModuliVector& d) {
  LineCensus census;
  census.coefficients = coefficients_from_moduli(d);
  const auto cubic = octanomial_cubic(census.coefficients);
  for (int k = 0; k < 27; ++k) {
    const auto label = LineLabel::from_index(k);
    switch (label.kind) {
      case LineKind::E:
        census.lines.push_back(exceptional_line(d, label.i));
        break;
      case LineKind::F:
        census.lines.push_back(connecting_line(d, label.i, label.j));
        break;
      case LineKind::G:
        census.lines.push_back(conic_line(d, label.i));
        break;
    }
  }

  auto fail = [](const std::string& what) { throw InvariantError("line census: " + what); };
  std::set<Plucker> distinct;
  for (const auto& l : census.lines) {
    const std::string name = to_string(l.label);
    if (plucker_relation(l.p) != 0) fail(name + " violates the Plücker relation");
    if (!line_on_surface(l.p, cubic)) fail(name + " does not lie on the surface");
    distinct.insert(l.p);
  }
  if (distinct.size() != 27) fail("lines are not pairwise distinct");

  for (int i = 0; i < 27; ++i) {
    for (int j = i + 1; j < 27; ++j) {
      const bool meet = plucker_pairing(census.lines[i].p, census.lines[j].p) == 0;
      const auto& li = census.lines[i].label;
      const auto& lj = census.lines[j].label;
      if (meet != labels_meet(li, lj)) {
        fail(to_string(li) + " and " + to_string(lj) + (meet ? " meet" : " are skew") +
             " against the labeling");
      }
      census.incidence[i][j] = census.incidence[j][i] = meet;
      if (!meet) continue;
      auto pt = intersection_point(census.lines[i].p, census.lines[j].p);
      if (!pt) fail("no intersection point for " + to_string(li) + ", " + to_string(lj));
      if (cubic.poly.evaluate(pt->coords()) != 0) fail("intersection point off the surface");
      census.intersections.emplace(std::make_pair(i, j), std::move(*pt));
    }
  }
  if (!is_schlafli_graph(census.incidence)) fail("incidence graph is not the Schläfli graph");
  if (census.intersections.size() != 135) fail("expected 135 intersection points");

  // Coordinate lines: {x=z=0}, {y=w=0}, {y=z=0}, {x=w=0}.
  const std::array<std::pair<LineLabel, int>, 4> coordinate = {{
      {LineLabel::f(1, 2), 4}, {LineLabel::f(1, 3), 1}, {LineLabel::f(4, 6), 2}, {LineLabel::f(5, 6), 3}}};
  for (const auto& [label, nonzero] : coordinate) {
    if (census.line(label).p != coordinate_line(nonzero)) {
      fail(to_string(label) + " is not the expected coordinate line");
    }
  }
  const auto& c = census.coefficients;
  const std::array<std::pair<LineLabel, std::array<std::array<Rational, 4>, 2>>, 4> planar = {{
      {LineLabel::f(3, 4), {{{1, 0, 0, 0}, {0, c.d(), c.g(), c.h()}}}},
      {LineLabel::f(2, 5), {{{0, 1, 0, 0}, {c.c(), 0, c.g(), c.h()}}}},
      {LineLabel::f(3, 5), {{{0, 0, 1, 0}, {c.e(), c.f(), 0, c.b()}}}},
      {LineLabel::f(2, 4), {{{0, 0, 0, 1}, {c.e(), c.f(), c.a(), 0}}}},
  }};
  for (const auto& [label, forms] : planar) {
    for (const auto& form : forms) {
      if (!kills_line(census.line(label).p, form)) fail(to_string(label) + " misses its coordinate plane line equations");
    }
  }

  // Which coordinate lines each remaining line meets.
  auto met = [&](const LineLabel& l) {
    std::vector<int> out;
    for (const auto& [label, nonzero] : coordinate) {
      (void)nonzero;
      if (census.incidence[l.index()][label.index()]) out.push_back(label.index());
    }
    return out;
  };
  const auto f12 = LineLabel::f(1, 2).index(), f13 = LineLabel::f(1, 3).index(),
             f46 = LineLabel::f(4, 6).index(), f56 = LineLabel::f(5, 6).index();
  const std::array<std::pair<std::array<LineLabel, 3>, std::vector<int>>, 6> triples = {{
      {{LineLabel::e(1), LineLabel::f(4, 5), LineLabel::g(1)}, {f12, f13}},
      {{LineLabel::e(6), LineLabel::f(2, 3), LineLabel::g(6)}, {f46, f56}},
      {{LineLabel::e(2), LineLabel::f(3, 6), LineLabel::g(2)}, {f12}},
      {{LineLabel::e(3), LineLabel::f(2, 6), LineLabel::g(3)}, {f13}},
      {{LineLabel::e(4), LineLabel::f(1, 5), LineLabel::g(4)}, {f46}},
      {{LineLabel::e(5), LineLabel::f(1, 4), LineLabel::g(5)}, {f56}},
  }};
  for (const auto& [members, expected] : triples) {
    for (const auto& l : members) {
      auto got = met(l);
      std::sort(got.begin(), got.end());
      auto want = expected;
      std::sort(want.begin(), want.end());
      if (got != want) fail(to_string(l) + " meets the wrong coordinate lines");
    }
  }
  const auto f16 = LineLabel::f(1, 6);
  if (!met(f16).empty()) fail("F16 meets a coordinate line");
  if (!proportional(census.line(f16).p, middle_line_formula(c))) fail("F16 differs from the minors formula");
  return census;
}

}  // namespace octodp
