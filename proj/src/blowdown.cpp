#include "octodp/blowdown.hpp"

#include "octodp/error.hpp"
#include "octodp/matrix.hpp"

#include <algorithm>

namespace octodp {

namespace {

bool all_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::array<Rational, 3> transform_point(const RatMatrix& t, const std::array<Rational, 3>& x) {
  std::array<Rational, 3> out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out[r] += t(r, c) * x[c];
  }
  return out;
}

// Charts as (first, second) index pairs of h for each output coordinate:
//   U12: (h12 h23 : h21 h13 : h12 h21)
//   U13: (h13 h32 : h13 h31 : h31 h12)
//   U23: (h23 h32 : h23 h31 : h32 h21)
using Factor = std::pair<int, int>;
constexpr std::array<std::array<std::pair<Factor, Factor>, 3>, 3> kCharts = {{
    {{{{1, 2}, {2, 3}}, {{2, 1}, {1, 3}}, {{1, 2}, {2, 1}}}},
    {{{{1, 3}, {3, 2}}, {{1, 3}, {3, 1}}, {{3, 1}, {1, 2}}}},
    {{{{2, 3}, {3, 2}}, {{2, 3}, {3, 1}}, {{3, 2}, {2, 1}}}},
}};

bool point_on_line(const Plucker& l, std::span<const Rational, 4> q) {
  const auto span = line_span(l);
  // q lies on the line iff span[0] ^ q is proportional to l (or zero).
  const Plucker w = plucker_from_span(span[0], q);
  return all_zero(w) || proportional(w, l);
}

}  // namespace

PlaneForm plane_span(const Plucker& l1, const Plucker& l2) {
  const auto a = line_span(l1);
  const auto b = line_span(l2);
  RatMatrix m(4, 4);
  const std::array<const std::array<Rational, 4>*, 4> rows = {&a[0], &a[1], &b[0], &b[1]};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = (*rows[r])[c];
  }
  const auto kernel = null_space(m);
  if (kernel.size() != 1) throw PreconditionError("plane_span: lines are skew or equal");
  const auto v = primitive_integer_vector(kernel[0]);
  return {v[0], v[1], v[2], v[3]};
}

Rational evaluate(const PlaneForm& h, std::span<const Rational, 4> q) {
  return h[0] * q[0] + h[1] * q[1] + h[2] * q[2] + h[3] * q[3];
}

BlowdownMap::BlowdownMap(const LineCensus& census) : census_(&census) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i != j) h_[i - 1][j - 1] = plane_span(census.line(LineLabel::g(i)).p, census.line(LineLabel::e(j)).p);
    }
  }
  // Normalize every chart so that E4 goes to (1:1:1).
  const auto points = sample_points(LineLabel::e(4));
  for (int k = 0; k < 3; ++k) {
    bool fixed = false;
    for (const auto& q : points) {
      constants_[k] = {1, 1, 1};
      const auto raw = raw_chart(k, q);
      if (std::any_of(raw.begin(), raw.end(), [](const Rational& x) { return x == 0; })) continue;
      for (int c = 0; c < 3; ++c) constants_[k][c] = 1 / raw[c];
      fixed = true;
      break;
    }
    if (!fixed) throw InvariantError("blow-down: no point of E4 inside chart " + std::to_string(k));
  }
}

std::array<Rational, 3> BlowdownMap::raw_chart(int index, std::span<const Rational, 4> q) const {
  std::array<Rational, 3> out;
  for (int c = 0; c < 3; ++c) {
    const auto& [f1, f2] = kCharts[index][c];
    out[c] = constants_[index][c] * evaluate(h(f1.first, f1.second), q) * evaluate(h(f2.first, f2.second), q);
  }
  return out;
}

std::optional<ProjPoint> BlowdownMap::chart(int index, std::span<const Rational, 4> q) const {
  if (index < 0 || index > 2) throw PreconditionError("blow-down chart index must be 0, 1 or 2");
  // U_ij excludes G_i, G_j and F_ij.
  constexpr std::array<std::pair<int, int>, 3> pairs = {{{1, 2}, {1, 3}, {2, 3}}};
  const auto [i, j] = pairs[index];
  for (const auto& l : {LineLabel::g(i), LineLabel::g(j), LineLabel::f(i, j)}) {
    if (point_on_line(census_->line(l).p, q)) return std::nullopt;
  }
  const auto raw = raw_chart(index, q);
  if (all_zero(raw)) return std::nullopt;
  return ProjPoint({raw[0], raw[1], raw[2]});
}

std::optional<ProjPoint> BlowdownMap::operator()(std::span<const Rational, 4> q) const {
  for (int k = 0; k < 3; ++k) {
    if (auto p = chart(k, q)) return p;
  }
  return std::nullopt;
}

std::vector<std::array<Rational, 4>> BlowdownMap::sample_points(const LineLabel& l) const {
  // Intersections with the other census lines first, then u + t v for t = 0, 1, -1, 2, ...
  std::vector<std::array<Rational, 4>> out;
  const int self = l.index();
  for (const auto& [key, pt] : census_->intersections) {
    if (key.first != self && key.second != self) continue;
    const auto& x = pt.coords();
    out.push_back({x[0], x[1], x[2], x[3]});
  }
  const auto span = line_span(census_->line(l).p);
  for (int t : {0, 1, -1, 2, -2, 3, -3}) {
    std::array<Rational, 4> q;
    for (int r = 0; r < 4; ++r) q[r] = span[0][r] + Rational(t) * span[1][r];
    out.push_back(q);
  }
  out.push_back(span[1]);
  return out;
}

ProjPoint BlowdownMap::contracted_image(int i) const {
  std::optional<ProjPoint> image;
  for (const auto& q : sample_points(LineLabel::e(i))) {
    for (int k = 0; k < 3; ++k) {
      auto p = chart(k, q);
      if (!p) continue;
      if (!image) {
        image = std::move(p);
      } else if (!(*image == *p)) {
        throw InvariantError("blow-down charts disagree on E" + std::to_string(i));
      }
    }
  }
  if (!image) throw InvariantError("E" + std::to_string(i) + " lies outside every chart");
  return *image;
}

std::optional<RatMatrix> projective_transform(const std::array<std::array<Rational, 3>, 4>& a,
                                              const std::array<std::array<Rational, 3>, 4>& b) {
  auto frame = [](const std::array<std::array<Rational, 3>, 4>& x) -> std::optional<RatMatrix> {
    const RatMatrix m = RatMatrix::from_columns({{x[0][0], x[0][1], x[0][2]},
                                                 {x[1][0], x[1][1], x[1][2]},
                                                 {x[2][0], x[2][1], x[2][2]}});
    const auto coeffs = solve(m, {x[3][0], x[3][1], x[3][2]});
    if (!coeffs || std::any_of(coeffs->begin(), coeffs->end(), [](const Rational& c) { return c == 0; })) {
      return std::nullopt;
    }
    RatMatrix scaled = m;
    for (int c = 0; c < 3; ++c) {
      for (int r = 0; r < 3; ++r) scaled(r, c) *= (*coeffs)[c];
    }
    return scaled;
  };
  const auto fa = frame(a);
  const auto fb = frame(b);
  if (!fa || !fb) return std::nullopt;
  // fa and fb send the standard frame to a and b.
  const auto inv = inverse(*fa);
  if (!inv) return std::nullopt;
  return *fb * *inv;
}

RoundTrip roundtrip_check(const ModuliVector& d, int checks) {
  const auto census = full_census(d);
  const BlowdownMap pi(census);
  const auto basis = plane_cubic_basis(d);

  // Plane points on a deterministic grid, skipping where pi o phi is undefined.
  std::vector<std::pair<std::array<Rational, 3>, std::array<Rational, 3>>> samples;
  for (int k = 0; samples.size() < static_cast<std::size_t>(4 + checks) && k < 400; ++k) {
    const std::array<Rational, 3> q = {Rational(1), Rational(k % 7 - 3) / (1 + k % 5), Rational(k % 11 - 5) / (2 + k % 3)};
    const auto img = evaluate_basis(basis, q);
    if (all_zero(img)) continue;
    const auto y = pi(img);
    if (!y) continue;
    samples.push_back({q, {y->coords()[0], y->coords()[1], y->coords()[2]}});
  }
  if (samples.size() < static_cast<std::size_t>(4 + checks)) {
    throw InvariantError("round trip: not enough sample points in the chart domains");
  }

  // Fit on the first four samples in general position.
  std::optional<RatMatrix> t;
  std::size_t used = 0;
  for (std::size_t a = 0; a + 3 < samples.size() && !t; ++a) {
    std::array<std::array<Rational, 3>, 4> src, dst;
    for (int k = 0; k < 4; ++k) {
      src[k] = samples[a + k].first;
      dst[k] = samples[a + k].second;
    }
    t = projective_transform(src, dst);
    used = a + 4;
  }
  std::array<ProjPoint, 6> recovered = {pi.contracted_image(1), pi.contracted_image(2), pi.contracted_image(3),
                                        pi.contracted_image(4), pi.contracted_image(5), pi.contracted_image(6)};
  RoundTrip out{t ? *t : RatMatrix(3, 3), recovered, false, false};
  if (!t) return out;

  int verified = 0;
  out.projective = true;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (k + 4 >= used && k < used) continue;  // fitting points
    const auto y = transform_point(*t, samples[k].first);
    const auto& want = samples[k].second;
    if (all_zero(y) || !(ProjPoint({y[0], y[1], y[2]}) == ProjPoint({want[0], want[1], want[2]}))) {
      out.projective = false;
    }
    ++verified;
  }
  out.projective = out.projective && verified >= checks;

  out.configuration = true;
  const auto base = base_points(d);
  for (int i = 0; i < 6; ++i) {
    const auto& p = base[i].coords();
    const auto y = transform_point(*t, {p[0], p[1], p[2]});
    if (all_zero(y) || !(ProjPoint({y[0], y[1], y[2]}) == recovered[i])) out.configuration = false;
  }
  return out;
}

SparsePoly frame_cubic(const CuspidalFrame& frame) {
  const auto vars = plane_variables();
  auto linear = [&](const std::array<Rational, 3>& l) {
    SparsePoly f(vars);
    for (int k = 0; k < 3; ++k) f += l[k] * SparsePoly::variable(vars, k);
    return f;
  };
  const auto l0 = linear(frame.ell0), l1 = linear(frame.ell1), l2 = linear(frame.ell2);
  return pow(l1, 3) - l0 * l0 * l2;
}

std::array<Rational, 6> moduli_from_frame(const CuspidalFrame& frame, const std::array<ProjPoint, 6>& points) {
  const auto f = frame_cubic(frame);
  std::array<Rational, 6> d;
  for (int i = 0; i < 6; ++i) {
    const auto& x = points[i].coords();
    if (x.size() != 3) throw PreconditionError("moduli_from_frame: points must lie in P^2");
    if (f.evaluate(x) != 0) throw PreconditionError("moduli_from_frame: point " + std::to_string(i + 1) + " is off the cubic");
    const Rational l0 = frame.ell0[0] * x[0] + frame.ell0[1] * x[1] + frame.ell0[2] * x[2];
    const Rational l1 = frame.ell1[0] * x[0] + frame.ell1[1] * x[1] + frame.ell1[2] * x[2];
    if (l0 == 0) throw PreconditionError("moduli_from_frame: ell0 vanishes at point " + std::to_string(i + 1));
    d[i] = l1 / l0;
  }
  return d;
}

}  // namespace octodp
