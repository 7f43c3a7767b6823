#include "octodp/triangulation.hpp"

#include "octodp/conventions.hpp"
#include "octodp/error.hpp"
#include "octodp/octanomial.hpp"
#include "octodp/rational_lp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace octodp {

namespace {

constexpr int kPoints = 8;

std::vector<int> members(PointSet s) {
  std::vector<int> out;
  for (int i = 0; i < kPoints; ++i) {
    if (s & (1u << i)) out.push_back(i);
  }
  return out;
}

// Homogenized columns (x, y, z, 1).
RatMatrix homogenized(const std::vector<int>& idx) {
  RatMatrix m(4, idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    for (int r = 0; r < 3; ++r) m(r, c) = support_points()[idx[c]][r];
    m(3, c) = 1;
  }
  return m;
}

struct Circuit {
  PointSet positive;
  PointSet negative;
};

const std::vector<Circuit>& circuits() {
  static const std::vector<Circuit> all = [] {
    std::vector<Circuit> out;
    for (unsigned s = 1; s < (1u << kPoints); ++s) {
      const int k = std::popcount(s);
      if (k < 2 || k > 5) continue;
      const auto idx = members(static_cast<PointSet>(s));
      const auto kernel = null_space(homogenized(idx));
      if (kernel.size() != 1) continue;
      const auto& v = kernel.front();
      if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) continue;
      Circuit c{0, 0};
      for (std::size_t i = 0; i < idx.size(); ++i) {
        (v[i] > 0 ? c.positive : c.negative) |= static_cast<PointSet>(1u << idx[i]);
      }
      out.push_back(c);
    }
    return out;
  }();
  return all;
}

// For every nondegenerate simplex s: the affine coordinates of all eight
// points with respect to its vertices, so the interpolation of w on s at a_j
// is sum_i lambda[j][i] * w[vertex_i].
struct SimplexFrame {
  PointSet cell;
  std::array<int, 4> vertices;
  std::array<std::array<Rational, 4>, kPoints> lambda;
};

const std::vector<SimplexFrame>& simplex_frames() {
  static const std::vector<SimplexFrame> frames = [] {
    std::vector<SimplexFrame> out;
    for (unsigned s = 0; s < (1u << kPoints); ++s) {
      if (std::popcount(s) != 4 || normalized_volume(static_cast<PointSet>(s)) == 0) continue;
      SimplexFrame f;
      f.cell = static_cast<PointSet>(s);
      const auto idx = members(f.cell);
      std::copy(idx.begin(), idx.end(), f.vertices.begin());
      const RatMatrix m = homogenized(idx);
      for (int j = 0; j < kPoints; ++j) {
        std::vector<Rational> target(4);
        for (int r = 0; r < 3; ++r) target[r] = support_points()[j][r];
        target[3] = 1;
        const auto x = solve(m, target);
        if (!x) throw InvariantError("degenerate simplex frame");
        std::copy(x->begin(), x->end(), f.lambda[j].begin());
      }
      out.push_back(std::move(f));
    }
    return out;
  }();
  return frames;
}

const SimplexFrame& frame_of(PointSet cell) {
  for (const auto& f : simplex_frames()) {
    if (f.cell == cell) return f;
  }
  throw PreconditionError("cell " + point_set_label(cell) + " is not a full-dimensional simplex");
}

Rational height_above(const SimplexFrame& f, std::span<const Rational, 8> w, int j) {
  Rational h = w[j];
  for (int i = 0; i < 4; ++i) h -= f.lambda[j][i] * w[f.vertices[i]];
  return h;
}

bool is_face(PointSet s, const std::vector<PointSet>& cells) {
  return std::any_of(cells.begin(), cells.end(), [s](PointSet c) { return (s & c) == s; });
}

Triangulation canonical(const Triangulation& t) {
  Triangulation best = t;
  for (const auto& perm : symmetry_group()) {
    auto image = apply(perm, t);
    if (image < best) best = std::move(image);
  }
  return best;
}

}  // namespace

std::string point_set_label(PointSet s) {
  std::string out;
  for (int i = 0; i < kPoints; ++i) {
    if (s & (1u << i)) out.push_back(kCoefficientNames[i]);
  }
  return out;
}

PointSet parse_point_set(std::string_view label) {
  PointSet s = 0;
  for (char ch : label) {
    if (ch < 'a' || ch > 'h') throw PreconditionError(std::string("unknown support point '") + ch + "'");
    s |= static_cast<PointSet>(1u << (ch - 'a'));
  }
  return s;
}

WeightVector weights_from_ints(const std::array<long, 8>& w) {
  WeightVector out;
  for (int i = 0; i < kPoints; ++i) out[i] = Rational(w[i]);
  return out;
}

const std::array<std::array<int, 3>, 8>& support_points() {
  static const std::array<std::array<int, 3>, 8> pts = [] {
    std::array<std::array<int, 3>, 8> out{};
    for (int i = 0; i < kPoints; ++i) {
      for (int r = 0; r < 3; ++r) out[i][r] = kSupport[i][r];
    }
    return out;
  }();
  return pts;
}

int normalized_volume(PointSet simplex) {
  if (std::popcount(simplex) != 4) return 0;
  const Rational det = det_exact(homogenized(members(simplex)));
  const Rational magnitude = abs(det);
  return static_cast<int>(magnitude.get_num().get_si());
}

std::vector<PointSet> support_facets() {
  std::set<PointSet> facets;
  const auto& pts = support_points();
  for (unsigned s = 0; s < (1u << kPoints); ++s) {
    if (std::popcount(s) != 3) continue;
    const auto idx = members(static_cast<PointSet>(s));
    // Normal n = (p1 - p0) x (p2 - p0).
    std::array<long, 3> u{}, v{};
    for (int r = 0; r < 3; ++r) {
      u[r] = pts[idx[1]][r] - pts[idx[0]][r];
      v[r] = pts[idx[2]][r] - pts[idx[0]][r];
    }
    const std::array<long, 3> n = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                   u[0] * v[1] - u[1] * v[0]};
    if (n == std::array<long, 3>{0, 0, 0}) continue;
    int above = 0, below = 0;
    PointSet on = 0;
    for (int j = 0; j < kPoints; ++j) {
      long side = 0;
      for (int r = 0; r < 3; ++r) side += n[r] * (pts[j][r] - pts[idx[0]][r]);
      if (side > 0) ++above;
      if (side < 0) ++below;
      if (side == 0) on |= static_cast<PointSet>(1u << j);
    }
    if (above == 0 || below == 0) facets.insert(on);
  }
  std::vector<PointSet> out(facets.begin(), facets.end());
  std::sort(out.begin(), out.end(),
            [](PointSet x, PointSet y) { return point_set_label(x) < point_set_label(y); });
  return out;
}

bool simplices_intersect_properly(PointSet s, PointSet t) {
  for (const auto& c : circuits()) {
    if ((c.positive & s) == c.positive && (c.negative & t) == c.negative) return false;
    if ((c.negative & s) == c.negative && (c.positive & t) == c.positive) return false;
  }
  return true;
}

bool is_triangulation(const std::vector<PointSet>& cells) {
  int volume = 0;
  for (PointSet c : cells) {
    const int v = normalized_volume(c);
    if (v == 0) return false;
    volume += v;
  }
  if (volume != kSupportVolume) return false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (cells[i] == cells[j] || !simplices_intersect_properly(cells[i], cells[j])) return false;
    }
  }
  return true;
}

std::vector<PointSet> regular_subdivision(std::span<const Rational, 8> w) {
  static_assert(kSubdivisionHull == HullSide::Lower);
  std::set<PointSet> cells;
  for (const auto& f : simplex_frames()) {
    PointSet cell = 0;
    bool lower = true;
    for (int j = 0; j < kPoints && lower; ++j) {
      const Rational h = height_above(f, w, j);
      if (h < 0) lower = false;
      if (h == 0) cell |= static_cast<PointSet>(1u << j);
    }
    if (lower) cells.insert(cell);
  }
  return {cells.begin(), cells.end()};
}

std::optional<Triangulation> regular_triangulation(std::span<const Rational, 8> w) {
  auto cells = regular_subdivision(w);
  if (std::any_of(cells.begin(), cells.end(), [](PointSet c) { return std::popcount(c) != 4; })) {
    return std::nullopt;
  }
  return Triangulation{std::move(cells)};
}

RatMatrix secondary_cone_inequalities(const Triangulation& t) {
  std::vector<std::vector<Rational>> rows;
  for (PointSet cell : t.cells) {
    const auto& f = frame_of(cell);
    for (int j = 0; j < kPoints; ++j) {
      if (cell & (1u << j)) continue;
      std::vector<Rational> r(kPoints);
      r[j] += 1;
      for (int i = 0; i < 4; ++i) r[f.vertices[i]] -= f.lambda[j][i];
      rows.push_back(std::move(r));
    }
  }
  // Deduplicate; the same wall appears from both sides and via other cells.
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  RatMatrix m(rows.size(), kPoints);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < kPoints; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool in_secondary_cone(const Triangulation& t, std::span<const Rational, 8> w) {
  for (PointSet cell : t.cells) {
    const auto& f = frame_of(cell);
    for (int j = 0; j < kPoints; ++j) {
      if (!(cell & (1u << j)) && height_above(f, w, j) <= 0) return false;
    }
  }
  return true;
}

std::optional<WeightVector> regularity_witness(const Triangulation& t) {
  const auto w = strictly_positive_point(secondary_cone_inequalities(t));
  if (!w) return std::nullopt;
  const auto ints = primitive_integer_vector(*w);
  WeightVector out;
  for (int i = 0; i < kPoints; ++i) out[i] = ints[i];
  return out;
}

std::vector<Triangulation> enumerate_triangulations() {
  const auto& frames = simplex_frames();
  const std::size_t n = frames.size();
  std::vector<int> vol(n);
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    vol[i] = normalized_volume(frames[i].cell);
    for (std::size_t j = 0; j < n; ++j) {
      compatible[i][j] = i != j && simplices_intersect_properly(frames[i].cell, frames[j].cell);
    }
  }

  std::vector<Triangulation> out;
  std::vector<std::size_t> chosen;
  // Clique search in the compatibility graph; pairwise proper intersection
  // bounds the total volume by 7, and reaching 7 means the cells cover.
  auto extend = [&](auto&& self, std::size_t start, int volume) -> void {
    if (volume == kSupportVolume) {
      Triangulation t;
      for (auto k : chosen) t.cells.push_back(frames[k].cell);
      std::sort(t.cells.begin(), t.cells.end());
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t k = start; k < n; ++k) {
      if (volume + vol[k] > kSupportVolume) continue;
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return compatible[c][k]; })) {
        continue;
      }
      chosen.push_back(k);
      self(self, k + 1, volume + vol[k]);
      chosen.pop_back();
    }
  };
  extend(extend, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<RegularTriangulation>& enumerate_regular_triangulations() {
  static const std::vector<RegularTriangulation> regular = [] {
    std::vector<RegularTriangulation> out;
    for (auto& t : enumerate_triangulations()) {
      if (auto w = regularity_witness(t)) out.push_back({std::move(t), *w});
    }
    return out;
  }();
  return regular;
}

GkzVector gkz_vector(const Triangulation& t) {
  if (!is_triangulation(t.cells)) throw PreconditionError("gkz_vector: input is not a triangulation");
  GkzVector phi{};
  for (PointSet c : t.cells) {
    const int v = normalized_volume(c);
    for (int i : members(c)) phi[i] += v;
  }
  return phi;
}

SRIdeal sr_ideal(const std::vector<PointSet>& cells) {
  SRIdeal out;
  for (unsigned s = 1; s < (1u << kPoints); ++s) {
    const auto set = static_cast<PointSet>(s);
    if (is_face(set, cells)) continue;
    bool minimal = true;
    for (int i : members(set)) {
      if (!is_face(static_cast<PointSet>(set & ~(1u << i)), cells)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(set);
  }
  std::sort(out.begin(), out.end(), [](PointSet x, PointSet y) {
    const int px = std::popcount(x), py = std::popcount(y);
    if (px != py) return px < py;
    return point_set_label(x) < point_set_label(y);
  });
  return out;
}

std::string to_string(const SRIdeal& ideal) {
  std::string out = "<";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += point_set_label(ideal[i]);
  }
  return out + ">";
}

SRIdeal parse_sr_ideal(std::string_view text) {
  SRIdeal out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(parse_point_set(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z') {
      token.push_back(ch);
    } else if (ch == ',' || ch == '<' || ch == '>' || ch == ' ') {
      flush();
    } else {
      throw PreconditionError(std::string("unexpected character '") + ch + "' in ideal");
    }
  }
  flush();
  std::sort(out.begin(), out.end(), [](PointSet x, PointSet y) {
    const int px = std::popcount(x), py = std::popcount(y);
    if (px != py) return px < py;
    return point_set_label(x) < point_set_label(y);
  });
  return out;
}

const std::vector<PointPermutation>& symmetry_group() {
  static const std::vector<PointPermutation> group = [] {
    std::vector<int> all(kPoints);
    std::iota(all.begin(), all.end(), 0);
    const RatMatrix m = homogenized(all);
    const auto kernel = null_space(m);
    std::vector<PointPermutation> out;
    PointPermutation perm;
    std::iota(perm.begin(), perm.end(), 0);
    // An affine automorphism exists iff the permutation preserves every
    // affine dependence among the points (A is full-dimensional).
    do {
      bool ok = true;
      for (const auto& v : kernel) {
        std::vector<Rational> moved(kPoints);
        for (int i = 0; i < kPoints; ++i) moved[perm[i]] = v[i];
        const auto image = m * moved;
        if (std::any_of(image.begin(), image.end(), [](const Rational& x) { return x != 0; })) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return group;
}

PointSet apply(const PointPermutation& perm, PointSet s) {
  PointSet out = 0;
  for (int i = 0; i < kPoints; ++i) {
    if (s & (1u << i)) out |= static_cast<PointSet>(1u << perm[i]);
  }
  return out;
}

Triangulation apply(const PointPermutation& perm, const Triangulation& t) {
  Triangulation out;
  for (PointSet c : t.cells) out.cells.push_back(apply(perm, c));
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

std::vector<std::vector<std::size_t>> symmetry_orbits(const std::vector<Triangulation>& ts) {
  std::map<Triangulation, std::size_t> orbit_of;
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    auto key = canonical(ts[i]);
    auto [it, inserted] = orbit_of.try_emplace(std::move(key), orbits.size());
    if (inserted) orbits.emplace_back();
    orbits[it->second].push_back(i);
  }
  return orbits;
}

std::vector<BinomialCheck> toric_ideal_check(std::span<const Rational, 8> w) {
  static_assert(kToricInitialTerm == InitialTerm::Highest);
  auto exponent = [](std::string_view m) {
    std::array<int, 4> e{};
    for (char ch : m) {
      for (int r = 0; r < 4; ++r) e[r] += kSupport[ch - 'a'][r];
    }
    return e;
  };
  auto weight = [&](std::string_view m) {
    Rational s;
    for (char ch : m) s += w[ch - 'a'];
    return s;
  };
  std::vector<BinomialCheck> out;
  for (const auto& [lead, trail] : kToricGenerators) {
    BinomialCheck b;
    b.lead = lead;
    b.trail = trail;
    b.homogeneous = exponent(lead) == exponent(trail);
    const Rational wl = weight(lead), wt = weight(trail);
    if (wl > wt) b.initial = std::string(lead);
    if (wt > wl) b.initial = std::string(trail);
    out.push_back(std::move(b));
  }
  return out;
}

const std::array<UnimodularClass, 10>& unimodular_class_table() {
  static const std::array<UnimodularClass, 10> table = {{
      {1, 1, "ah, bg, cf, de, eg, eh, fg, fh", {4, 1, 7, 2, 9, 5, 9, 9}, {5, 5, 5, 5, 2, 2, 2, 2}},
      {2, 4, "ab, ac, ah, cd, cf, eh, fg, fh", {5, 2, 8, 4, 2, 9, 5, 9}, {2, 5, 2, 5, 5, 2, 5, 2}},
      {3, 4, "ab, ah, bg, cf, eg, eh, fg, fh", {8, 3, 1, 1, 4, 9, 6, 9}, {3, 3, 5, 7, 4, 2, 2, 2}},
      {4, 4, "ab, ac, ah, bc, bg, cf, fg, fh, egh", {9, 9, 6, 1, 4, 8, 8, 5}, {2, 2, 3, 7, 6, 2, 3, 3}},
      {5, 4, "ab, ac, ad, ah, bc, cd, cf, fh, bfg, deh", {7, 3, 9, 1, 2, 4, 1, 9}, {1, 4, 1, 4, 6, 3, 6, 3}},
      {6, 4, "ab, ac, ad, ah, bc, bd, bg, cf, egh, fgh", {8, 8, 2, 6, 1, 6, 3, 7}, {1, 1, 3, 5, 6, 4, 4, 4}},
      {7, 8, "ab, ac, ah, bg, cf, eh, fg, fh", {4, 2, 4, 1, 3, 8, 4, 4}, {2, 3, 4, 7, 5, 2, 3, 2}},
      {8, 8, "ab, ac, ad, ah, bg, cf, eh, fh", {4, 4, 3, 1, 1, 1, 1, 7}, {1, 3, 4, 6, 5, 3, 4, 2}},
      {9, 8, "ab, ac, ad, ah, cd, cf, eh, fh, bfg", {9, 3, 8, 4, 3, 9, 2, 9}, {1, 5, 2, 4, 5, 3, 6, 2}},
      {10, 8, "ab, ac, ad, ah, bc, bg, cf, fh, egh", {9, 9, 4, 3, 4, 7, 3, 8}, {1, 2, 3, 6, 6, 3, 4, 3}},
  }};
  return table;
}

int unimodular_class(const Triangulation& t) {
  static const std::map<Triangulation, int> by_canonical = [] {
    std::map<Triangulation, int> out;
    for (const auto& row : unimodular_class_table()) {
      const auto w = weights_from_ints(row.weights);
      const auto rep = regular_triangulation(w);
      if (!rep || !rep->is_unimodular()) {
        throw InvariantError("class table row " + std::to_string(row.row) + " is not unimodular");
      }
      out.emplace(canonical(*rep), row.row);
    }
    return out;
  }();
  if (!t.is_unimodular()) return 0;
  const auto it = by_canonical.find(canonical(t));
  return it == by_canonical.end() ? 0 : it->second;
}

}  // namespace octodp
