#include "octodp/newton.hpp"

#include "octodp/error.hpp"

#include <algorithm>

namespace octodp {

std::vector<ExtRational> newton_root_valuations(std::span<const ExtValuation> coeff_vals) {
  if (coeff_vals.empty()) throw PreconditionError("no coefficients");
  const std::size_t n = coeff_vals.size() - 1;
  if (coeff_vals[n].is_infinite()) {
    throw PreconditionError("leading coefficient vanishes");
  }
  std::vector<ExtRational> roots;
  std::size_t start = 0;
  while (coeff_vals[start].is_infinite()) {
    roots.push_back(ExtRational::infinity());
    ++start;
  }
  // Lower convex hull of the finite points (i, v_i), i >= start. Infinite
  // interior points sit above every segment and are skipped.
  std::vector<std::size_t> hull;
  for (std::size_t i = start; i <= n; ++i) {
    if (coeff_vals[i].is_infinite()) continue;
    const Rational vi(coeff_vals[i].value());
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const Rational va(coeff_vals[a].value());
      const Rational vb(coeff_vals[b].value());
      // Drop b when it lies on or above the segment a-i.
      const Rational lhs = (vb - va) * Rational(static_cast<long>(i - a));
      const Rational rhs = (vi - va) * Rational(static_cast<long>(b - a));
      if (lhs >= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const std::size_t a = hull[k];
    const std::size_t b = hull[k + 1];
    const Rational slope =
        (Rational(coeff_vals[b].value()) - Rational(coeff_vals[a].value())) /
        Rational(static_cast<long>(b - a));
    for (std::size_t m = 0; m < b - a; ++m) roots.emplace_back(-slope);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool cubic_roots_distinctly_valued(std::span<const ExtValuation, 4> v) {
  return v[0] + v[2] > v[1] + v[1] && v[1] + v[3] > v[2] + v[2];
}

}  // namespace octodp
