#pragma once

#include "octodp/valuation.hpp"

#include <span>
#include <vector>

namespace octodp {

/// Valuations of the roots of a univariate polynomial sum_i c_i t^i, read off
/// its lower Newton polygon from the coefficient valuations v_i = val(c_i).
/// Index i of the input is the coefficient of t^i. The result has one entry
/// per root (n = degree entries), sorted ascending, +infinity last; the
/// +infinity entries account for the vanishing trailing coefficients.
/// Throws PreconditionError on empty input or an infinite leading valuation.
std::vector<ExtRational> newton_root_valuations(std::span<const ExtValuation> coeff_vals);

/// The strict convexity test v0 + v2 > 2 v1 and v1 + v3 > 2 v2 for a cubic
/// with finite coefficient valuations: true iff the three roots have pairwise
/// distinct valuations.
bool cubic_roots_distinctly_valued(std::span<const ExtValuation, 4> coeff_vals);

}  // namespace octodp
