#pragma once

#include "octodp/matrix.hpp"

#include <optional>
#include <vector>

namespace octodp {

/// A point w with A w > 0 in every row, found by exact simplex (Bland's
/// rule) on  max t  s.t.  A w >= t, t <= 1.  nullopt when the open cone
/// {w : A w > 0} is empty.
std::optional<std::vector<Rational>> strictly_positive_point(const RatMatrix& a);

}  // namespace octodp
