#pragma once

#include "octodp/sparse_poly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace octodp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string tolerance;  // "exact" everywhere; counts are pinned too
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  /// Replaces the built-in A-discriminant (mutation testing).
  std::optional<SparsePoly> delta;
  /// Empty means all twelve.
  std::set<int> only;
  unsigned threads = 0;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

std::string format_result(const CriterionResult& r);

}  // namespace octodp
