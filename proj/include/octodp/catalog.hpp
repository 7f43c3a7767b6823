#pragma once

#include "octodp/tropical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace octodp {

/// A reference moduli vector with its known tree arrangement at p = 5.
struct CatalogEntry {
  std::string name;
  std::array<Rational, 6> moduli;
  std::string statistic;  // as printed by to_string(ArrangementStatistic)
  ArrangementType type;
  std::optional<int> triangulation_class;  // set for the tropically smooth entries
};

/// The five Naruki general vectors, written as polynomials in p and
/// evaluated at the given p. Entries 0, 1 are (aaaa), entries 2..4 (aaab).
std::vector<std::array<Rational, 6>> naruki_general_vectors(long p);

/// All reference entries at p = 5: the five Naruki general vectors, two
/// stable non-generic ones and three non-stable ones.
const std::vector<CatalogEntry>& reference_catalog();

const CatalogEntry& catalog_entry(std::string_view name);

}  // namespace octodp
