#pragma once

#include "octodp/tropical.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace octodp {

/// Column k of the root matrix: the coefficient vector of the k-th root form
/// (entries in {-1, 0, 1}), in root_forms() order.
struct RootColumn {
  std::string label;
  std::array<int, 6> coefficients;
};

const std::vector<RootColumn>& root_matrix();

struct SamplerSeed {
  std::array<int, 6> basis{};  // column indices into root_matrix()
  std::array<long, 6> exponents{};
  std::array<Rational, 6> units;
  Prime prime{5};
};

/// d with d . B = e, where B holds the basis columns and e_i = unit_i p^exponent_i.
/// Throws PreconditionError for non-increasing exponents, non-unit units, a
/// singular basis or an inadmissible result.
ModuliVector chain_sample(const SamplerSeed& seed);

/// Valuations of the 36 root forms at d, labeled as in root_forms().
std::vector<std::pair<std::string, ExtValuation>> bergman_point(const ModuliVector& d, const Prime& p);

/// A random seed: a random invertible basis, exponents starting at 0 with
/// gaps drawn from {1, 2, 3}, and units in {+-1, +-2, +-3}.
SamplerSeed random_seed(std::mt19937_64& rng, const Prime& p);

struct SearchTarget {
  std::optional<ArrangementType> type;
  bool require_smooth = false;
  std::optional<int> triangulation_class;

  bool matches(const Classification& c) const;
  static SearchTarget parse(std::string_view text);
};

struct Finding {
  std::uint64_t draw = 0;
  SamplerSeed seed;
  Classification classification;
};

struct SearchStats {
  std::uint64_t draws = 0;
  std::uint64_t inadmissible = 0;
};

/// Draw k uses an RNG seeded from (seed, k), so findings are the same for any
/// thread count. Findings come back in draw order. threads = 0 reads
/// OCTODP_THREADS, falling back to the hardware concurrency.
std::vector<Finding> search(const SearchTarget& target, std::uint64_t budget, std::uint64_t seed,
                            const Prime& p, unsigned threads = 0, SearchStats* stats = nullptr);

/// The worker count from OCTODP_THREADS (at least 1).
unsigned configured_threads();

}  // namespace octodp
