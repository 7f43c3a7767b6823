#include "octodp/sampler.hpp"

#include "octodp/error.hpp"
#include "octodp/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace octodp {

const std::vector<RootColumn>& root_matrix() {
  static const std::vector<RootColumn> columns = [] {
    std::vector<RootColumn> out;
    std::array<Rational, 6> zero{};
    for (const auto& f : root_forms(zero)) out.push_back({f.label, f.coefficients});
    return out;
  }();
  return columns;
}

ModuliVector chain_sample(const SamplerSeed& seed) {
  for (int i = 1; i < 6; ++i) {
    if (seed.exponents[i] <= seed.exponents[i - 1]) {
      throw PreconditionError("chain_sample: exponents must be strictly increasing");
    }
  }
  const auto& cols = root_matrix();
  RatMatrix b(6, 6);
  for (int c = 0; c < 6; ++c) {
    const int k = seed.basis[c];
    if (k < 0 || k >= static_cast<int>(cols.size())) throw PreconditionError("chain_sample: bad column index");
    for (int r = 0; r < 6; ++r) b(r, c) = cols[k].coefficients[r];
  }
  std::vector<Rational> e(6);
  for (int i = 0; i < 6; ++i) {
    if (valuation(seed.units[i], seed.prime) != ExtValuation(0)) {
      throw PreconditionError("chain_sample: units must have valuation 0");
    }
    const Rational power = pow(Rational(seed.prime.value()), static_cast<unsigned>(std::labs(seed.exponents[i])));
    e[i] = seed.exponents[i] >= 0 ? Rational(seed.units[i] * power) : Rational(seed.units[i] / power);
  }
  // d . B = e  <=>  B^T d = e.
  const auto d = solve(transpose(b), e);
  if (!d) throw PreconditionError("chain_sample: basis columns are linearly dependent");
  std::array<Rational, 6> values;
  std::copy(d->begin(), d->end(), values.begin());
  return ModuliVector(values);
}

std::vector<std::pair<std::string, ExtValuation>> bergman_point(const ModuliVector& d, const Prime& p) {
  std::vector<std::pair<std::string, ExtValuation>> out;
  for (const auto& f : root_forms(d.values())) out.emplace_back(f.label, valuation(f.value, p));
  return out;
}

SamplerSeed random_seed(std::mt19937_64& rng, const Prime& p) {
  SamplerSeed seed;
  seed.prime = p;
  const auto& cols = root_matrix();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(cols.size()) - 1);
  for (;;) {
    std::vector<int> chosen;
    while (chosen.size() < 6) {
      const int k = pick(rng);
      if (std::find(chosen.begin(), chosen.end(), k) == chosen.end()) chosen.push_back(k);
    }
    RatMatrix b(6, 6);
    for (int c = 0; c < 6; ++c) {
      for (int r = 0; r < 6; ++r) b(r, c) = cols[chosen[c]].coefficients[r];
    }
    if (det_exact(b) != 0) {
      std::copy(chosen.begin(), chosen.end(), seed.basis.begin());
      break;
    }
  }
  std::uniform_int_distribution<long> gap(1, 3);
  seed.exponents[0] = 0;
  for (int i = 1; i < 6; ++i) seed.exponents[i] = seed.exponents[i - 1] + gap(rng);
  std::uniform_int_distribution<int> unit(1, 3);
  std::bernoulli_distribution sign(0.5);
  for (int i = 0; i < 6; ++i) {
    int u = unit(rng);
    while (u % p.value() == 0) u = unit(rng);
    seed.units[i] = sign(rng) ? -u : u;
  }
  return seed;
}

bool SearchTarget::matches(const Classification& c) const {
  if (type && c.type != *type) return false;
  if (require_smooth && !c.smoothness.smooth()) return false;
  if (triangulation_class && c.smoothness.triangulation_class != triangulation_class) return false;
  return true;
}

SearchTarget SearchTarget::parse(std::string_view text) {
  // Comma-separated tokens: a type tag, "smooth", "class=K", or "any".
  SearchTarget t;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(',', pos), text.size());
    const auto token = text.substr(pos, end - pos);
    pos = end + 1;
    if (token.empty() || token == "any") continue;
    if (token == "smooth") {
      t.require_smooth = true;
    } else if (token.starts_with("class=")) {
      const int k = std::atoi(std::string(token.substr(6)).c_str());
      if (k < 1 || k > 10) throw PreconditionError("target class must be 1..10");
      t.triangulation_class = k;
    } else {
      bool found = false;
      for (auto type : {ArrangementType::AAAA, ArrangementType::AAAB, ArrangementType::AAB, ArrangementType::AAA,
                        ArrangementType::OtherStable, ArrangementType::NonStableUnknown}) {
        const auto name = to_string(type);
        if (token == name || token == name.substr(1, name.size() - 2)) {
          t.type = type;
          found = true;
        }
      }
      if (!found) throw PreconditionError("unknown search target '" + std::string(token) + "'");
    }
  }
  return t;
}

unsigned configured_threads() {
  if (const char* env = std::getenv("OCTODP_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Finding> search(const SearchTarget& target, std::uint64_t budget, std::uint64_t seed,
                            const Prime& p, unsigned threads, SearchStats* stats) {
  if (threads == 0) threads = configured_threads();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(budget, 1)));
  std::vector<std::optional<Finding>> slots(budget);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> inadmissible{0};
  std::mutex error_mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t k = next.fetch_add(1);
      if (k >= budget) return;
      try {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
        std::mt19937_64 rng(seq);
        const auto s = random_seed(rng, p);
        std::optional<ModuliVector> d;
        try {
          d = chain_sample(s);
        } catch (const PreconditionError&) {
          ++inadmissible;
          continue;
        }
        if (target.require_smooth || target.triangulation_class) {
          // Smoothness needs only the coefficients; skip the census when it fails.
          const auto smooth = tropical_smoothness(coefficients_from_moduli(*d), p);
          if (!smooth.smooth()) continue;
          if (target.triangulation_class && smooth.triangulation_class != target.triangulation_class) continue;
        }
        auto c = classify_moduli(*d, p);
        if (target.matches(c)) slots[k] = Finding{k, s, std::move(c)};
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!failure) failure = std::current_exception();
        next = budget;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  if (stats) *stats = {budget, inadmissible.load()};
  std::vector<Finding> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace octodp
