#include "octodp/catalog.hpp"

#include "octodp/error.hpp"

namespace octodp {

std::vector<std::array<Rational, 6>> naruki_general_vectors(long p) {
  auto q = [p](unsigned e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), e);
    return Rational(r);
  };
  const Rational one(1), two(2);
  return {
      {two + q(5) - q(7) - q(9), -q(3) + q(9), -one + q(7), -q(3) - q(7) + q(9) + q(11), -one + q(9),
       one + q(3) - q(9)},
      {one + q(3) - q(9), q(3) + q(5) - q(9), -two + q(5) + q(7) + q(9) - q(11), one - q(3) - q(5) + q(11),
       -q(3) + q(9), -one + q(9)},
      {-one + q(7), two + q(5) - q(7) - q(9), -q(3) + q(9), -one + q(9), one + q(3) - q(9),
       one + q(3) - 2 * q(9) + q(11)},
      {-one + q(3) - q(5) + q(7), two - q(7) + q(9) - q(11), two - q(3) + q(5) - q(7) + q(9) - q(11),
       -one + q(7) - q(9) + q(11), -two + q(3) + q(7) - q(9) + q(11), -one + q(11)},
      {two - q(5) - q(7) + q(9), two - q(3) - q(5) + q(9), -one + q(5) + q(7) - q(9), -one + q(3), -one + q(5),
       -one + q(3) - q(9) + q(11)},
  };
}

namespace {

std::array<Rational, 6> ints(std::array<long, 6> v) {
  std::array<Rational, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = v[i];
  return out;
}

std::vector<CatalogEntry> build() {
  const auto ng = naruki_general_vectors(5);
  const std::string aaaa = "{[4021]^24, [4020]^3}";
  const std::string aaab = "{[2221]^12, [4201]^12, [4210]^3}";
  std::vector<CatalogEntry> out = {
      {"aaaa-1", ng[0], aaaa, ArrangementType::AAAA, 1},
      {"aaaa-2", ng[1], aaaa, ArrangementType::AAAA, 2},
      {"aaab-1", ng[2], aaab, ArrangementType::AAAB, 3},
      {"aaab-2", ng[3], aaab, ArrangementType::AAAB, 4},
      {"aaab-3", ng[4], aaab, ArrangementType::AAAB, 7},
      {"aab", ints({2377, -2375, 1240, 2385, 2425, 2625}),
       "{[2210]^1, [2220]^4, [2221]^8, [4201]^12, [4210]^2}", ArrangementType::AAB, std::nullopt},
      {"aaa", ints({-843, 124, 724, 744, 1537, 844}), "{[2020]^1, [4020]^6, [4021]^20}", ArrangementType::AAA,
       std::nullopt},
      {"nonstable-1", ints({-719, 1081, -359, -347, -9287, 10081}),
       "{[2220]^6, [3210]^3, [3220]^6, [4201]^12}", ArrangementType::NonStableUnknown, std::nullopt},
      {"nonstable-2", ints({120, -3099, -3095, 620, -595, 3100}),
       "{[2220]^2, [2221]^8, [3210]^1, [3220]^2, [4201]^12, [4210]^2}", ArrangementType::NonStableUnknown,
       std::nullopt},
      {"nonstable-3", ints({-6719, 1248, 7248, -519, 481, -479}),
       "{[3020]^1, [4020]^4, [4021]^20, [5020]^2}", ArrangementType::NonStableUnknown, std::nullopt},
  };
  // normalize the statistic strings to the printer's order
  for (auto& e : out) e.statistic = to_string(parse_statistic(e.statistic));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& reference_catalog() {
  static const std::vector<CatalogEntry> catalog = build();
  return catalog;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : reference_catalog())
    if (e.name == name) return e;
  throw PreconditionError("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace octodp
