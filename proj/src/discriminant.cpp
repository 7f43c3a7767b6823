#include "octodp/discriminant.hpp"

#include "octodp/error.hpp"
#include "octodp/matrix.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace octodp {

namespace detail {
extern const std::string_view kDeltaAText;
}

const std::vector<std::string>& coefficient_variables() {
  static const std::vector<std::string> vars = {"a", "b", "c", "d", "e", "f", "g", "h"};
  return vars;
}

SparsePoly parse_a_discriminant(std::string_view text) {
  SparsePoly delta(coefficient_variables());
  std::istringstream in{std::string(text)};
  std::string line;
  std::set<Exponent> seen;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string coeff;
    fields >> coeff;
    Exponent e;
    int k = 0;
    while (fields >> k) e.push_back(k);
    if (e.size() != 8 || !fields.eof()) {
      throw PreconditionError("malformed A-discriminant term on line " + std::to_string(line_no));
    }
    if (!seen.insert(e).second) {
      throw PreconditionError("repeated exponent on line " + std::to_string(line_no));
    }
    delta.add_term(e, parse_rational(coeff));
  }
  return delta;
}

std::string format_a_discriminant(const SparsePoly& delta) {
  std::ostringstream os;
  os << "# A-discriminant of the octanomial support, variables a b c d e f g h.\n"
     << "# One term per line: coefficient followed by the exponent vector.\n"
     << "# Sorted in descending graded-lexicographic order.\n";
  for (const auto& [e, c] : delta.terms()) {
    os << c.get_str();
    for (int k : e) os << ' ' << k;
    os << '\n';
  }
  return os.str();
}

SparsePoly load_a_discriminant(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_a_discriminant(buffer.str());
}

const SparsePoly& a_discriminant() {
  static const SparsePoly delta = parse_a_discriminant(detail::kDeltaAText);
  return delta;
}

Integer discriminant_constant() {
  Integer c;
  mpz_ui_pow_ui(c.get_mpz_t(), 2, 16);
  return c * 243;
}

namespace {

struct Factor {
  const char* label;
  Rational value;
};

// The non-monomial binomial factors shared by the discriminant and E_A.
std::array<Factor, 4> binomial_factors(const OctanomialCoefficients& c) {
  return {{
      {"ac-eg", c.a() * c.c() - c.e() * c.g()},
      {"ad-fg", c.a() * c.d() - c.f() * c.g()},
      {"bc-eh", c.b() * c.c() - c.e() * c.h()},
      {"bd-fh", c.b() * c.d() - c.f() * c.h()},
  }};
}

}  // namespace

DiscriminantReport full_discriminant(const OctanomialCoefficients& c, const SparsePoly& delta) {
  DiscriminantReport report;
  report.a_disc_value = delta.evaluate(c.values);
  report.principal_value = principal_a_determinant(c, delta);

  std::vector<Factor> factors = {{"e", c.e()}, {"f", c.f()}, {"g", c.g()}, {"h", c.h()}};
  for (const auto& f : binomial_factors(c)) factors.push_back(f);
  Rational product(discriminant_constant());
  for (const auto& f : factors) {
    product *= f.value * f.value;
    if (f.value == 0 && !report.vanishing_factor) report.vanishing_factor = f.label;
  }
  product *= report.a_disc_value;
  if (report.a_disc_value == 0 && !report.vanishing_factor) report.vanishing_factor = "Delta_A";
  report.full_discriminant = product;
  report.is_smooth = product != 0;
  return report;
}

Rational principal_a_determinant(const OctanomialCoefficients& c, const SparsePoly& delta) {
  Rational v = c.a() * c.b() * c.c() * c.d();
  for (std::size_t k = 4; k < 8; ++k) v *= c.values[k] * c.values[k];
  for (const auto& f : binomial_factors(c)) v *= f.value;
  return v * delta.evaluate(c.values);
}

SparsePoly principal_a_determinant_poly(const SparsePoly& delta) {
  const auto& vars = coefficient_variables();
  auto var = [&](std::size_t i) { return SparsePoly::variable(vars, i); };
  SparsePoly monomial_part = SparsePoly::monomial(vars, {1, 1, 1, 1, 2, 2, 2, 2});
  const SparsePoly acmeg = var(0) * var(2) - var(4) * var(6);
  const SparsePoly admfg = var(0) * var(3) - var(5) * var(6);
  const SparsePoly bcmeh = var(1) * var(2) - var(4) * var(7);
  const SparsePoly bdmfh = var(1) * var(3) - var(5) * var(7);
  return monomial_part * acmeg * admfg * bcmeh * bdmfh * delta;
}

Exponent lowest_monomial(const SparsePoly& f, std::span<const Rational> weights) {
  if (weights.size() != f.num_variables()) throw PreconditionError("weight vector length");
  if (f.is_zero()) throw PreconditionError("lowest monomial of the zero polynomial");
  std::optional<Rational> best;
  Exponent best_exp;
  bool tie = false;
  for (const auto& [e, c] : f.terms()) {
    Rational w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += weights[i] * e[i];
    if (!best || w < *best) {
      best = w;
      best_exp = e;
      tie = false;
    } else if (w == *best) {
      tie = true;
    }
  }
  if (tie) throw PreconditionError("weight vector is not generic: lowest monomial is tied");
  return best_exp;
}

std::array<SparsePoly, 4> gradient(const QuaternaryCubic& cubic) {
  return {cubic.poly.derivative(0), cubic.poly.derivative(1), cubic.poly.derivative(2),
          cubic.poly.derivative(3)};
}

namespace {

constexpr int kMacaulayDegree = 5;

struct MacaulayLayout {
  std::vector<Exponent> monomials;
  std::map<Exponent, std::size_t> index;
  std::vector<std::size_t> non_reduced;
};

const MacaulayLayout& macaulay_layout() {
  static const MacaulayLayout layout = [] {
    MacaulayLayout l;
    for (int a = kMacaulayDegree; a >= 0; --a) {
      for (int b = kMacaulayDegree - a; b >= 0; --b) {
        for (int c = kMacaulayDegree - a - b; c >= 0; --c) {
          l.monomials.push_back({a, b, c, kMacaulayDegree - a - b - c});
        }
      }
    }
    for (std::size_t i = 0; i < l.monomials.size(); ++i) {
      l.index[l.monomials[i]] = i;
      const auto& m = l.monomials[i];
      const auto squares = std::count_if(m.begin(), m.end(), [](int k) { return k >= 2; });
      if (squares >= 2) l.non_reduced.push_back(i);
    }
    return l;
  }();
  return layout;
}

struct MacaulayQuotient {
  Rational numerator;
  Rational denominator;
};

MacaulayQuotient macaulay_quotient(const std::array<SparsePoly, 4>& f,
                                   const std::array<int, 4>& order) {
  const auto& layout = macaulay_layout();
  const std::size_t n = layout.monomials.size();
  RatMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& mon = layout.monomials[r];
    int k = -1;
    for (int v : order) {
      if (mon[static_cast<std::size_t>(v)] >= 2) {
        k = v;
        break;
      }
    }
    if (k < 0) throw InvariantError("degree-5 monomial without a square factor");
    Exponent shift = mon;
    shift[static_cast<std::size_t>(k)] -= 2;
    for (const auto& [e, c] : f[static_cast<std::size_t>(k)].terms()) {
      Exponent target(4);
      for (std::size_t i = 0; i < 4; ++i) target[i] = e[i] + shift[i];
      m(r, layout.index.at(target)) = c;
    }
  }
  const std::size_t k = layout.non_reduced.size();
  RatMatrix minor(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      minor(i, j) = m(layout.non_reduced[i], layout.non_reduced[j]);
    }
  }
  return {det_exact(m), det_exact(minor)};
}

void require_quadrics(const std::array<SparsePoly, 4>& quadrics) {
  for (const auto& q : quadrics) {
    if (q.num_variables() != 4 || !q.is_homogeneous(2)) {
      throw PreconditionError("resultant oracle expects four quaternary quadrics");
    }
  }
}

}  // namespace

Rational resultant_oracle(const std::array<SparsePoly, 4>& quadrics, ResultantTrace* trace) {
  require_quadrics(quadrics);
  std::array<int, 4> order = {0, 1, 2, 3};
  do {
    const auto q = macaulay_quotient(quadrics, order);
    if (q.denominator != 0) {
      if (trace) {
        trace->variable_order.assign(order.begin(), order.end());
        trace->perturbed = false;
      }
      return q.numerator / q.denominator;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  // Res(f_i + t x_i^2) is a polynomial of degree <= 32 in t.
  constexpr std::size_t kSamples = 33;
  std::vector<Rational> ts;
  std::vector<Rational> values;
  const std::array<int, 4> identity = {0, 1, 2, 3};
  for (long t = 1; ts.size() < kSamples && t < 1000; ++t) {
    std::array<SparsePoly, 4> shifted = quadrics;
    for (std::size_t i = 0; i < 4; ++i) {
      Exponent sq(4, 0);
      sq[i] = 2;
      shifted[i].add_term(sq, t);
    }
    const auto q = macaulay_quotient(shifted, identity);
    if (q.denominator == 0) continue;
    ts.emplace_back(t);
    values.push_back(q.numerator / q.denominator);
  }
  if (ts.size() < kSamples) {
    throw PreconditionError("resultant: every Macaulay selection is degenerate");
  }
  // Lagrange interpolation at t = 0.
  Rational result = 0;
  for (std::size_t i = 0; i < kSamples; ++i) {
    Rational basis = 1;
    for (std::size_t j = 0; j < kSamples; ++j) {
      if (j != i) basis *= ts[j] / (ts[j] - ts[i]);
    }
    result += values[i] * basis;
  }
  if (trace) {
    trace->variable_order.clear();
    trace->perturbed = true;
  }
  return result;
}

}  // namespace octodp
