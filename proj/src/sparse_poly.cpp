#include "octodp/sparse_poly.hpp"

#include "octodp/error.hpp"

#include <numeric>
#include <sstream>

namespace octodp {

bool GrlexDescending::operator()(const Exponent& lhs, const Exponent& rhs) const {
  const int dl = std::accumulate(lhs.begin(), lhs.end(), 0);
  const int dr = std::accumulate(rhs.begin(), rhs.end(), 0);
  if (dl != dr) return dl > dr;
  return lhs > rhs;
}

SparsePoly::SparsePoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

SparsePoly SparsePoly::constant(std::vector<std::string> variables, const Rational& c) {
  SparsePoly p(std::move(variables));
  p.add_term(Exponent(p.num_variables(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> variables, std::size_t index) {
  SparsePoly p(std::move(variables));
  if (index >= p.num_variables()) throw PreconditionError("variable index out of range");
  Exponent e(p.num_variables(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

SparsePoly SparsePoly::monomial(std::vector<std::string> variables, Exponent exponent,
                                const Rational& c) {
  SparsePoly p(std::move(variables));
  p.add_term(exponent, c);
  return p;
}

int SparsePoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  }
  return deg;
}

bool SparsePoly::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
  }
  return true;
}

Rational SparsePoly::coefficient(const Exponent& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Exponent& exponent, const Rational& c) {
  if (exponent.size() != num_variables()) {
    throw PreconditionError("exponent vector length does not match variable count");
  }
  for (int k : exponent) {
    if (k < 0) throw PreconditionError("negative exponent");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparsePoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_variables()) {
    throw PreconditionError("evaluation point has wrong dimension");
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= pow(point[i], static_cast<unsigned>(e[i]));
    }
    sum += term;
  }
  return sum;
}

SparsePoly SparsePoly::derivative(std::size_t index) const {
  SparsePoly out(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent d = e;
    d[index] -= 1;
    out.add_term(d, c * e[index]);
  }
  return out;
}

void SparsePoly::require_same_variables(const SparsePoly& other) const {
  if (variables_ != other.variables_) {
    throw PreconditionError("polynomials live over different variable lists");
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
  require_same_variables(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
  require_same_variables(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
  lhs.require_same_variables(rhs);
  SparsePoly out(lhs.variables_);
  Exponent e(lhs.num_variables());
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

bool operator==(const SparsePoly& lhs, const SparsePoly& rhs) {
  return lhs.variables_ == rhs.variables_ && lhs.terms_ == rhs.terms_;
}

SparsePoly pow(const SparsePoly& base, unsigned exponent) {
  SparsePoly result = SparsePoly::constant(base.variables(), 1);
  SparsePoly square = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * square;
    exponent >>= 1u;
    if (exponent > 0) square = square * square;
  }
  return result;
}

SparsePoly substitute(const SparsePoly& f, const std::map<std::string, SparsePoly>& assignment) {
  std::vector<const SparsePoly*> images;
  images.reserve(f.num_variables());
  for (const auto& name : f.variables()) {
    const auto it = assignment.find(name);
    if (it == assignment.end()) {
      throw PreconditionError("no assignment for variable " + name);
    }
    images.push_back(&it->second);
  }
  if (assignment.empty()) return f;
  const auto& target_vars = assignment.begin()->second.variables();
  for (const auto& [name, image] : assignment) {
    if (image.variables() != target_vars) {
      throw PreconditionError("assigned polynomials do not share one variable list");
    }
  }
  // Powers of each image are cached; exponents in our use stay small.
  std::vector<std::vector<SparsePoly>> powers(images.size());
  auto power_of = [&](std::size_t var, int k) -> const SparsePoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(SparsePoly::constant(target_vars, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * *images[var]);
    return cache[static_cast<std::size_t>(k)];
  };
  SparsePoly out(target_vars);
  for (const auto& [e, c] : f.terms()) {
    SparsePoly term = SparsePoly::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = term * power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

std::string to_string(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    for (int k : e) has_var = has_var || k != 0;
    bool wrote = false;
    if (!has_var || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << f.variables()[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace octodp
