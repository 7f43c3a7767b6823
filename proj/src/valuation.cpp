#include "octodp/valuation.hpp"

#include "octodp/error.hpp"

namespace octodp {

std::string to_string(const ExtValuation& v) {
  return v.is_infinite() ? std::string("inf") : std::to_string(v.value());
}

std::string to_string(const ExtRational& v) {
  return v.is_infinite() ? std::string("inf") : to_string(v.value());
}

Prime::Prime(long value) : value_(value) {
  if (value < 5) {
    throw PreconditionError("prime must be at least 5, got " + std::to_string(value));
  }
  for (long q = 2; q * q <= value; ++q) {
    if (value % q == 0) {
      throw PreconditionError(std::to_string(value) + " is not prime");
    }
  }
}

ExtValuation valuation(const Integer& z, const Prime& p) {
  if (z == 0) return ExtValuation::infinity();
  Integer rest = z;
  const Integer base = p.value();
  // mpz_remove strips every factor p and reports how many were removed.
  const auto count = mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), base.get_mpz_t());
  return ExtValuation(static_cast<long>(count));
}

ExtValuation valuation(const Rational& q, const Prime& p) {
  if (q == 0) return ExtValuation::infinity();
  const auto num = valuation(q.get_num(), p);
  const auto den = valuation(q.get_den(), p);
  return ExtValuation(num.value() - den.value());
}

}  // namespace octodp
