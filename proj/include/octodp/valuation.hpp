#pragma once

#include "octodp/rational.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace octodp {

/// A totally ordered value set extended by +infinity.
template <typename T>
class Extended {
 public:
  enum class Kind { Finite, Infinite };

  Extended() = default;
  explicit Extended(T value) : kind_(Kind::Finite), value_(std::move(value)) {}

  static Extended infinity() {
    Extended e;
    e.kind_ = Kind::Infinite;
    return e;
  }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  Kind kind() const { return kind_; }

  /// Precondition: is_finite().
  const T& value() const {
    if (is_infinite()) throw std::logic_error("value() of +infinity");
    return value_;
  }

  friend bool operator==(const Extended& lhs, const Extended& rhs) {
    if (lhs.kind_ != rhs.kind_) return false;
    return lhs.is_infinite() || lhs.value_ == rhs.value_;
  }
  friend bool operator<(const Extended& lhs, const Extended& rhs) {
    if (lhs.is_infinite()) return false;
    if (rhs.is_infinite()) return true;
    return lhs.value_ < rhs.value_;
  }
  friend bool operator>(const Extended& lhs, const Extended& rhs) { return rhs < lhs; }
  friend bool operator<=(const Extended& lhs, const Extended& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const Extended& lhs, const Extended& rhs) { return !(lhs < rhs); }

  friend Extended operator+(const Extended& lhs, const Extended& rhs) {
    if (lhs.is_infinite() || rhs.is_infinite()) return infinity();
    return Extended(lhs.value_ + rhs.value_);
  }

 private:
  Kind kind_ = Kind::Finite;
  T value_{};
};

using ExtValuation = Extended<long>;
using ExtRational = Extended<Rational>;

std::string to_string(const ExtValuation& v);
std::string to_string(const ExtRational& v);

/// A prime p >= 5, validated at construction.
class Prime {
 public:
  explicit Prime(long value);
  long value() const { return value_; }
  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  long value_;
};

/// Exponent of p in q; +infinity for q = 0.
ExtValuation valuation(const Rational& q, const Prime& p);
ExtValuation valuation(const Integer& z, const Prime& p);

}  // namespace octodp
