#pragma once

#include <iosfwd>
#include <string>

#include "g2/scalars/ring.hpp"

namespace g2 {

class Rational;

struct RationalField {
  using element_type = Rational;

  Rational zero() const;
  Rational one() const;
  Rational from_integer(const Integer& value) const;
  int characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const = default;
};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);
  explicit Rational(mpq_class value);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  RationalField ring() const { return {}; }
  bool is_zero() const { return sgn(value_) == 0; }
  Rational inverse() const;

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(const Rational& lhs, const Rational& rhs) { return lhs * rhs.inverse(); }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend bool operator<(const Rational& lhs, const Rational& rhs) { return lhs.value_ < rhs.value_; }

  /// `num` or `num/den`.
  std::string to_string() const;

 private:
  mpq_class value_;
};

template <>
inline constexpr bool is_field_v<Rational> = true;

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// True iff the reduced denominator is a power of two.
bool in_z_half(const Rational& value);

}  // namespace g2
