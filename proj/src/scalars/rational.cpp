#include "g2/scalars/rational.hpp"

#include <ostream>

#include "g2/error.hpp"

namespace g2 {

Rational RationalField::zero() const { return Rational(0); }
Rational RationalField::one() const { return Rational(1); }
Rational RationalField::from_integer(const Integer& value) const { return Rational(value, Integer(1)); }

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (sgn(denominator) == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

bool in_z_half(const Rational& value) {
  Integer den = value.denominator();
  // A positive integer is a power of two iff it has a single set bit.
  return mpz_popcount(den.get_mpz_t()) == 1;
}

}  // namespace g2
