#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "g2/scalars/ring.hpp"

namespace g2 {

class PrimeFieldElement;

/// GF(p) for a prime p < 2^32, chosen at runtime.
class PrimeField {
 public:
  using element_type = PrimeFieldElement;

  /// Throws DomainError if `modulus` is not a prime below 2^32.
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  int characteristic() const { return static_cast<int>(modulus_); }

  PrimeFieldElement zero() const;
  PrimeFieldElement one() const;
  PrimeFieldElement from_integer(const Integer& value) const;
  PrimeFieldElement from_int(std::int64_t value) const;
  PrimeFieldElement element(std::uint64_t residue) const;

  std::string name() const { return "GF(" + std::to_string(modulus_) + ")"; }
  bool operator==(const PrimeField&) const = default;

 private:
  friend class PrimeFieldElement;
  // Skips the primality test; only for moduli already validated.
  PrimeField(std::uint64_t modulus, int) : modulus_(modulus) {}

  std::uint64_t modulus_;
};

class PrimeFieldElement {
 public:
  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return modulus_; }
  PrimeField ring() const { return PrimeField(modulus_, 0); }
  bool is_zero() const { return residue_ == 0; }
  bool is_one() const { return residue_ == 1; }

  /// Fermat inverse; throws DomainError on zero.
  PrimeFieldElement inverse() const;

  PrimeFieldElement& operator+=(const PrimeFieldElement& rhs) {
    check(rhs);
    residue_ += rhs.residue_;
    if (residue_ >= modulus_) residue_ -= modulus_;
    return *this;
  }
  PrimeFieldElement& operator-=(const PrimeFieldElement& rhs) {
    check(rhs);
    residue_ = residue_ >= rhs.residue_ ? residue_ - rhs.residue_ : residue_ + modulus_ - rhs.residue_;
    return *this;
  }
  PrimeFieldElement& operator*=(const PrimeFieldElement& rhs) {
    check(rhs);
    residue_ = (residue_ * rhs.residue_) % modulus_;
    return *this;
  }

  friend PrimeFieldElement operator+(PrimeFieldElement lhs, const PrimeFieldElement& rhs) { return lhs += rhs; }
  friend PrimeFieldElement operator-(PrimeFieldElement lhs, const PrimeFieldElement& rhs) { return lhs -= rhs; }
  friend PrimeFieldElement operator*(PrimeFieldElement lhs, const PrimeFieldElement& rhs) { return lhs *= rhs; }
  friend PrimeFieldElement operator/(const PrimeFieldElement& lhs, const PrimeFieldElement& rhs) {
    return lhs * rhs.inverse();
  }
  PrimeFieldElement operator-() const {
    return PrimeFieldElement(residue_ == 0 ? 0 : modulus_ - residue_, modulus_);
  }

  friend bool operator==(const PrimeFieldElement& lhs, const PrimeFieldElement& rhs) {
    lhs.check(rhs);
    return lhs.residue_ == rhs.residue_;
  }

  std::string to_string() const { return std::to_string(residue_); }

 private:
  friend class PrimeField;
  PrimeFieldElement(std::uint64_t residue, std::uint64_t modulus) : residue_(residue), modulus_(modulus) {}
  void check(const PrimeFieldElement& rhs) const;

  std::uint64_t residue_;
  std::uint64_t modulus_;
};

template <>
inline constexpr bool is_field_v<PrimeFieldElement> = true;

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& value);

}  // namespace g2
