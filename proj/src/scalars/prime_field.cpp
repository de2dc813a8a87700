#include "g2/scalars/prime_field.hpp"

#include <ostream>

#include "g2/error.hpp"

namespace g2 {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus >= (std::uint64_t{1} << 32) || !is_prime(modulus)) {
    throw DomainError("GF(p) needs a prime p < 2^32, got " + std::to_string(modulus));
  }
}

PrimeFieldElement PrimeField::zero() const { return {0, modulus_}; }
PrimeFieldElement PrimeField::one() const { return {1, modulus_}; }

PrimeFieldElement PrimeField::from_integer(const Integer& value) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), modulus_);
  return {r.get_ui(), modulus_};
}

PrimeFieldElement PrimeField::from_int(std::int64_t value) const {
  auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return {static_cast<std::uint64_t>(r), modulus_};
}

PrimeFieldElement PrimeField::element(std::uint64_t residue) const { return {residue % modulus_, modulus_}; }

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (residue_ == 0) throw DomainError("inverse of zero in GF(" + std::to_string(modulus_) + ")");
  // a^(p-2) = a^{-1} by Fermat.
  return power(*this, modulus_ - 2);
}

void PrimeFieldElement::check(const PrimeFieldElement& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw RingMismatch("GF(" + std::to_string(modulus_) + ") against GF(" + std::to_string(rhs.modulus_) + ")");
  }
}

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& value) { return os << value.residue(); }

}  // namespace g2
