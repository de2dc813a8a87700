#pragma once

#include <random>

#include "g2/octonion/octonion.hpp"
#include "g2/scalars/scalars.hpp"

namespace g2::test {

inline PrimeFieldElement random_fp(const PrimeField& f, std::mt19937_64& rng) {
  return f.element(rng() % f.modulus());
}

inline Rational random_q(std::mt19937_64& rng) {
  auto num = static_cast<long>(rng() % 11) - 5;
  auto den = static_cast<long>(rng() % 3) + 1;
  return Rational(Integer(num), Integer(den));
}

inline Octonion<PrimeFieldElement> random_octonion(const PrimeField& f, std::mt19937_64& rng) {
  std::vector<PrimeFieldElement> z;
  for (int k = 0; k < 8; ++k) z.push_back(random_fp(f, rng));
  return Octonion<PrimeFieldElement>::from_coords(z);
}

inline Octonion<Rational> random_octonion(const RationalField&, std::mt19937_64& rng) {
  std::vector<Rational> z;
  for (int k = 0; k < 8; ++k) z.push_back(random_q(rng));
  return Octonion<Rational>::from_coords(z);
}

template <class Ring>
auto random_tuple(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  using T = typename Ring::element_type;
  Tuple<T> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(random_octonion(ring, rng));
  return out;
}

/// Octonion with small integer coordinates given in z-order.
template <class Ring>
auto oct(const Ring& ring, std::initializer_list<long> z) {
  using T = typename Ring::element_type;
  std::vector<T> c;
  for (long x : z) c.push_back(ring.from_integer(Integer(x)));
  return Octonion<T>::from_coords(c);
}

}  // namespace g2::test
