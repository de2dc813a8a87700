#pragma once

#include <concepts>
#include <cstdint>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

namespace g2 {

using Integer = mpz_class;

/// An element of an exact commutative ring. Every element knows the ring it
/// belongs to via `ring()`, so generic code can manufacture zeros and ones
/// without a global context (prime fields carry their modulus at runtime).
template <class T>
concept RingElement = std::copyable<T> && requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  a.ring();
};

template <RingElement T>
using ring_of_t = std::remove_cvref_t<decltype(std::declval<const T&>().ring())>;

/// Elements whose units can be inverted (throws DomainError on non-units).
template <class T>
concept InvertibleElement = RingElement<T> && requires(const T& a) {
  { a.inverse() } -> std::convertible_to<T>;
};

/// Specialized to true for the coefficient fields.
template <class T>
inline constexpr bool is_field_v = false;

/// Units of a field are its nonzero elements; rings with more structure
/// (polynomials) overload this.
template <RingElement T>
bool is_unit(const T& a) {
  if constexpr (is_field_v<T>) {
    return !a.is_zero();
  } else {
    return false;
  }
}

template <RingElement T>
T power(T base, std::uint64_t exponent) {
  T result = base.ring().one();
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

template <RingElement T>
T from_integer_like(const T& like, long value) {
  return like.ring().from_integer(Integer(value));
}

}  // namespace g2
