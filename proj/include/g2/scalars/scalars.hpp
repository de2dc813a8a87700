#pragma once

#include "g2/scalars/polynomial.hpp"
#include "g2/scalars/prime_field.hpp"
#include "g2/scalars/rational.hpp"
#include "g2/scalars/ring.hpp"

namespace g2 {

using QPoly = Polynomial<Rational>;
using FpPoly = Polynomial<PrimeFieldElement>;

inline PolynomialRing<Rational> q_poly_ring() { return {RationalField{}}; }
inline PolynomialRing<PrimeFieldElement> fp_poly_ring(std::uint64_t p) { return {PrimeField(p)}; }

/// Coefficients of a polynomial over Q all in Z[1/2].
bool coefficients_in_Z_half(const QPoly& f);

}  // namespace g2
