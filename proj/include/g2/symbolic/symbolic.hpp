#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2/invariants/invariants.hpp"
#include "g2/scalars/scalars.hpp"
#include "g2/words/trace_expr.hpp"
#include "g2/words/word.hpp"

namespace g2 {

/// Z_i with coordinates z_{i1}, ..., z_{i8}.
template <RingElement C>
Octonion<Polynomial<C>> generic_octonion(const PolynomialRing<C>& ring, int i) {
  std::vector<Polynomial<C>> z;
  for (int j = 1; j <= 8; ++j) z.push_back(ring.variable(Variable::z(i, j)));
  return Octonion<Polynomial<C>>::from_coords(z);
}

/// X_i: as Z_i with beta = -z_{i1}.
template <RingElement C>
Octonion<Polynomial<C>> generic_traceless(const PolynomialRing<C>& ring, int i) {
  std::vector<Polynomial<C>> z;
  for (int j = 1; j <= 7; ++j) z.push_back(ring.variable(Variable::z(i, j)));
  z.push_back(-ring.variable(Variable::z(i, 1)));
  return Octonion<Polynomial<C>>::from_coords(z);
}

template <RingElement C>
Tuple<Polynomial<C>> generic_tuple(const PolynomialRing<C>& ring, int n, bool traceless = false) {
  Tuple<Polynomial<C>> out;
  for (int i = 1; i <= n; ++i) out.push_back(traceless ? generic_traceless(ring, i) : generic_octonion(ring, i));
  return out;
}

enum class Identity { Eq1Trace, Eq1Norm, Eq2, Eq3a, Eq3, Eq4Left, Eq4Right, Eq5Left, Eq5Right, Eq6, EqN };

const std::vector<Identity>& all_identities();
std::string identity_name(Identity id);
/// Number of generic octonions the identity is stated in.
int identity_arity(Identity id);

struct IdentityResult {
  Identity id;
  std::string field;
  bool passed = false;
  /// First surviving monomial of the difference, with its coefficient.
  std::string failing_monomial;
};

/// Expands the identity in generic octonions over Q (characteristic 0) or
/// GF(p) and checks that the difference vanishes identically.
IdentityResult verify_identity(Identity id, int characteristic = 0);

struct LemmaQResult {
  bool passed = false;
  bool coefficients_in_z_half = false;
  bool specialization_passed = false;
  std::size_t skew_terms = 0;
  std::string failing_monomial;
};

/// Skew symmetrization against the expanded formula in Z_1..Z_4 over Q.
LemmaQResult verify_lemmaQ();

/// Generic tr(((Z1 Z2) Z3) Z4) skew-symmetrized, over Q.
QPoly q_prime_generic();

struct PsiBridgeResult {
  /// Psi^ of every left-normed word equals F of the matrix product.
  bool words = false;
  /// Psi of the trace of every left-normed word equals the matrix trace.
  bool traces = false;
  /// Psi(n(Z_i)) = det(Z^_i).
  bool norms = false;
  /// Every matrix invariant of degree <= max_length is Psi of its preimage.
  bool containment = false;
  std::size_t words_checked = 0;

  bool passed() const { return words && traces && norms && containment; }
};

/// Checks the Psi bridge symbolically over Q for all index sequences in
/// 1..n of length 1..max_length.
PsiBridgeResult verify_psi_bridge(int n, int max_length);

/// A candidate generator for the decomposability check: a label and its
/// multihomogeneous polynomial.
template <RingElement C>
struct LabelledPolynomial {
  std::string label;
  Polynomial<C> value;
};

template <RingElement C>
struct Decomposition {
  bool expressible = false;
  /// Products of generators (labels joined by '*') with their coefficients.
  std::vector<std::pair<std::string, C>> certificate;
  std::size_t basis_size = 0;
  /// Certificate re-expanded and compared with the target.
  bool verified = false;
};

/// Is `target` a linear combination of products of at least two generators
/// (at least one with `include_linear`) in its multidegree component? Blocks
/// 1..n define the multidegree. Solved by fraction-free elimination with the
/// first nonzero pivot in column order.
template <RingElement C>
Decomposition<C> decomposability_check(const Polynomial<C>& target, const std::vector<LabelledPolynomial<C>>& generators,
                                       int n, bool include_linear = false);

/// Octonion-side wrapper: generators and target are descriptors evaluated on
/// generic (or generic traceless) octonions over Q.
Decomposition<Rational> decomposability_check(const InvariantDescriptor& target,
                                              const std::vector<InvariantDescriptor>& generators, int n,
                                              bool include_linear = false, bool traceless = false);

/// Trace of an arbitrary word as target.
Decomposition<Rational> decomposability_check(const NAWord& target, const std::vector<InvariantDescriptor>& generators,
                                              int n, bool include_linear = false);

/// Matrix-side wrapper over Q.
Decomposition<Rational> decomposability_check(const MatrixDescriptor& target,
                                              const std::vector<MatrixDescriptor>& generators, int n,
                                              bool include_linear = false);

}  // namespace g2
