#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "g2/group/matrix.hpp"
#include "g2/octonion/octonion.hpp"
#include "g2/scalars/polynomial.hpp"
#include "g2/words/trace_expr.hpp"

namespace g2 {

/// S: norms and traces of increasing words of length >= 1.
/// S0: the traceless family, norms and increasing words of length >= 2.
enum class Family { S, S0 };

Family parse_family(const std::string& name);
std::string family_name(Family family);

/// All descriptors of degree <= d over n octonions in descriptor order
/// (degree, norms first, then lexicographic).
std::vector<InvariantDescriptor> enumerate_set(Family family, int n, int d);

/// 2 * (tr(1234) + 1/2(...)), the right-hand side of the expanded Q' formula
/// scaled to integer coefficients.
TraceExpr q_prime_expansion_twice();

/// (1/24) sum over S_4 of sign * tr(((a_s1 a_s2) a_s3) a_s4); needs 24 to be
/// invertible.
template <RingElement T>
T q_prime_skew(const Octonion<T>& a1, const Octonion<T>& a2, const Octonion<T>& a3, const Octonion<T>& a4) {
  const auto ring = a1.ring();
  auto d24 = ring.from_integer(Integer(24));
  if (!is_unit(d24)) throw DomainError("q_prime: 24 is not invertible in " + ring.name());
  const Octonion<T>* a[4] = {&a1, &a2, &a3, &a4};
  int perm[4] = {0, 1, 2, 3};
  T sum = ring.zero();
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    T t = trace(((*a[perm[0]] * *a[perm[1]]) * *a[perm[2]]) * *a[perm[3]]);
    sum = inversions % 2 == 0 ? sum + t : sum - t;
  } while (std::next_permutation(perm, perm + 4));
  return sum * d24.inverse();
}

/// The expanded formula; needs only 2 to be invertible.
template <RingElement T>
T q_prime_expanded(const Octonion<T>& a1, const Octonion<T>& a2, const Octonion<T>& a3, const Octonion<T>& a4) {
  const auto ring = a1.ring();
  auto two = ring.from_integer(Integer(2));
  if (!is_unit(two)) throw DomainError("q_prime: 2 is not invertible in " + ring.name());
  return evaluate(q_prime_expansion_twice(), Tuple<T>{a1, a2, a3, a4}) * two.inverse();
}

/// Path (ii), the one defined in every ring where 2 is a unit.
template <RingElement T>
T q_prime(const Octonion<T>& a1, const Octonion<T>& a2, const Octonion<T>& a3, const Octonion<T>& a4) {
  return q_prime_expanded(a1, a2, a3, a4);
}

/// z_{i3}, z_{i4}, z_{i6}, z_{i7} -> 0 for every block i.
template <RingElement C>
Polynomial<C> psi(const Polynomial<C>& f) {
  Polynomial<C> out(f.coefficients());
  for (const auto& [m, c] : f.terms()) {
    bool killed = false;
    for (std::size_t k = 0; k < m.size() && !killed; ++k) {
      Variable v = m.variable(k);
      killed = v.block >= 1 && (v.index == 3 || v.index == 4 || v.index == 6 || v.index == 7);
    }
    if (!killed) out += Polynomial<C>::monomial(f.coefficients(), m, c);
  }
  return out;
}

template <RingElement C>
Octonion<Polynomial<C>> psi_hat(const Octonion<Polynomial<C>>& a) {
  std::vector<Polynomial<C>> z;
  for (const auto& c : a.coords()) z.push_back(psi(c));
  return Octonion<Polynomial<C>>::from_coords(z);
}

/// (a1 a2; a3 a4) -> (a1, (a2, 0, 0), (a3, 0, 0), a4).
template <RingElement T>
Octonion<T> embed_matrix(const Matrix<T>& a) {
  if (a.rows() != 2 || a.cols() != 2) throw DomainError("embed_matrix needs a 2x2 matrix");
  const auto ring = a.ring();
  return {a(0, 0), {a(0, 1), ring.zero(), ring.zero()}, {a(1, 0), ring.zero(), ring.zero()}, a(1, 1)};
}

template <RingElement T>
T matrix_trace(const Matrix<T>& a) {
  T s = a.ring().zero();
  for (std::size_t i = 0; i < a.rows(); ++i) s = s + a(i, i);
  return s;
}

/// [[z_{i1}, z_{i2}], [z_{i5}, z_{i8}]].
template <RingElement C>
Matrix<Polynomial<C>> generic_matrix(const PolynomialRing<C>& ring, int i) {
  Matrix<Polynomial<C>> m(ring, 2, 2);
  m(0, 0) = ring.variable(Variable::z(i, 1));
  m(0, 1) = ring.variable(Variable::z(i, 2));
  m(1, 0) = ring.variable(Variable::z(i, 5));
  m(1, 1) = ring.variable(Variable::z(i, 8));
  return m;
}

/// det(Z^_i) or tr(Z^_{i1} ... Z^_{ik}) with i1 < ... < ik.
struct MatrixDescriptor {
  enum class Kind { Det, Trace };
  Kind kind = Kind::Trace;
  std::vector<int> indices;

  static MatrixDescriptor det(int i);
  static MatrixDescriptor trace(std::vector<int> indices);

  int degree() const { return kind == Kind::Det ? 2 : static_cast<int>(indices.size()); }
  std::string to_string() const;
  /// The octonion invariant whose image under Psi this is.
  InvariantDescriptor psi_preimage() const;

  bool operator==(const MatrixDescriptor&) const = default;
};

struct MatrixInvariantSet {
  std::vector<MatrixDescriptor> descriptors;
  /// Outside characteristic two only traces of length <= 3 belong to the
  /// minimal generating set.
  static constexpr int odd_characteristic_trace_bound = 3;

  /// The subset that is minimal generating in the given characteristic.
  std::vector<MatrixDescriptor> minimal_for_characteristic(int characteristic) const;
};

/// det(Z^_i) for i <= n (if d >= 2) and increasing traces of length <= d,
/// in the same order as enumerate_set.
MatrixInvariantSet matrix_invariants(int n, int d);

template <RingElement T>
T eval_matrix_descriptor(const MatrixDescriptor& d, const std::vector<Matrix<T>>& matrices) {
  if (static_cast<std::size_t>(d.indices.back()) > matrices.size()) {
    throw DomainError(d.to_string() + " exceeds the number of matrices");
  }
  const Matrix<T>& first = matrices[static_cast<std::size_t>(d.indices[0] - 1)];
  if (d.kind == MatrixDescriptor::Kind::Det) return first.determinant();
  Matrix<T> acc = first;
  for (std::size_t k = 1; k < d.indices.size(); ++k) acc = acc * matrices[static_cast<std::size_t>(d.indices[k] - 1)];
  return matrix_trace(acc);
}

}  // namespace g2
