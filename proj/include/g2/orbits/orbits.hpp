#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "g2/group/enumerate.hpp"
#include "g2/group/group.hpp"
#include "g2/invariants/invariants.hpp"
#include "g2/octonion/octonion.hpp"
#include "g2/scalars/scalars.hpp"
#include "g2/words/trace_expr.hpp"

namespace g2 {

namespace detail {

template <RingElement T>
Matrix<T> coordinate_rows(const ring_of_t<T>& ring, const Tuple<T>& tuple) {
  Matrix<T> m(ring, tuple.size(), 8);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    auto c = tuple[i].basis_coords();
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = c[j];
  }
  return m;
}

template <RingElement T>
void check_tuple(const Tuple<T>& tuple) {
  if (tuple.empty()) throw DomainError("empty tuple");
  for (const auto& a : tuple) {
    if (!(a.ring() == tuple.front().ring())) throw RingMismatch("tuple entries over different rings");
  }
}

}  // namespace detail

/// Dimension of the span of the entries.
template <RingElement T>
std::size_t rank(const Tuple<T>& tuple) {
  if (tuple.empty()) return 0;
  detail::check_tuple(tuple);
  return matrix_rank(detail::coordinate_rows(tuple.front().ring(), tuple));
}

/// Reduced echelon basis (in the coordinate order e1, e2, u, v) of the
/// non-unital subalgebra generated by the entries.
template <RingElement T>
Tuple<T> algebra_closure(const Tuple<T>& tuple) {
  detail::check_tuple(tuple);
  const auto ring = tuple.front().ring();
  auto echelon = [&](const Tuple<T>& xs) {
    Matrix<T> m = detail::coordinate_rows(ring, xs);
    std::size_t r = rref(m).size();
    Tuple<T> out;
    for (std::size_t i = 0; i < r; ++i) out.push_back(Octonion<T>::from_basis_coords(m.row(i)));
    return out;
  };
  Tuple<T> basis = echelon(tuple);
  while (true) {
    Tuple<T> grown = basis;
    for (const auto& a : basis) {
      for (const auto& b : basis) grown.push_back(a * b);
    }
    Tuple<T> next = echelon(grown);
    if (next.size() == basis.size()) return next;
    basis = std::move(next);
  }
}

/// (a A)_i = sum_k A_{ki} a_k.
template <RingElement T>
Tuple<T> gl_right_action(const Tuple<T>& tuple, const Matrix<T>& a) {
  detail::check_tuple(tuple);
  if (a.rows() != tuple.size() || a.cols() != tuple.size()) throw DomainError("matrix size does not match tuple length");
  if (!is_unit(a.determinant())) throw DomainError("matrix is not invertible");
  const auto ring = tuple.front().ring();
  Tuple<T> out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    auto sum = Octonion<T>::zero(ring);
    for (std::size_t k = 0; k < tuple.size(); ++k) sum = sum + tuple[k].scaled(a(k, i));
    out.push_back(sum);
  }
  return out;
}

template <RingElement T>
struct SeparationReport {
  bool separated = false;
  std::optional<InvariantDescriptor> witness;
  std::optional<std::pair<T, T>> values;
};

/// Evaluates the descriptors of the family in enumeration order and stops at
/// the first one that differs.
template <RingElement T>
SeparationReport<T> separate(const Tuple<T>& a, const Tuple<T>& b, Family family, int d) {
  detail::check_tuple(a);
  detail::check_tuple(b);
  if (a.size() != b.size()) throw DomainError("tuples of different lengths");
  if (!(a.front().ring() == b.front().ring())) throw RingMismatch("tuples over different rings");
  SeparationReport<T> report;
  for (const auto& desc : enumerate_set(family, static_cast<int>(a.size()), d)) {
    T x = eval_descriptor(desc, a);
    T y = eval_descriptor(desc, b);
    if (!(x == y)) {
      report.separated = true;
      report.witness = desc;
      report.values.emplace(std::move(x), std::move(y));
      return report;
    }
  }
  return report;
}

/// Exponent of t picked up by basis coordinate k (order e1, e2, u, v).
inline int theta_exponent(const OneParamSubgroup& lambda, std::size_t k) {
  if (k < 2) return 0;
  if (k < 5) return lambda.lambda[k - 2];
  return -lambda.lambda[k - 5];
}

template <RingElement T>
struct LimitResult {
  bool exists = false;
  Tuple<T> value;
};

/// lim_{t -> 0} theta_lambda(t) a.
template <RingElement T>
LimitResult<T> limit(const OneParamSubgroup& lambda, const Tuple<T>& tuple) {
  detail::check_tuple(tuple);
  const auto ring = tuple.front().ring();
  LimitResult<T> result;
  for (const auto& a : tuple) {
    auto c = a.basis_coords();
    for (std::size_t k = 0; k < 8; ++k) {
      int e = theta_exponent(lambda, k);
      if (c[k].is_zero()) continue;
      if (e < 0) return {false, {}};
      if (e > 0) c[k] = ring.zero();
    }
    result.value.push_back(Octonion<T>::from_basis_coords(c));
  }
  result.exists = true;
  return result;
}

/// The curve theta_lambda(t) a over K[t] (t = parameter 1). Requires the
/// limit to exist so that only non-negative powers occur.
template <RingElement C>
Tuple<Polynomial<C>> theta_curve(const OneParamSubgroup& lambda, const Tuple<C>& tuple) {
  detail::check_tuple(tuple);
  PolynomialRing<C> ring{tuple.front().ring()};
  auto t = ring.variable(Variable::parameter(1));
  Tuple<Polynomial<C>> out;
  for (const auto& a : tuple) {
    auto c = a.basis_coords();
    std::vector<Polynomial<C>> lifted;
    for (std::size_t k = 0; k < 8; ++k) {
      int e = theta_exponent(lambda, k);
      if (e < 0 && !c[k].is_zero()) throw DomainError("limit does not exist along theta(" + lambda.to_string() + ")");
      lifted.push_back(Polynomial<C>(ring.coefficients, c[k]) * power(t, static_cast<std::uint64_t>(e < 0 ? 0 : e)));
    }
    out.push_back(Octonion<Polynomial<C>>::from_basis_coords(lifted));
  }
  return out;
}

/// Checks that f(theta(t) a) is a polynomial in t with constant term f(lim)
/// for every f in S_n^(d).
template <RingElement C>
bool limit_is_in_closure(const OneParamSubgroup& lambda, const Tuple<C>& tuple, int d = 8) {
  auto lim = limit(lambda, tuple);
  if (!lim.exists) return false;
  auto curve = theta_curve(lambda, tuple);
  const auto zero = std::map<Variable, C>{{Variable::parameter(1), tuple.front().ring().zero()}};
  for (const auto& desc : enumerate_set(Family::S, static_cast<int>(tuple.size()), d)) {
    auto along = eval_descriptor(desc, curve);
    if (!(substitute(along, zero) == Polynomial<C>(along.coefficients(), eval_descriptor(desc, lim.value)))) return false;
  }
  return true;
}

template <RingElement T>
struct NonclosednessWitness {
  Tuple<T> tuple;
  OneParamSubgroup lambda;
  Tuple<T> expected;
  LimitResult<T> computed;
  std::size_t rank_before = 0;
  std::size_t rank_after = 0;

  bool reproduced() const { return computed.exists && computed.value == expected && rank_after < rank_before; }
};

/// Subalgebra bases of dimension <= 3 (characteristic two) whose classes are
/// not closed, each with a one-parameter subgroup whose limit drops the rank.
template <RingElement T>
std::vector<NonclosednessWitness<T>> nonclosedness_witnesses(const ring_of_t<T>& ring) {
  using O = Octonion<T>;
  const O one = O::identity(ring), e1 = O::e1(ring), e2 = O::e2(ring), z = O::zero(ring);
  const O u1 = O::u(ring, 1), v1 = O::v(ring, 1), v2 = O::v(ring, 2), v3 = O::v(ring, 3);
  const OneParamSubgroup fwd({1, -1, 0}), back({-1, 1, 0});
  std::vector<std::tuple<Tuple<T>, OneParamSubgroup, Tuple<T>>> rows{
      {{u1}, fwd, {z}},
      {{one, u1}, fwd, {one, z}},
      {{u1, v2}, fwd, {z, z}},
      {{e1, u1}, fwd, {e1, z}},
      {{e1, v1}, back, {e1, z}},
      {{one, u1, v2}, fwd, {one, z, z}},
      {{e1, e2, u1}, fwd, {e1, e2, z}},
      {{e1, u1, v2}, fwd, {e1, z, z}},
      {{u1, v2, v3}, fwd, {z, z, v3}},
  };
  std::vector<NonclosednessWitness<T>> out;
  for (auto& [tuple, lambda, expected] : rows) {
    auto computed = limit(lambda, tuple);
    std::size_t after = computed.exists ? rank(computed.value) : rank(tuple);
    out.push_back({tuple, lambda, expected, std::move(computed), rank(tuple), after});
  }
  return out;
}

/// (tr(a_i a_j))_{ij}.
template <RingElement T>
Matrix<T> gram_matrix(const Tuple<T>& tuple) {
  detail::check_tuple(tuple);
  Matrix<T> m(tuple.front().ring(), tuple.size(), tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = 0; j < tuple.size(); ++j) m(i, j) = trace(tuple[i] * tuple[j]);
  }
  return m;
}

/// (e1, e2, u1, v1, u2, v2, u3, v3).
template <RingElement T>
Tuple<T> standard_basis_tuple(const ring_of_t<T>& ring) {
  using O = Octonion<T>;
  return {O::e1(ring), O::e2(ring), O::u(ring, 1), O::v(ring, 1), O::u(ring, 2), O::v(ring, 2), O::u(ring, 3), O::v(ring, 3)};
}

/// Given b = g (e1, e2, u1, v1, u2, v2, u3, v3), recovers g by matching the
/// multiplication table of b against that of the standard basis. Returns
/// nullopt if b is not such an image.
template <RingElement T>
std::optional<GroupElement<T>> reconstruct_automorphism(const Tuple<T>& b) {
  detail::check_tuple(b);
  if (b.size() != 8) throw DomainError("reconstruction needs an 8-tuple");
  const auto ring = b.front().ring();
  if (!is_unit(gram_matrix(b).determinant())) return std::nullopt;
  // Position of each standard basis vector in the coordinate order e1, e2, u, v.
  static constexpr std::array<std::size_t, 8> slot{0, 1, 2, 5, 3, 6, 4, 7};
  Matrix<T> m(ring, 8, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    auto col = b[k].basis_coords();
    for (std::size_t r = 0; r < 8; ++r) m(r, slot[k]) = col[r];
  }
  GroupElement<T> f(std::move(m), {"reconstructed"});
  auto a = standard_basis_tuple<T>(ring);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      if (!(f.apply(a[i] * a[j]) == b[i] * b[j])) return std::nullopt;
    }
  }
  return f;
}

/// Necessary-condition fingerprint of the subalgebra spanned by a basis.
template <RingElement T>
struct SubalgebraFingerprint {
  std::size_t dimension = 0;
  bool contains_identity = false;
  std::vector<T> traces;
  std::vector<T> norms;
  /// square_zero[i]: b_i^2 = 0; product_zero[i][j]: b_i b_j = 0.
  std::vector<bool> square_zero;
  std::vector<std::vector<bool>> product_zero;
  /// Dimension of the span of all products.
  std::size_t square_dimension = 0;

  bool operator==(const SubalgebraFingerprint&) const = default;
};

/// Throws DomainError if the span is not closed under multiplication.
template <RingElement T>
SubalgebraFingerprint<T> subalgebra_class_fingerprint(const Tuple<T>& basis) {
  detail::check_tuple(basis);
  const std::size_t dim = rank(basis);
  if (dim != basis.size()) throw DomainError("basis entries are linearly dependent");
  const auto ring = basis.front().ring();
  Tuple<T> products;
  for (const auto& x : basis) {
    for (const auto& y : basis) products.push_back(x * y);
  }
  Tuple<T> all = basis;
  all.insert(all.end(), products.begin(), products.end());
  if (rank(all) != dim) throw DomainError("span is not closed under multiplication");

  SubalgebraFingerprint<T> fp;
  fp.dimension = dim;
  Tuple<T> with_one = basis;
  with_one.push_back(Octonion<T>::identity(ring));
  fp.contains_identity = rank(with_one) == dim;
  for (std::size_t i = 0; i < dim; ++i) {
    fp.traces.push_back(trace(basis[i]));
    fp.norms.push_back(norm(basis[i]));
    fp.square_zero.push_back(products[i * dim + i].is_zero());
    std::vector<bool> row;
    for (std::size_t j = 0; j < dim; ++j) row.push_back(products[i * dim + j].is_zero());
    fp.product_zero.push_back(std::move(row));
  }
  fp.square_dimension = rank(products);
  return fp;
}

/// The subalgebra bases of dimension <= 3 listed for characteristic two.
template <RingElement T>
std::vector<std::pair<std::string, Tuple<T>>> low_dimensional_subalgebra_bases(const ring_of_t<T>& ring) {
  using O = Octonion<T>;
  const O one = O::identity(ring), e1 = O::e1(ring), e2 = O::e2(ring);
  const O u1 = O::u(ring, 1), v1 = O::v(ring, 1), v2 = O::v(ring, 2), v3 = O::v(ring, 3);
  return {
      {"{1}", {one}},
      {"{u1}", {u1}},
      {"{e1}", {e1}},
      {"{1,u1}", {one, u1}},
      {"{u1,v2}", {u1, v2}},
      {"{e1,u1}", {e1, u1}},
      {"{e1,v1}", {e1, v1}},
      {"{e1,e2}", {e1, e2}},
      {"{1,u1,v2}", {one, u1, v2}},
      {"{e1,e2,u1}", {e1, e2, u1}},
      {"{e1,u1,v2}", {e1, u1, v2}},
      {"{u1,v2,v3}", {u1, v2, v3}},
  };
}

/// Octonion over GF(2) as a byte: bit j-1 is the coordinate z_j in the order
/// alpha, u1, u2, u3, v1, v2, v3, beta.
std::uint8_t encode_gf2(const Octonion<PrimeFieldElement>& a);
Octonion<PrimeFieldElement> decode_gf2(std::uint8_t bits);

struct OracleResult {
  bool equal = false;
  std::optional<GroupElement<PrimeFieldElement>> witness;
};

/// Brute-force orbit test over the enumerated G2(F_2). Verdicts of
/// inequivalence hold over F_2 only; orbits over the algebraic closure may
/// be coarser.
class OrbitOracle {
 public:
  explicit OrbitOracle(const G2Table& table);

  std::size_t group_size() const { return images_.size(); }
  /// Throws DomainError unless both tuples are over GF(2) with equal length.
  OracleResult equal(const Tuple<PrimeFieldElement>& a, const Tuple<PrimeFieldElement>& b) const;
  /// Image of an encoded octonion under group element k.
  std::uint8_t act(std::size_t k, std::uint8_t bits) const;

 private:
  const G2Table* table_;
  // images_[k][j]: encoded image of the octonion with only z_{j+1} set.
  std::vector<std::array<std::uint8_t, 8>> images_;
};

OracleResult orbit_equal_oracle(const Tuple<PrimeFieldElement>& a, const Tuple<PrimeFieldElement>& b);

/// Enumeration of G2(F_2) shared by the oracle helpers; computed once.
const G2Table& g2_over_f2();

}  // namespace g2
