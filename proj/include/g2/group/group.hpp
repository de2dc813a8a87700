#pragma once

#include <array>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "g2/group/matrix.hpp"
#include "g2/octonion/octonion.hpp"

namespace g2 {

/// An element of G2 as an 8x8 matrix on basis coordinates
/// (e1, e2, u1, u2, u3, v1, v2, v3), tagged with the generator word that
/// built it. Column k is the image of the k-th basis vector.
template <RingElement T>
class GroupElement {
 public:
  using ring_type = ring_of_t<T>;

  GroupElement(Matrix<T> matrix, std::vector<std::string> word)
      : matrix_(std::move(matrix)), word_(std::move(word)) {
    if (matrix_.rows() != 8 || matrix_.cols() != 8) throw DomainError("a G2 element is an 8x8 matrix");
  }

  static GroupElement identity(const ring_type& ring) { return {Matrix<T>::identity(ring, 8), {}}; }

  /// Matrix of the linear map whose value on each basis octonion is `f`.
  static GroupElement from_linear_map(const ring_type& ring, const std::function<Octonion<T>(const Octonion<T>&)>& f,
                                      std::vector<std::string> word) {
    Matrix<T> m(ring, 8, 8);
    for (int k = 0; k < 8; ++k) {
      auto image = f(Octonion<T>::basis(ring, k)).basis_coords();
      for (std::size_t i = 0; i < 8; ++i) m(i, static_cast<std::size_t>(k)) = image[i];
    }
    return {std::move(m), std::move(word)};
  }

  const Matrix<T>& matrix() const { return matrix_; }
  const std::vector<std::string>& word() const { return word_; }
  ring_type ring() const { return matrix_.ring(); }

  Octonion<T> apply(const Octonion<T>& a) const { return Octonion<T>::from_basis_coords(matrix_.apply(a.basis_coords())); }
  Tuple<T> apply_tuple(const Tuple<T>& tuple) const {
    Tuple<T> out;
    out.reserve(tuple.size());
    for (const auto& a : tuple) out.push_back(apply(a));
    return out;
  }

  /// Equality of the underlying maps; words are provenance only.
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.matrix_ == b.matrix_; }

  std::string word_string() const {
    if (word_.empty()) return "id";
    std::string out;
    for (std::size_t k = 0; k < word_.size(); ++k) out += (k > 0 ? "*" : "") + word_[k];
    return out;
  }

 private:
  Matrix<T> matrix_;
  std::vector<std::string> word_;
};

/// g∘h: apply h first.
template <RingElement T>
GroupElement<T> compose(const GroupElement<T>& g, const GroupElement<T>& h) {
  std::vector<std::string> word = g.word();
  word.insert(word.end(), h.word().begin(), h.word().end());
  return {g.matrix() * h.matrix(), std::move(word)};
}

template <RingElement T>
GroupElement<T> inverse(const GroupElement<T>& g) {
  std::vector<std::string> word;
  for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) word.push_back(*it + "^-1");
  return {g.matrix().inverse(), std::move(word)};
}

namespace detail {

template <RingElement T>
std::string vec_tag(const Vec3<T>& x) {
  return "(" + x[0].to_string() + "," + x[1].to_string() + "," + x[2].to_string() + ")";
}

}  // namespace detail

/// u -> u g, v -> v g^{-T} on the u- and v-blocks; e1, e2 fixed.
template <RingElement T>
GroupElement<T> from_sl3(const Matrix<T>& g) {
  if (g.rows() != 3 || g.cols() != 3) throw DomainError("from_sl3 needs a 3x3 matrix");
  const auto ring = g.ring();
  if (!(g.determinant() == ring.one())) throw DomainError("from_sl3: determinant is " + g.determinant().to_string());
  Matrix<T> ginv = g.adjugate();
  Matrix<T> m = Matrix<T>::identity(ring, 8);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      m(2 + j, 2 + i) = g(i, j);
      m(5 + j, 5 + i) = ginv(j, i);
    }
  }
  std::string tag = "sl3[";
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) tag += (i + j > 0 ? "," : "") + g(i, j).to_string();
  }
  return {std::move(m), {tag + "]"}};
}

template <RingElement T>
GroupElement<T> delta1(const Vec3<T>& u) {
  const auto ring = u[0].ring();
  auto f = [&](const Octonion<T>& a) {
    T uv = dot(u, a.v());
    return Octonion<T>(a.alpha() - uv, u.scaled(a.alpha() - a.beta() - uv) + a.u(), a.v() - cross(a.u(), u),
                       a.beta() + uv);
  };
  return GroupElement<T>::from_linear_map(ring, f, {"d1" + detail::vec_tag(u)});
}

template <RingElement T>
GroupElement<T> delta2(const Vec3<T>& v) {
  const auto ring = v[0].ring();
  auto f = [&](const Octonion<T>& a) {
    T uv = dot(a.u(), v);
    return Octonion<T>(a.alpha() + uv, a.u() + cross(a.v(), v), v.scaled(a.beta() - a.alpha() - uv) + a.v(),
                       a.beta() - uv);
  };
  return GroupElement<T>::from_linear_map(ring, f, {"d2" + detail::vec_tag(v)});
}

/// (alpha, u, v, beta) -> (beta, -v, -u, alpha).
template <RingElement T>
GroupElement<T> hbar(const ring_of_t<T>& ring) {
  auto f = [](const Octonion<T>& a) { return Octonion<T>(a.beta(), -a.v(), -a.u(), a.alpha()); };
  return GroupElement<T>::from_linear_map(ring, f, {"hbar"});
}

struct OneParamSubgroup {
  std::array<int, 3> lambda;

  explicit OneParamSubgroup(std::array<int, 3> l) : lambda(l) {
    if (l[0] + l[1] + l[2] != 0) throw DomainError("one-parameter subgroup exponents must sum to zero");
  }
  std::string to_string() const {
    return std::to_string(lambda[0]) + "," + std::to_string(lambda[1]) + "," + std::to_string(lambda[2]);
  }
};

/// Diagonal: e_i fixed, u_j -> t^{l_j} u_j, v_j -> t^{-l_j} v_j.
template <RingElement T>
GroupElement<T> theta(const OneParamSubgroup& lambda, const T& t) {
  if (!is_unit(t)) throw DomainError("theta: t = " + t.to_string() + " is not invertible");
  const auto ring = t.ring();
  T tinv = t.inverse();
  auto pw = [&](int e) { return e >= 0 ? power(t, static_cast<std::uint64_t>(e)) : power(tinv, static_cast<std::uint64_t>(-e)); };
  Matrix<T> m = Matrix<T>::identity(ring, 8);
  for (std::size_t j = 0; j < 3; ++j) {
    m(2 + j, 2 + j) = pw(lambda.lambda[j]);
    m(5 + j, 5 + j) = pw(-lambda.lambda[j]);
  }
  return {std::move(m), {"theta(" + lambda.to_string() + ";" + t.to_string() + ")"}};
}

/// g(e_i e_j) = g(e_i) g(e_j) on all 64 basis products and g invertible.
template <RingElement T>
bool is_automorphism(const GroupElement<T>& g) {
  const auto ring = g.ring();
  auto basis = Octonion<T>::basis(ring);
  std::vector<Octonion<T>> images;
  for (const auto& b : basis) images.push_back(g.apply(b));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (!(g.apply(basis[i] * basis[j]) == images[i] * images[j])) return false;
    }
  }
  return is_unit(g.matrix().determinant());
}

}  // namespace g2
