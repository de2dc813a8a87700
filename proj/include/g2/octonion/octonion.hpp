#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "g2/error.hpp"
#include "g2/scalars/ring.hpp"

namespace g2 {

template <RingElement T>
struct Vec3 {
  std::array<T, 3> c;

  Vec3(T x, T y, T z) : c{std::move(x), std::move(y), std::move(z)} {}
  static Vec3 zero(const ring_of_t<T>& ring) { return {ring.zero(), ring.zero(), ring.zero()}; }
  /// Unit vector with a one in slot k (0-based).
  static Vec3 unit(const ring_of_t<T>& ring, int k) {
    Vec3 out = zero(ring);
    out.c.at(static_cast<std::size_t>(k)) = ring.one();
    return out;
  }

  const T& operator[](std::size_t k) const { return c[k]; }
  T& operator[](std::size_t k) { return c[k]; }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
  Vec3 operator-() const { return {-c[0], -c[1], -c[2]}; }
  Vec3 scaled(const T& s) const { return {s * c[0], s * c[1], s * c[2]}; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a[0] == b[0] && a[1] == b[1] && a[2] == b[2]; }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
};

template <RingElement T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <RingElement T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Split octonion as a Zorn vector matrix [[alpha, u], [v, beta]].
///
/// Two coordinate orders are used. `coords()` is the z-order
/// (alpha, u1, u2, u3, v1, v2, v3, beta) of the polynomial variables and of
/// the tuple file format. `basis_coords()` follows the basis order
/// (e1, e2, u1, u2, u3, v1, v2, v3) used by group matrices.
template <RingElement T>
class Octonion {
 public:
  using scalar_type = T;
  using ring_type = ring_of_t<T>;

  Octonion(T alpha, Vec3<T> u, Vec3<T> v, T beta)
      : alpha_(std::move(alpha)), u_(std::move(u)), v_(std::move(v)), beta_(std::move(beta)) {}

  static Octonion zero(const ring_type& ring) {
    return {ring.zero(), Vec3<T>::zero(ring), Vec3<T>::zero(ring), ring.zero()};
  }
  static Octonion identity(const ring_type& ring) {
    return {ring.one(), Vec3<T>::zero(ring), Vec3<T>::zero(ring), ring.one()};
  }
  static Octonion e1(const ring_type& ring) { return basis(ring, 0); }
  static Octonion e2(const ring_type& ring) { return basis(ring, 1); }
  /// u_j, v_j with j in 1..3.
  static Octonion u(const ring_type& ring, int j) { return basis(ring, 1 + j); }
  static Octonion v(const ring_type& ring, int j) { return basis(ring, 4 + j); }

  /// k-th element (0-based) of (e1, e2, u1, u2, u3, v1, v2, v3).
  static Octonion basis(const ring_type& ring, int k) {
    if (k < 0 || k > 7) throw DomainError("basis index " + std::to_string(k) + " out of range");
    std::vector<T> c(8, ring.zero());
    c[static_cast<std::size_t>(k)] = ring.one();
    return from_basis_coords(c);
  }
  static std::vector<Octonion> basis(const ring_type& ring) {
    std::vector<Octonion> out;
    for (int k = 0; k < 8; ++k) out.push_back(basis(ring, k));
    return out;
  }

  static Octonion from_coords(const std::vector<T>& z) {
    if (z.size() != 8) throw DomainError("an octonion has 8 coordinates");
    return {z[0], {z[1], z[2], z[3]}, {z[4], z[5], z[6]}, z[7]};
  }
  static Octonion from_basis_coords(const std::vector<T>& b) {
    if (b.size() != 8) throw DomainError("an octonion has 8 coordinates");
    return {b[0], {b[2], b[3], b[4]}, {b[5], b[6], b[7]}, b[1]};
  }

  const T& alpha() const { return alpha_; }
  const T& beta() const { return beta_; }
  const Vec3<T>& u() const { return u_; }
  const Vec3<T>& v() const { return v_; }
  ring_type ring() const { return alpha_.ring(); }

  std::vector<T> coords() const { return {alpha_, u_[0], u_[1], u_[2], v_[0], v_[1], v_[2], beta_}; }
  std::vector<T> basis_coords() const { return {alpha_, beta_, u_[0], u_[1], u_[2], v_[0], v_[1], v_[2]}; }

  bool is_zero() const { return alpha_.is_zero() && beta_.is_zero() && u_.is_zero() && v_.is_zero(); }

  Octonion conj() const { return {beta_, -u_, -v_, alpha_}; }
  Octonion scaled(const T& s) const { return {s * alpha_, u_.scaled(s), v_.scaled(s), s * beta_}; }

  friend Octonion operator+(const Octonion& a, const Octonion& b) {
    return {a.alpha_ + b.alpha_, a.u_ + b.u_, a.v_ + b.v_, a.beta_ + b.beta_};
  }
  friend Octonion operator-(const Octonion& a, const Octonion& b) {
    return {a.alpha_ - b.alpha_, a.u_ - b.u_, a.v_ - b.v_, a.beta_ - b.beta_};
  }
  Octonion operator-() const { return {-alpha_, -u_, -v_, -beta_}; }

  friend Octonion operator*(const Octonion& a, const Octonion& b) {
    return {a.alpha_ * b.alpha_ + dot(a.u_, b.v_),
            b.u_.scaled(a.alpha_) + a.u_.scaled(b.beta_) - cross(a.v_, b.v_),
            a.v_.scaled(b.alpha_) + b.v_.scaled(a.beta_) + cross(a.u_, b.u_),
            a.beta_ * b.beta_ + dot(a.v_, b.u_)};
  }

  friend bool operator==(const Octonion& a, const Octonion& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.u_ == b.u_ && a.v_ == b.v_;
  }

  std::string to_string() const {
    std::string out = "(";
    auto z = coords();
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (k > 0) out += " ";
      out += z[k].to_string();
    }
    return out + ")";
  }

 private:
  T alpha_;
  Vec3<T> u_;
  Vec3<T> v_;
  T beta_;
};

template <RingElement T>
std::ostream& operator<<(std::ostream& os, const Octonion<T>& a) {
  return os << a.to_string();
}

template <RingElement T>
T trace(const Octonion<T>& a) {
  return a.alpha() + a.beta();
}

template <RingElement T>
T norm(const Octonion<T>& a) {
  return a.alpha() * a.beta() - dot(a.u(), a.v());
}

/// q(a, b) = n(a + b) - n(a) - n(b).
template <RingElement T>
T form_q(const Octonion<T>& a, const Octonion<T>& b) {
  return a.alpha() * b.beta() + b.alpha() * a.beta() - dot(a.u(), b.v()) - dot(b.u(), a.v());
}

template <RingElement T>
bool is_traceless(const Octonion<T>& a) {
  return trace(a).is_zero();
}

template <RingElement T>
using Tuple = std::vector<Octonion<T>>;

}  // namespace g2
