#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "g2/error.hpp"
#include "g2/scalars/ring.hpp"

namespace g2 {

/// A polynomial variable. Block i >= 1 with index j in 1..8 is the coordinate
/// z_{ij} of the i-th octonion; block 0 holds auxiliary parameters t_k (curve
/// parameters, indeterminate group parameters).
struct Variable {
  std::uint8_t block = 0;
  std::uint8_t index = 0;

  static Variable z(int i, int j);
  static Variable parameter(int k);

  std::uint16_t code() const { return static_cast<std::uint16_t>((block << 8) | index); }
  static Variable from_code(std::uint16_t code) {
    return {static_cast<std::uint8_t>(code >> 8), static_cast<std::uint8_t>(code & 0xFF)};
  }
  std::string to_string() const;

  auto operator<=>(const Variable&) const = default;
};

/// Power product of variables, ordered lexicographically on (variable,
/// exponent) pairs.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Variable var, std::uint32_t exponent = 1);

  bool is_one() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }
  Variable variable(std::size_t k) const { return Variable::from_code(static_cast<std::uint16_t>(factors_[k] >> 16)); }
  std::uint32_t exponent(std::size_t k) const { return factors_[k] & 0xFFFFU; }
  std::uint32_t exponent_of(Variable var) const;

  std::uint32_t total_degree() const;
  /// Degree in the block z_{i,*}.
  std::uint32_t block_degree(int block) const;
  int max_block() const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  auto operator<=>(const Monomial&) const = default;

  std::string to_string() const;

 private:
  // Packed (variable code << 16 | exponent), sorted by variable.
  std::vector<std::uint32_t> factors_;
};

template <RingElement C>
class Polynomial;

template <RingElement C>
struct PolynomialRing {
  using element_type = Polynomial<C>;
  ring_of_t<C> coefficients;

  Polynomial<C> zero() const { return Polynomial<C>(coefficients); }
  Polynomial<C> one() const { return Polynomial<C>(coefficients, coefficients.one()); }
  Polynomial<C> from_integer(const Integer& value) const {
    return Polynomial<C>(coefficients, coefficients.from_integer(value));
  }
  Polynomial<C> variable(Variable var) const { return Polynomial<C>::variable(coefficients, var); }
  int characteristic() const { return coefficients.characteristic(); }
  std::string name() const { return coefficients.name() + "[z]"; }
  bool operator==(const PolynomialRing&) const = default;
};

/// Sparse multivariate polynomial with exact coefficients. No zero
/// coefficient is ever stored.
template <RingElement C>
class Polynomial {
 public:
  using coefficient_type = C;
  using coefficient_ring = ring_of_t<C>;
  using term_map = std::map<Monomial, C>;

  explicit Polynomial(coefficient_ring ring) : ring_(std::move(ring)) {}
  Polynomial(coefficient_ring ring, const C& constant) : ring_(std::move(ring)) {
    add_term(Monomial(), constant);
  }
  static Polynomial variable(coefficient_ring ring, Variable var) {
    Polynomial p(std::move(ring));
    p.add_term(Monomial::of(var), p.ring_.one());
    return p;
  }
  static Polynomial monomial(coefficient_ring ring, const Monomial& m, const C& coeff) {
    Polynomial p(std::move(ring));
    p.add_term(m, coeff);
    return p;
  }

  PolynomialRing<C> ring() const { return {ring_}; }
  const coefficient_ring& coefficients() const { return ring_; }
  const term_map& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  std::optional<C> constant_value() const {
    if (terms_.empty()) return ring_.zero();
    if (is_constant()) return terms_.begin()->second;
    return std::nullopt;
  }
  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  /// Only nonzero constants are units.
  Polynomial inverse() const {
    if (!is_constant() || is_zero()) throw DomainError("polynomial " + to_string() + " is not a unit");
    return Polynomial(ring_, terms_.begin()->second.inverse());
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    check(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    check(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    lhs.check(rhs);
    Polynomial out(lhs.ring_);
    for (const auto& [ml, cl] : lhs.terms_) {
      for (const auto& [mr, cr] : rhs.terms_) out.add_term(ml * mr, cl * cr);
    }
    return out;
  }
  Polynomial operator-() const {
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
  }
  Polynomial scaled(const C& factor) const {
    Polynomial out(ring_);
    if (factor.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * factor);
    return out;
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    lhs.check(rhs);
    return lhs.terms_ == rhs.terms_;
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  /// Per-block degrees (index 0 is block 1) if every monomial has the same
  /// block-degree vector, nullopt otherwise. The zero polynomial yields the
  /// zero vector.
  std::optional<std::vector<std::uint32_t>> multidegree(int blocks) const {
    std::optional<std::vector<std::uint32_t>> result;
    for (const auto& [m, c] : terms_) {
      std::vector<std::uint32_t> md(static_cast<std::size_t>(blocks));
      for (int b = 1; b <= blocks; ++b) md[static_cast<std::size_t>(b - 1)] = m.block_degree(b);
      if (!result) {
        result = md;
      } else if (*result != md) {
        return std::nullopt;
      }
    }
    if (!result) result.emplace(static_cast<std::size_t>(blocks), 0U);
    return result;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      if (m.is_one()) {
        os << c.to_string();
      } else if (c == ring_.one()) {
        os << m.to_string();
      } else {
        os << c.to_string() << "*" << m.to_string();
      }
    }
    return os.str();
  }

 private:
  void add_term(const Monomial& m, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  void check(const Polynomial& rhs) const {
    if (!(ring_ == rhs.ring_)) throw RingMismatch("polynomials over " + ring_.name() + " and " + rhs.ring_.name());
  }

  coefficient_ring ring_;
  term_map terms_;
};

template <RingElement C>
std::ostream& operator<<(std::ostream& os, const Polynomial<C>& p) {
  return os << p.to_string();
}

/// Nonzero constants whose value is a unit of the coefficient ring.
template <RingElement C>
bool is_unit(const Polynomial<C>& p) {
  auto c = p.constant_value();
  return c && is_unit(*c);
}

/// Ring homomorphism K[z] -> K[z] fixing coefficients and sending each listed
/// variable to the given polynomial; unlisted variables are retained.
template <RingElement C>
Polynomial<C> substitute(const Polynomial<C>& f, const std::map<Variable, Polynomial<C>>& assignment) {
  const auto ring = f.ring();
  for (const auto& [var, value] : assignment) {
    if (!(value.ring() == ring)) {
      throw RingMismatch("assignment for " + var.to_string() + " lives in " + value.ring().name() + ", not " +
                         ring.name());
    }
  }
  std::map<std::pair<Variable, std::uint32_t>, Polynomial<C>> powers;
  auto power_of = [&](Variable var, std::uint32_t e) -> const Polynomial<C>& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto a = assignment.find(var);
    Polynomial<C> base = a == assignment.end() ? ring.variable(var) : a->second;
    return powers.emplace(key, power(base, e)).first->second;
  };
  Polynomial<C> out = ring.zero();
  for (const auto& [m, c] : f.terms()) {
    Polynomial<C> term(f.coefficients(), c);
    for (std::size_t k = 0; k < m.size(); ++k) term = term * power_of(m.variable(k), m.exponent(k));
    out += term;
  }
  return out;
}

/// Scalar assignment overload.
template <RingElement C>
Polynomial<C> substitute(const Polynomial<C>& f, const std::map<Variable, C>& assignment) {
  std::map<Variable, Polynomial<C>> lifted;
  for (const auto& [var, value] : assignment) {
    if (!(value.ring() == f.coefficients())) {
      throw RingMismatch("scalar for " + var.to_string() + " is not in " + f.coefficients().name());
    }
    lifted.emplace(var, Polynomial<C>(f.coefficients(), value));
  }
  return substitute(f, lifted);
}

}  // namespace g2
