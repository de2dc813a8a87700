#include "g2/scalars/polynomial.hpp"

#include <algorithm>

namespace g2 {

Variable Variable::z(int i, int j) {
  if (i < 1 || i > 255 || j < 1 || j > 8) {
    throw DomainError("z_{" + std::to_string(i) + "," + std::to_string(j) + "} out of range");
  }
  return {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}

Variable Variable::parameter(int k) {
  if (k < 1 || k > 255) throw DomainError("parameter index out of range");
  return {0, static_cast<std::uint8_t>(k)};
}

std::string Variable::to_string() const {
  if (block == 0) return "t" + std::to_string(index);
  return "z" + std::to_string(block) + "_" + std::to_string(index);
}

Monomial Monomial::of(Variable var, std::uint32_t exponent) {
  Monomial m;
  if (exponent == 0) return m;
  if (exponent > 0xFFFFU) throw DomainError("exponent overflow");
  m.factors_.push_back((std::uint32_t{var.code()} << 16) | exponent);
  return m;
}

std::uint32_t Monomial::exponent_of(Variable var) const {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (variable(k) == var) return exponent(k);
  }
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) d += exponent(k);
  return d;
}

std::uint32_t Monomial::block_degree(int block) const {
  std::uint32_t d = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (variable(k).block == block) d += exponent(k);
  }
  return d;
}

int Monomial::max_block() const {
  int b = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) b = std::max(b, int{variable(k).block});
  return b;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  out.factors_.reserve(lhs.factors_.size() + rhs.factors_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.factors_.size() && j < rhs.factors_.size()) {
    std::uint32_t vl = lhs.factors_[i] >> 16;
    std::uint32_t vr = rhs.factors_[j] >> 16;
    if (vl < vr) {
      out.factors_.push_back(lhs.factors_[i++]);
    } else if (vr < vl) {
      out.factors_.push_back(rhs.factors_[j++]);
    } else {
      std::uint32_t e = (lhs.factors_[i++] & 0xFFFFU) + (rhs.factors_[j++] & 0xFFFFU);
      if (e > 0xFFFFU) throw DomainError("exponent overflow");
      out.factors_.push_back((vl << 16) | e);
    }
  }
  out.factors_.insert(out.factors_.end(), lhs.factors_.begin() + static_cast<std::ptrdiff_t>(i), lhs.factors_.end());
  out.factors_.insert(out.factors_.end(), rhs.factors_.begin() + static_cast<std::ptrdiff_t>(j), rhs.factors_.end());
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k > 0) out += "*";
    out += variable(k).to_string();
    if (exponent(k) > 1) out += "^" + std::to_string(exponent(k));
  }
  return out;
}

}  // namespace g2
