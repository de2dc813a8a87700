#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "g2/octonion/octonion.hpp"
#include "g2/scalars/ring.hpp"
#include "g2/words/word.hpp"

namespace g2 {

/// n(Z_i), or tr of the left-normed product Z_{i1} ... Z_{ik} with
/// i1 < ... < ik.
struct InvariantDescriptor {
  enum class Kind { Norm, Trace };

  Kind kind = Kind::Trace;
  std::vector<int> indices;

  static InvariantDescriptor norm(int i);
  /// Throws DomainError unless `indices` is non-empty, positive and strictly
  /// increasing.
  static InvariantDescriptor trace(std::vector<int> indices);

  bool is_norm() const { return kind == Kind::Norm; }
  int degree() const { return is_norm() ? 2 : static_cast<int>(indices.size()); }
  int max_index() const { return indices.back(); }
  std::vector<int> multidegree(int n) const;
  /// `n(1)`, `tr(1,2,3)`.
  std::string to_string() const;

  bool operator==(const InvariantDescriptor&) const = default;
  /// Degree, then norms before traces, then indices lexicographically.
  std::strong_ordering operator<=>(const InvariantDescriptor& rhs) const;
};

/// Value of a descriptor on a tuple.
template <RingElement T>
T eval_descriptor(const InvariantDescriptor& d, const Tuple<T>& tuple) {
  if (static_cast<std::size_t>(d.max_index()) > tuple.size()) {
    throw DomainError(d.to_string() + " needs " + std::to_string(d.max_index()) + " octonions, tuple has " +
                      std::to_string(tuple.size()));
  }
  if (d.is_norm()) return norm(tuple[static_cast<std::size_t>(d.indices[0] - 1)]);
  Octonion<T> acc = tuple[static_cast<std::size_t>(d.indices[0] - 1)];
  for (std::size_t k = 1; k < d.indices.size(); ++k) acc = acc * tuple[static_cast<std::size_t>(d.indices[k] - 1)];
  return trace(acc);
}

/// Commutative product of descriptors, kept sorted.
using TraceMonomial = std::vector<InvariantDescriptor>;

int monomial_degree(const TraceMonomial& m);
std::string monomial_to_string(const TraceMonomial& m);

/// Total degree first, then lexicographic.
struct TraceMonomialOrder {
  bool operator()(const TraceMonomial& a, const TraceMonomial& b) const;
};

/// Integer linear combination of trace monomials; no zero coefficients are
/// stored. Integer coefficients map into any ring on evaluation, so one
/// expression serves every characteristic.
class TraceExpr {
 public:
  using term_map = std::map<TraceMonomial, Integer, TraceMonomialOrder>;

  TraceExpr() = default;
  static TraceExpr constant(const Integer& c);
  static TraceExpr symbol(const InvariantDescriptor& d);

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const TraceMonomial& m) const;
  std::size_t size() const { return terms_.size(); }

  TraceExpr& operator+=(const TraceExpr& rhs);
  TraceExpr& operator-=(const TraceExpr& rhs);
  friend TraceExpr operator+(TraceExpr lhs, const TraceExpr& rhs) { return lhs += rhs; }
  friend TraceExpr operator-(TraceExpr lhs, const TraceExpr& rhs) { return lhs -= rhs; }
  friend TraceExpr operator*(const TraceExpr& lhs, const TraceExpr& rhs);
  TraceExpr operator-() const;
  TraceExpr scaled(const Integer& c) const;
  bool operator==(const TraceExpr&) const = default;

  /// Coefficients reduced into [0, p); terms divisible by p dropped.
  TraceExpr reduced_mod(unsigned long p) const;

  /// Descriptors occurring anywhere, ascending.
  std::vector<InvariantDescriptor> symbols() const;

  std::string to_string() const;

 private:
  void add_term(const TraceMonomial& m, const Integer& c);

  term_map terms_;
};

/// A TraceExpr with coefficients mapped into a ring and symbols numbered, for
/// repeated evaluation.
template <RingElement T>
class CompiledTraceExpr {
 public:
  CompiledTraceExpr(const TraceExpr& expr, const ring_of_t<T>& ring) : symbols_(expr.symbols()) {
    for (const auto& [m, c] : expr.terms()) {
      std::vector<std::size_t> ids;
      for (const auto& d : m) {
        ids.push_back(static_cast<std::size_t>(
            std::lower_bound(symbols_.begin(), symbols_.end(), d) - symbols_.begin()));
      }
      terms_.emplace_back(ring.from_integer(c), std::move(ids));
    }
    zero_.emplace_back(ring.zero());
  }

  T operator()(const Tuple<T>& tuple) const {
    std::vector<T> values;
    values.reserve(symbols_.size());
    for (const auto& d : symbols_) values.push_back(eval_descriptor(d, tuple));
    T sum = zero_.front();
    for (const auto& [c, ids] : terms_) {
      T term = c;
      for (std::size_t id : ids) term = term * values[id];
      sum = sum + term;
    }
    return sum;
  }

 private:
  std::vector<InvariantDescriptor> symbols_;
  std::vector<std::pair<T, std::vector<std::size_t>>> terms_;
  std::vector<T> zero_;
};

template <RingElement T>
T evaluate(const TraceExpr& expr, const Tuple<T>& tuple) {
  if (tuple.empty()) throw DomainError("evaluate needs a non-empty tuple");
  return CompiledTraceExpr<T>(expr, tuple.front().ring())(tuple);
}

}  // namespace g2
