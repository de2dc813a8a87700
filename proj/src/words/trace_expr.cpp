#include "g2/words/trace_expr.hpp"

#include <algorithm>

namespace g2 {

InvariantDescriptor InvariantDescriptor::norm(int i) {
  if (i < 1) throw DomainError("norm index must be positive");
  return {Kind::Norm, {i}};
}

InvariantDescriptor InvariantDescriptor::trace(std::vector<int> indices) {
  if (indices.empty() || indices.front() < 1) throw DomainError("trace word needs positive indices");
  for (std::size_t k = 1; k < indices.size(); ++k) {
    if (indices[k - 1] >= indices[k]) throw DomainError("trace word indices must strictly increase");
  }
  return {Kind::Trace, std::move(indices)};
}

std::vector<int> InvariantDescriptor::multidegree(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int i : indices) {
    if (i > n) throw DomainError(to_string() + " exceeds n = " + std::to_string(n));
    out[static_cast<std::size_t>(i - 1)] += is_norm() ? 2 : 1;
  }
  return out;
}

std::string InvariantDescriptor::to_string() const {
  std::string out = is_norm() ? "n(" : "tr(";
  for (std::size_t k = 0; k < indices.size(); ++k) out += (k > 0 ? "," : "") + std::to_string(indices[k]);
  return out + ")";
}

std::strong_ordering InvariantDescriptor::operator<=>(const InvariantDescriptor& rhs) const {
  if (auto c = degree() <=> rhs.degree(); c != 0) return c;
  if (auto c = static_cast<int>(kind) <=> static_cast<int>(rhs.kind); c != 0) return c;
  return indices <=> rhs.indices;
}

int monomial_degree(const TraceMonomial& m) {
  int d = 0;
  for (const auto& s : m) d += s.degree();
  return d;
}

std::string monomial_to_string(const TraceMonomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) out += (k > 0 ? "*" : "") + m[k].to_string();
  return out;
}

bool TraceMonomialOrder::operator()(const TraceMonomial& a, const TraceMonomial& b) const {
  int da = monomial_degree(a);
  int db = monomial_degree(b);
  if (da != db) return da < db;
  return a < b;
}

TraceExpr TraceExpr::constant(const Integer& c) {
  TraceExpr e;
  e.add_term({}, c);
  return e;
}

TraceExpr TraceExpr::symbol(const InvariantDescriptor& d) {
  TraceExpr e;
  e.add_term({d}, Integer(1));
  return e;
}

Integer TraceExpr::coefficient(const TraceMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TraceExpr::add_term(const TraceMonomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

TraceExpr& TraceExpr::operator+=(const TraceExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

TraceExpr& TraceExpr::operator-=(const TraceExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

TraceExpr operator*(const TraceExpr& lhs, const TraceExpr& rhs) {
  TraceExpr out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      TraceMonomial m;
      m.reserve(ml.size() + mr.size());
      std::merge(ml.begin(), ml.end(), mr.begin(), mr.end(), std::back_inserter(m));
      out.add_term(m, cl * cr);
    }
  }
  return out;
}

TraceExpr TraceExpr::operator-() const { return scaled(Integer(-1)); }

TraceExpr TraceExpr::scaled(const Integer& c) const {
  TraceExpr out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, coeff * c);
  return out;
}

TraceExpr TraceExpr::reduced_mod(unsigned long p) const {
  TraceExpr out;
  for (const auto& [m, c] : terms_) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    out.add_term(m, r);
  }
  return out;
}

std::vector<InvariantDescriptor> TraceExpr::symbols() const {
  std::vector<InvariantDescriptor> out;
  for (const auto& [m, c] : terms_) out.insert(out.end(), m.begin(), m.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string TraceExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest degree first reads like the usual leading-term notation.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer a = abs(c);
    if (first) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.empty()) {
      out += a.get_str();
    } else {
      out += (a == 1 ? "" : a.get_str() + "*") + monomial_to_string(m);
    }
  }
  return out;
}

}  // namespace g2
