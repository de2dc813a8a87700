#include "g2/symbolic/symbolic.hpp"

#include <algorithm>
#include <map>

namespace g2 {

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids{Identity::Eq1Trace, Identity::Eq1Norm, Identity::Eq2,      Identity::Eq3a,
                                         Identity::Eq3,      Identity::Eq4Left, Identity::Eq4Right, Identity::Eq5Left,
                                         Identity::Eq5Right, Identity::Eq6,     Identity::EqN};
  return ids;
}

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::Eq1Trace: return "Eq1-trace";
    case Identity::Eq1Norm: return "Eq1-norm";
    case Identity::Eq2: return "Eq2";
    case Identity::Eq3a: return "Eq3a";
    case Identity::Eq3: return "Eq3";
    case Identity::Eq4Left: return "Eq4-left";
    case Identity::Eq4Right: return "Eq4-right";
    case Identity::Eq5Left: return "Eq5-left";
    case Identity::Eq5Right: return "Eq5-right";
    case Identity::Eq6: return "Eq6";
    case Identity::EqN: return "EqN";
  }
  return "?";
}

int identity_arity(Identity id) {
  switch (id) {
    case Identity::Eq2:
    case Identity::EqN: return 1;
    case Identity::Eq5Left:
    case Identity::Eq5Right:
    case Identity::Eq6: return 3;
    default: return 2;
  }
}

namespace {

/// Coordinates of LHS - RHS: eight entries for octonion identities, one for
/// scalar identities.
template <RingElement C>
std::vector<Polynomial<C>> identity_difference(Identity id, const PolynomialRing<C>& ring) {
  using P = Polynomial<C>;
  using O = Octonion<P>;
  auto z = generic_tuple(ring, identity_arity(id));
  const O& a = z[0];
  auto one = O::identity(ring);
  auto scalar = [](P p) { return std::vector<P>{std::move(p)}; };
  switch (id) {
    case Identity::Eq1Trace: return scalar(trace(a * z[1]) - trace(z[1] * a));
    case Identity::Eq1Norm: return scalar(norm(a * z[1]) - norm(a) * norm(z[1]));
    case Identity::Eq2: return (a * a - a.scaled(trace(a)) + one.scaled(norm(a))).coords();
    case Identity::Eq3a: {
      const O& b = z[1];
      return scalar(norm(a + b) - (norm(a) + norm(b) - trace(a * b) + trace(a) * trace(b)));
    }
    case Identity::Eq3: {
      const O& b = z[1];
      return (a * b + b * a - b.scaled(trace(a)) - a.scaled(trace(b)) - one.scaled(trace(a * b)) +
              one.scaled(trace(a) * trace(b)))
          .coords();
    }
    case Identity::Eq4Left: return (a * (a * z[1]) - (a * a) * z[1]).coords();
    case Identity::Eq4Right: return ((z[1] * a) * a - z[1] * (a * a)).coords();
    case Identity::Eq5Left: {
      const O& a2 = z[1];
      const O& b = z[2];
      return (a * (a2 * b) + a2 * (a * b) - (a * a2 + a2 * a) * b).coords();
    }
    case Identity::Eq5Right: {
      const O& a2 = z[1];
      const O& b = z[2];
      return ((b * a) * a2 + (b * a2) * a - b * (a * a2 + a2 * a)).coords();
    }
    case Identity::Eq6: return scalar(trace((a * z[1]) * z[2]) - trace(a * (z[1] * z[2])));
    case Identity::EqN: return scalar(ring.from_integer(2) * norm(a) + trace(a * a) - trace(a) * trace(a));
  }
  throw DomainError("unknown identity");
}

template <RingElement C>
std::string first_term(const std::vector<Polynomial<C>>& diff) {
  for (std::size_t k = 0; k < diff.size(); ++k) {
    if (diff[k].is_zero()) continue;
    const auto& [m, c] = *diff[k].terms().begin();
    return "coordinate " + std::to_string(k + 1) + ": " + c.to_string() + "*" + m.to_string();
  }
  return "";
}

template <RingElement C>
IdentityResult check_identity(Identity id, const PolynomialRing<C>& ring) {
  auto diff = identity_difference(id, ring);
  IdentityResult r{id, ring.coefficients.name(), true, ""};
  r.failing_monomial = first_term(diff);
  r.passed = r.failing_monomial.empty();
  return r;
}

}  // namespace

IdentityResult verify_identity(Identity id, int characteristic) {
  if (characteristic == 0) return check_identity(id, q_poly_ring());
  if (characteristic < 0) throw DomainError("negative characteristic");
  return check_identity(id, fp_poly_ring(static_cast<std::uint64_t>(characteristic)));
}

QPoly q_prime_generic() {
  auto ring = q_poly_ring();
  auto z = generic_tuple(ring, 4);
  return q_prime_skew(z[0], z[1], z[2], z[3]);
}

LemmaQResult verify_lemmaQ() {
  auto ring = q_poly_ring();
  auto z = generic_tuple(ring, 4);
  LemmaQResult r;
  QPoly skew = q_prime_skew(z[0], z[1], z[2], z[3]);
  QPoly expanded = q_prime_expanded(z[0], z[1], z[2], z[3]);
  r.skew_terms = skew.term_count();
  r.failing_monomial = first_term(std::vector<QPoly>{skew - expanded});
  r.passed = r.failing_monomial.empty();
  r.coefficients_in_z_half = coefficients_in_Z_half(skew);

  std::map<Variable, Rational> unit;
  for (int j = 1; j <= 8; ++j) unit.emplace(Variable::z(4, j), Rational(j == 1 || j == 8 ? 1 : 0));
  auto one = Octonion<QPoly>::identity(ring);
  r.specialization_passed = substitute(skew, unit) == substitute(expanded, unit) &&
                            substitute(skew, unit) == q_prime_skew(z[0], z[1], z[2], one);
  return r;
}

namespace {

template <RingElement C>
struct Candidate {
  std::vector<std::size_t> factors;
  Polynomial<C> value;
};

}  // namespace

template <RingElement C>
Decomposition<C> decomposability_check(const Polynomial<C>& target, const std::vector<LabelledPolynomial<C>>& generators,
                                       int n, bool include_linear) {
  static_assert(is_field_v<C>, "decomposability_check needs field coefficients");
  const auto field = target.coefficients();
  auto goal = target.multidegree(n);
  if (!goal) throw DomainError("decomposability target is not multihomogeneous");

  std::vector<std::vector<std::uint32_t>> degrees;
  std::vector<std::size_t> usable;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    auto md = generators[k].value.multidegree(n);
    if (!md) throw DomainError("generator " + generators[k].label + " is not multihomogeneous");
    degrees.push_back(*md);
    bool constant = std::all_of(md->begin(), md->end(), [](std::uint32_t x) { return x == 0; });
    if (!constant) usable.push_back(k);
  }

  std::vector<Candidate<C>> basis;
  std::size_t min_factors = include_linear ? 1 : 2;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t from, std::vector<std::uint32_t>& remaining, const Polynomial<C>& value) -> void {
    if (std::all_of(remaining.begin(), remaining.end(), [](std::uint32_t x) { return x == 0; })) {
      if (chosen.size() >= min_factors) basis.push_back({chosen, value});
      return;
    }
    for (std::size_t u = from; u < usable.size(); ++u) {
      const auto& md = degrees[usable[u]];
      bool fits = true;
      for (std::size_t b = 0; b < remaining.size(); ++b) fits = fits && md[b] <= remaining[b];
      if (!fits) continue;
      for (std::size_t b = 0; b < remaining.size(); ++b) remaining[b] -= md[b];
      chosen.push_back(usable[u]);
      self(self, u, remaining, value * generators[usable[u]].value);
      chosen.pop_back();
      for (std::size_t b = 0; b < remaining.size(); ++b) remaining[b] += md[b];
    }
  };
  std::vector<std::uint32_t> remaining = *goal;
  rec(rec, 0, remaining, Polynomial<C>(field, field.one()));

  Decomposition<C> result;
  result.basis_size = basis.size();

  std::map<Monomial, std::size_t> rows;
  auto row_of = [&](const Monomial& m) { return rows.emplace(m, rows.size()).first->second; };
  for (const auto& cand : basis) {
    for (const auto& [m, c] : cand.value.terms()) row_of(m);
  }
  for (const auto& [m, c] : target.terms()) row_of(m);

  std::size_t cols = basis.size();
  std::vector<std::vector<C>> a(rows.size(), std::vector<C>(cols + 1, field.zero()));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [m, c] : basis[j].value.terms()) a[rows.at(m)][j] = c;
  }
  for (const auto& [m, c] : target.terms()) a[rows.at(m)][cols] = c;

  // Fraction-free forward elimination.
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c].is_zero()) continue;
      C e = a[r][c];
      C piv = a[rank][c];
      for (std::size_t k = c; k <= cols; ++k) a[r][k] = piv * a[r][k] - e * a[rank][k];
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < a.size(); ++r) {
    if (!a[r][cols].is_zero()) return result;
  }

  std::vector<C> x(cols, field.zero());
  for (std::size_t r = rank; r-- > 0;) {
    std::size_t c = pivot_cols[r];
    C rhs = a[r][cols];
    for (std::size_t k = c + 1; k < cols; ++k) rhs = rhs - a[r][k] * x[k];
    x[c] = rhs * a[r][c].inverse();
  }

  Polynomial<C> check(field);
  for (std::size_t j = 0; j < cols; ++j) {
    if (x[j].is_zero()) continue;
    std::string label;
    for (std::size_t f : basis[j].factors) label += (label.empty() ? "" : "*") + generators[f].label;
    result.certificate.emplace_back(label, x[j]);
    check += basis[j].value.scaled(x[j]);
  }
  result.expressible = true;
  result.verified = check == target;
  return result;
}

template Decomposition<Rational> decomposability_check(const QPoly&, const std::vector<LabelledPolynomial<Rational>>&,
                                                       int, bool);
template Decomposition<PrimeFieldElement> decomposability_check(const FpPoly&,
                                                                const std::vector<LabelledPolynomial<PrimeFieldElement>>&,
                                                                int, bool);

namespace {

std::vector<LabelledPolynomial<Rational>> octonion_generators(const std::vector<InvariantDescriptor>& generators,
                                                              const Tuple<QPoly>& z) {
  std::vector<LabelledPolynomial<Rational>> out;
  for (const auto& d : generators) out.push_back({d.to_string(), eval_descriptor(d, z)});
  return out;
}

}  // namespace

Decomposition<Rational> decomposability_check(const InvariantDescriptor& target,
                                              const std::vector<InvariantDescriptor>& generators, int n,
                                              bool include_linear, bool traceless) {
  auto z = generic_tuple(q_poly_ring(), n, traceless);
  return decomposability_check(eval_descriptor(target, z), octonion_generators(generators, z), n, include_linear);
}

Decomposition<Rational> decomposability_check(const NAWord& target, const std::vector<InvariantDescriptor>& generators,
                                              int n, bool include_linear) {
  auto z = generic_tuple(q_poly_ring(), n);
  return decomposability_check(trace(evaluate(target, z)), octonion_generators(generators, z), n, include_linear);
}

Decomposition<Rational> decomposability_check(const MatrixDescriptor& target,
                                              const std::vector<MatrixDescriptor>& generators, int n,
                                              bool include_linear) {
  auto ring = q_poly_ring();
  std::vector<Matrix<QPoly>> m;
  for (int i = 1; i <= n; ++i) m.push_back(generic_matrix(ring, i));
  std::vector<LabelledPolynomial<Rational>> gens;
  for (const auto& d : generators) gens.push_back({d.to_string(), eval_matrix_descriptor(d, m)});
  return decomposability_check(eval_matrix_descriptor(target, m), gens, n, include_linear);
}

PsiBridgeResult verify_psi_bridge(int n, int max_length) {
  auto R = q_poly_ring();
  auto z = generic_tuple(R, n);
  std::vector<Matrix<QPoly>> hats;
  for (int i = 1; i <= n; ++i) hats.push_back(generic_matrix(R, i));

  PsiBridgeResult result;
  result.words = result.traces = result.norms = result.containment = true;
  std::vector<int> seq;
  auto visit = [&](auto&& self) -> void {
    if (!seq.empty()) {
      auto value = evaluate(left_normed(seq), z);
      Matrix<QPoly> product = hats[static_cast<std::size_t>(seq[0] - 1)];
      for (std::size_t k = 1; k < seq.size(); ++k) product = product * hats[static_cast<std::size_t>(seq[k] - 1)];
      result.words = result.words && psi_hat(value) == embed_matrix(product);
      result.traces = result.traces && psi(trace(value)) == matrix_trace(product);
      ++result.words_checked;
    }
    if (static_cast<int>(seq.size()) == max_length) return;
    for (int i = 1; i <= n; ++i) {
      seq.push_back(i);
      self(self);
      seq.pop_back();
    }
  };
  visit(visit);

  for (int i = 1; i <= n; ++i) {
    result.norms = result.norms && psi(norm(z[static_cast<std::size_t>(i - 1)])) == hats[static_cast<std::size_t>(i - 1)].determinant();
  }
  for (const auto& d : matrix_invariants(n, max_length).descriptors) {
    result.containment = result.containment && psi(eval_descriptor(d.psi_preimage(), z)) == eval_matrix_descriptor(d, hats);
  }
  return result;
}

}  // namespace g2
