#include "g2/invariants/invariants.hpp"

#include <algorithm>

namespace g2 {

Family parse_family(const std::string& name) {
  if (name == "S") return Family::S;
  if (name == "S0") return Family::S0;
  throw DomainError("unknown family '" + name + "' (expected S or S0)");
}

std::string family_name(Family family) { return family == Family::S ? "S" : "S0"; }

namespace {

void increasing_sequences(int n, int length, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == length) {
    out.push_back(cur);
    return;
  }
  for (int i = cur.empty() ? 1 : cur.back() + 1; i <= n; ++i) {
    cur.push_back(i);
    increasing_sequences(n, length, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> increasing_sequences(int n, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  increasing_sequences(n, length, cur, out);
  return out;
}

}  // namespace

std::vector<InvariantDescriptor> enumerate_set(Family family, int n, int d) {
  if (n < 1 || d < 1) throw DomainError("enumerate_set needs n >= 1 and d >= 1");
  std::vector<InvariantDescriptor> out;
  if (d >= 2) {
    for (int i = 1; i <= n; ++i) out.push_back(InvariantDescriptor::norm(i));
  }
  for (int k = family == Family::S ? 1 : 2; k <= std::min(n, d); ++k) {
    for (auto& seq : increasing_sequences(n, k)) out.push_back(InvariantDescriptor::trace(std::move(seq)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TraceExpr q_prime_expansion_twice() {
  auto t = [](std::vector<int> idx) { return TraceExpr::symbol(InvariantDescriptor::trace(std::move(idx))); };
  TraceExpr rest = -(t({1}) * t({2}) * t({3}) * t({4}));
  rest -= t({1}) * t({2, 3, 4});
  rest -= t({2}) * t({1, 3, 4});
  rest -= t({3}) * t({1, 2, 4});
  rest -= t({4}) * t({1, 2, 3});
  rest -= t({1, 2}) * t({3, 4});
  rest += t({1, 3}) * t({2, 4});
  rest -= t({1, 4}) * t({2, 3});
  rest += t({1}) * t({2}) * t({3, 4});
  rest += t({1}) * t({4}) * t({2, 3});
  rest += t({2}) * t({3}) * t({1, 4});
  rest += t({3}) * t({4}) * t({1, 2});
  return t({1, 2, 3, 4}).scaled(Integer(2)) + rest;
}

MatrixDescriptor MatrixDescriptor::det(int i) {
  if (i < 1) throw DomainError("det index must be positive");
  return {Kind::Det, {i}};
}

MatrixDescriptor MatrixDescriptor::trace(std::vector<int> indices) {
  // Reuse the octonion-side validation of strictly increasing indices.
  auto checked = InvariantDescriptor::trace(std::move(indices));
  return {Kind::Trace, std::move(checked.indices)};
}

std::string MatrixDescriptor::to_string() const {
  std::string out = kind == Kind::Det ? "det(" : "tr(";
  for (std::size_t k = 0; k < indices.size(); ++k) out += (k > 0 ? "," : "") + std::to_string(indices[k]);
  return out + ")";
}

InvariantDescriptor MatrixDescriptor::psi_preimage() const {
  return kind == Kind::Det ? InvariantDescriptor::norm(indices[0]) : InvariantDescriptor::trace(indices);
}

std::vector<MatrixDescriptor> MatrixInvariantSet::minimal_for_characteristic(int characteristic) const {
  std::vector<MatrixDescriptor> out;
  for (const auto& d : descriptors) {
    if (characteristic != 2 && d.kind == MatrixDescriptor::Kind::Trace &&
        static_cast<int>(d.indices.size()) > odd_characteristic_trace_bound) {
      continue;
    }
    out.push_back(d);
  }
  return out;
}

MatrixInvariantSet matrix_invariants(int n, int d) {
  MatrixInvariantSet set;
  for (const auto& desc : enumerate_set(Family::S, n, d)) {
    set.descriptors.push_back(desc.is_norm() ? MatrixDescriptor::det(desc.indices[0]) : MatrixDescriptor::trace(desc.indices));
  }
  return set;
}

}  // namespace g2
