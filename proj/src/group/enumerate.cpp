#include "g2/group/enumerate.hpp"

#include <deque>

namespace g2 {

std::size_t PackedMatrixHash::operator()(const PackedMatrix& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint8_t b : m) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Integer g2_order_formula(std::uint64_t q) {
  Integer Q(static_cast<unsigned long>(q));
  Integer q2 = Q * Q;
  Integer q6 = q2 * q2 * q2;
  return q6 * (q6 - 1) * (q2 - 1);
}

PackedMatrix G2Table::pack(const Matrix<PrimeFieldElement>& m) {
  PackedMatrix out{};
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) out[i * 8 + j] = static_cast<std::uint8_t>(m(i, j).residue());
  }
  return out;
}

Matrix<PrimeFieldElement> G2Table::unpack(const PackedMatrix& m) const {
  PrimeField field(q_);
  Matrix<PrimeFieldElement> out(field, 8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) out(i, j) = field.element(m[i * 8 + j]);
  }
  return out;
}

GroupElement<PrimeFieldElement> G2Table::element(std::size_t k) const {
  std::vector<std::string> word;
  for (auto cur = static_cast<std::int32_t>(k); parent_.at(static_cast<std::size_t>(cur)) >= 0;
       cur = parent_[static_cast<std::size_t>(cur)]) {
    word.push_back(generators_[static_cast<std::size_t>(via_[static_cast<std::size_t>(cur)])].word().front());
  }
  return {unpack(elements_.at(k)), std::move(word)};
}

std::optional<std::size_t> G2Table::find(const PackedMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

PackedMatrix multiply(const PackedMatrix& a, const PackedMatrix& b, unsigned q) {
  PackedMatrix out{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      unsigned s = 0;
      for (int k = 0; k < 8; ++k) s += unsigned{a[i * 8 + k]} * unsigned{b[k * 8 + j]};
      out[i * 8 + j] = static_cast<std::uint8_t>(s % q);
    }
  }
  return out;
}

}  // namespace

G2Table enumerate_group(std::uint64_t q, std::size_t max_elements) {
  if (q < 2) throw DomainError("enumerate_group: q must be at least 2");
  if (g2_order_formula(q) > Integer(static_cast<unsigned long>(max_elements))) {
    throw ResourceError("enumerate_group: |G2(F_" + std::to_string(q) + ")| = " + g2_order_formula(q).get_str() +
                        " exceeds the budget of " + std::to_string(max_elements) + " elements");
  }
  PrimeField field(q);

  G2Table table;
  table.q_ = q;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (std::uint64_t t = 1; t < q; ++t) {
        auto g = Matrix<PrimeFieldElement>::identity(field, 3);
        g(i, j) = field.element(t);
        table.generators_.push_back(from_sl3(g));
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (std::uint64_t t = 1; t < q; ++t) {
      table.generators_.push_back(delta1(Vec3<PrimeFieldElement>::unit(field, i).scaled(field.element(t))));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (std::uint64_t t = 1; t < q; ++t) {
      table.generators_.push_back(delta2(Vec3<PrimeFieldElement>::unit(field, i).scaled(field.element(t))));
    }
  }
  std::vector<PackedMatrix> gens;
  for (const auto& g : table.generators_) gens.push_back(G2Table::pack(g.matrix()));

  auto qq = static_cast<unsigned>(q);
  auto insert = [&](const PackedMatrix& m, std::int32_t parent, std::int32_t via) {
    auto [it, fresh] = table.index_.emplace(m, table.elements_.size());
    if (!fresh) return;
    table.elements_.push_back(m);
    table.parent_.push_back(parent);
    table.via_.push_back(via);
  };
  insert(G2Table::pack(Matrix<PrimeFieldElement>::identity(field, 8)), -1, -1);
  for (std::size_t cur = 0; cur < table.elements_.size(); ++cur) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      insert(multiply(gens[k], table.elements_[cur], qq), static_cast<std::int32_t>(cur), static_cast<std::int32_t>(k));
    }
  }
  return table;
}

}  // namespace g2
