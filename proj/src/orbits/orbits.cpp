#include "g2/orbits/orbits.hpp"

namespace g2 {

namespace {

const PrimeField& f2() {
  static const PrimeField field(2);
  return field;
}

}  // namespace

std::uint8_t encode_gf2(const Octonion<PrimeFieldElement>& a) {
  if (a.ring().modulus() != 2) throw DomainError("GF(2) encoding needs an octonion over GF(2)");
  auto z = a.coords();
  std::uint8_t bits = 0;
  for (std::size_t j = 0; j < 8; ++j) {
    if (!z[j].is_zero()) bits = static_cast<std::uint8_t>(bits | (1U << j));
  }
  return bits;
}

Octonion<PrimeFieldElement> decode_gf2(std::uint8_t bits) {
  std::vector<PrimeFieldElement> z;
  for (std::size_t j = 0; j < 8; ++j) z.push_back(f2().element((bits >> j) & 1U));
  return Octonion<PrimeFieldElement>::from_coords(z);
}

OrbitOracle::OrbitOracle(const G2Table& table) : table_(&table) {
  if (table.q() != 2) throw DomainError("the orbit oracle needs the enumeration of G2(F_2)");
  images_.reserve(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    GroupElement<PrimeFieldElement> g(table.unpack(table.packed(k)), {});
    std::array<std::uint8_t, 8> row{};
    for (std::size_t j = 0; j < 8; ++j) row[j] = encode_gf2(g.apply(decode_gf2(static_cast<std::uint8_t>(1U << j))));
    images_.push_back(row);
  }
}

std::uint8_t OrbitOracle::act(std::size_t k, std::uint8_t bits) const {
  std::uint8_t out = 0;
  for (std::size_t j = 0; j < 8; ++j) {
    if ((bits >> j) & 1U) out ^= images_[k][j];
  }
  return out;
}

OracleResult OrbitOracle::equal(const Tuple<PrimeFieldElement>& a, const Tuple<PrimeFieldElement>& b) const {
  if (a.size() != b.size()) throw DomainError("tuples of different lengths");
  std::vector<std::uint8_t> ea, eb;
  for (const auto& x : a) ea.push_back(encode_gf2(x));
  for (const auto& x : b) eb.push_back(encode_gf2(x));
  for (std::size_t k = 0; k < images_.size(); ++k) {
    bool hit = true;
    for (std::size_t i = 0; i < ea.size() && hit; ++i) hit = act(k, ea[i]) == eb[i];
    if (hit) return {true, table_->element(k)};
  }
  return {false, std::nullopt};
}

const G2Table& g2_over_f2() {
  static const G2Table table = enumerate_group(2);
  return table;
}

OracleResult orbit_equal_oracle(const Tuple<PrimeFieldElement>& a, const Tuple<PrimeFieldElement>& b) {
  static const OrbitOracle oracle(g2_over_f2());
  return oracle.equal(a, b);
}

}  // namespace g2
