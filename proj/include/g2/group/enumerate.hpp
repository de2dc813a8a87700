#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "g2/group/group.hpp"
#include "g2/scalars/prime_field.hpp"

namespace g2 {

/// 8x8 matrix over GF(q), row-major, one byte per entry.
using PackedMatrix = std::array<std::uint8_t, 64>;

struct PackedMatrixHash {
  std::size_t operator()(const PackedMatrix& m) const noexcept;
};

/// |G2(F_q)| = q^6 (q^6 - 1)(q^2 - 1).
Integer g2_order_formula(std::uint64_t q);

/// The finite group G2(F_q) obtained by BFS closure of the generators
/// I + tE_ij (i != j), delta1(t u_i), delta2(t v_i) for t in F_q^*.
class G2Table {
 public:
  std::uint64_t q() const { return q_; }
  std::size_t size() const { return elements_.size(); }
  const PackedMatrix& packed(std::size_t k) const { return elements_[k]; }
  const std::vector<PackedMatrix>& elements() const { return elements_; }
  const std::vector<GroupElement<PrimeFieldElement>>& generators() const { return generators_; }

  /// Element k with its generator word reconstructed from the BFS tree.
  GroupElement<PrimeFieldElement> element(std::size_t k) const;
  std::optional<std::size_t> find(const PackedMatrix& m) const;

  static PackedMatrix pack(const Matrix<PrimeFieldElement>& m);
  Matrix<PrimeFieldElement> unpack(const PackedMatrix& m) const;

 private:
  friend G2Table enumerate_group(std::uint64_t q, std::size_t max_elements);

  std::uint64_t q_ = 0;
  std::vector<PackedMatrix> elements_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> via_;
  std::vector<GroupElement<PrimeFieldElement>> generators_;
  std::unordered_map<PackedMatrix, std::size_t, PackedMatrixHash> index_;
};

/// Throws ResourceError when the group order exceeds `max_elements` and
/// DomainError when q is not a prime.
G2Table enumerate_group(std::uint64_t q, std::size_t max_elements = 200000);

}  // namespace g2
