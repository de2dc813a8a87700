#include <random>

#include "doctest.h"
#include "g2/orbits/orbits.hpp"
#include "helpers.hpp"

using namespace g2;

namespace {

using Q = Octonion<Rational>;
using F = Octonion<PrimeFieldElement>;

Matrix<PrimeFieldElement> random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix<PrimeFieldElement> m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = test::random_fp(f, rng);
    }
    if (!m.determinant().is_zero()) return m;
  }
}

GroupElement<PrimeFieldElement> random_g2(std::mt19937_64& rng) {
  const auto& table = g2_over_f2();
  return GroupElement<PrimeFieldElement>(table.unpack(table.packed(rng() % table.size())), {});
}

}  // namespace

TEST_CASE("rank and closure") {
  RationalField Qf;
  CHECK(rank(standard_basis_tuple<Rational>(Qf)) == 8);
  PrimeField f5(5);
  CHECK(rank(Tuple<PrimeFieldElement>{F::u(f5, 1), F::u(f5, 1).scaled(f5.from_int(2))}) == 1);
  CHECK(rank(Tuple<Rational>{Q::u(Qf, 1), Q::v(Qf, 2), Q::v(Qf, 3)}) == 3);

  auto alg = algebra_closure(Tuple<Rational>{Q::e1(Qf), Q::e2(Qf) + Q::u(Qf, 1)});
  CHECK(alg == Tuple<Rational>{Q::e1(Qf), Q::e2(Qf), Q::u(Qf, 1)});
  CHECK(algebra_closure(Tuple<Rational>{Q::identity(Qf)}) == Tuple<Rational>{Q::identity(Qf)});
  CHECK(algebra_closure(Tuple<Rational>{Q::u(Qf, 1), Q::v(Qf, 2), Q::v(Qf, 3)}).size() == 3);
  CHECK(algebra_closure(Tuple<Rational>{Q::u(Qf, 1), Q::v(Qf, 1)}).size() == 4);
  CHECK(algebra_closure(Tuple<Rational>{Q::u(Qf, 1), Q::u(Qf, 2)}).size() == 3);
}

TEST_CASE("gl right action") {
  PrimeField f2(2);
  std::mt19937_64 rng(31);
  auto t = test::random_tuple(f2, 3, rng);
  CHECK(gl_right_action(t, Matrix<PrimeFieldElement>::identity(f2, 3)) == t);
  CHECK_THROWS_AS(gl_right_action(t, Matrix<PrimeFieldElement>(f2, 3, 3)), DomainError);
  auto e = gl_right_action(Tuple<PrimeFieldElement>{F::u(f2, 1), F::v(f2, 1)},
                           Matrix<PrimeFieldElement>::from_ints(f2, {{1, 1}, {0, 1}}));
  CHECK(e[1] == F::u(f2, 1) + F::v(f2, 1));

  for (int k = 0; k < 200; ++k) {
    auto g = random_g2(rng);
    auto a = random_invertible(f2, 3, rng);
    auto x = test::random_tuple(f2, 3, rng);
    CHECK(gl_right_action(g.apply_tuple(x), a) == g.apply_tuple(gl_right_action(x, a)));
  }
  // Pairs in one orbit stay unseparated after a simultaneous right action.
  for (int k = 0; k < 100; ++k) {
    auto g = random_g2(rng);
    auto a = random_invertible(f2, 2, rng);
    auto x = test::random_tuple(f2, 2, rng);
    auto y = g.apply_tuple(x);
    CHECK_FALSE(separate(gl_right_action(x, a), gl_right_action(y, a), Family::S, 8).separated);
  }
}

TEST_CASE("separation witnesses") {
  RationalField Qf;
  auto z = Q::zero(Qf);
  auto u1 = Q::u(Qf, 1), v1 = Q::v(Qf, 1), u2 = Q::u(Qf, 2), v2 = Q::v(Qf, 2), v3 = Q::v(Qf, 3);

  auto c1 = separate(Tuple<Rational>{z, z}, Tuple<Rational>{u1, v1}, Family::S, 2);
  REQUIRE(c1.separated);
  CHECK(*c1.witness == InvariantDescriptor::trace({1, 2}));
  CHECK(c1.values->first == Rational(0));
  CHECK(c1.values->second == Rational(1));

  Tuple<Rational> zeros{z, z, z}, vs{v1, v2, v3};
  CHECK_FALSE(separate(zeros, vs, Family::S, 2).separated);
  CHECK_FALSE(separate(zeros, vs, Family::S, 2).witness.has_value());
  auto c2 = separate(zeros, vs, Family::S, 3);
  REQUIRE(c2.separated);
  CHECK(*c2.witness == InvariantDescriptor::trace({1, 2, 3}));
  CHECK(c2.values->second == Rational(-1));

  auto c = Q::e1(Qf) + u2 - v2 - Q::e2(Qf);
  Tuple<Rational> a{u1, v1, c, u2}, b{u1, v1, c, -v2};
  CHECK_FALSE(separate(a, b, Family::S, 3).separated);
  auto c3 = separate(a, b, Family::S, 4);
  REQUIRE(c3.separated);
  CHECK(*c3.witness == InvariantDescriptor::trace({1, 2, 3, 4}));
  CHECK(c3.values->first == Rational(0));
  CHECK(c3.values->second == Rational(-1));

  CHECK_THROWS_AS(separate(Tuple<Rational>{z}, Tuple<Rational>{z, z}, Family::S, 2), DomainError);
}

TEST_CASE("limits") {
  RationalField Qf;
  OneParamSubgroup lam({1, -1, 0});
  auto l1 = limit(lam, Tuple<Rational>{Q::u(Qf, 1)});
  CHECK(l1.exists);
  CHECK(l1.value == Tuple<Rational>{Q::zero(Qf)});
  auto l2 = limit(lam, Tuple<Rational>{Q::identity(Qf), Q::u(Qf, 1)});
  CHECK(l2.value == Tuple<Rational>{Q::identity(Qf), Q::zero(Qf)});
  CHECK_FALSE(limit(lam, Tuple<Rational>{Q::v(Qf, 1)}).exists);
  CHECK_THROWS_AS(OneParamSubgroup({1, 1, 0}), DomainError);

  // The limit agrees with theta(t) a evaluated at small t coordinatewise.
  PrimeField f7(7);
  auto th = theta(lam, f7.from_int(3));
  auto img = th.apply(F::u(f7, 1) + F::v(f7, 2) + F::e1(f7));
  CHECK(img == F::u(f7, 1).scaled(f7.from_int(3)) + F::v(f7, 2).scaled(f7.from_int(3)) + F::e1(f7));
}

TEST_CASE("nonclosed classes") {
  PrimeField f2(2);
  RationalField Qf;
  auto rows = nonclosedness_witnesses<PrimeFieldElement>(f2);
  REQUIRE(rows.size() == 9);
  for (const auto& r : rows) {
    CHECK(r.reproduced());
    CHECK(limit_is_in_closure(r.lambda, r.tuple));
  }
  for (const auto& r : nonclosedness_witnesses<Rational>(Qf)) {
    CHECK(r.reproduced());
    CHECK(limit_is_in_closure(r.lambda, r.tuple));
  }
  CHECK(rows[6].rank_before == 3);
  CHECK(rows[6].rank_after == 2);
  CHECK(rows[8].rank_after == 1);
  CHECK(rows[4].lambda.lambda == std::array<int, 3>{-1, 1, 0});
}

TEST_CASE("gram matrix") {
  PrimeField f2(2);
  auto m = gram_matrix(standard_basis_tuple<PrimeFieldElement>(f2));
  CHECK(m.determinant() == f2.one());
  RationalField Qf;
  CHECK(gram_matrix(standard_basis_tuple<Rational>(Qf)).determinant() == Rational(-1));
  auto z = gram_matrix(Tuple<Rational>{Q::zero(Qf), Q::zero(Qf)});
  CHECK(z == Matrix<Rational>(Qf, 2, 2));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    auto g = gram_matrix(test::random_tuple(Qf, 4, rng));
    CHECK(g == g.transpose());
  }
}

TEST_CASE("gf2 encoding and orbit oracle") {
  PrimeField f2(2);
  for (int b = 0; b < 256; ++b) CHECK(encode_gf2(decode_gf2(static_cast<std::uint8_t>(b))) == b);
  CHECK(encode_gf2(F::e1(f2)) == 1);
  CHECK(encode_gf2(F::e2(f2)) == 128);
  CHECK(encode_gf2(F::v(f2, 1)) == 16);
  CHECK_THROWS_AS(encode_gf2(F::e1(PrimeField(3))), DomainError);

  auto r = orbit_equal_oracle({F::e1(f2)}, {F::e2(f2)});
  REQUIRE(r.equal);
  CHECK(r.witness->apply(F::e1(f2)) == F::e2(f2));
  CHECK(hbar<PrimeFieldElement>(f2).apply(F::e1(f2)) == F::e2(f2));
  CHECK_FALSE(orbit_equal_oracle({F::e1(f2)}, {F::identity(f2)}).equal);

  std::mt19937_64 rng(77);
  for (int k = 0; k < 100; ++k) {
    auto a = test::random_tuple(f2, 2, rng);
    auto b = test::random_tuple(f2, 2, rng);
    auto res = orbit_equal_oracle(a, b);
    if (res.equal) {
      CHECK(res.witness->apply_tuple(a) == b);
      CHECK_FALSE(separate(a, b, Family::S, 8).separated);
    }
    auto g = random_g2(rng);
    auto same = orbit_equal_oracle(a, g.apply_tuple(a));
    CHECK(same.equal);
  }
}

TEST_CASE("subalgebra fingerprints") {
  PrimeField f2(2);
  auto one = subalgebra_class_fingerprint(Tuple<PrimeFieldElement>{F::identity(f2)});
  auto e1 = subalgebra_class_fingerprint(Tuple<PrimeFieldElement>{F::e1(f2)});
  CHECK_FALSE(one == e1);
  CHECK(one.contains_identity);
  CHECK_THROWS_AS(subalgebra_class_fingerprint(Tuple<PrimeFieldElement>{F::u(f2, 1), F::v(f2, 1)}), DomainError);

  auto bases = low_dimensional_subalgebra_bases<PrimeFieldElement>(f2);
  REQUIRE(bases.size() == 12);
  for (const auto& [name, basis] : bases) {
    INFO(name);
    CHECK(algebra_closure(basis).size() == basis.size());
    CHECK_NOTHROW(subalgebra_class_fingerprint(basis));
  }
  CHECK(subalgebra_class_fingerprint(bases[7].second) ==
        subalgebra_class_fingerprint(hbar<PrimeFieldElement>(f2).apply_tuple(bases[7].second)));
  // Equal-length basis tuples are pairwise inequivalent over F_2.
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if (bases[i].second.size() != bases[j].second.size()) continue;
      INFO(bases[i].first << " vs " << bases[j].first);
      CHECK_FALSE(orbit_equal_oracle(bases[i].second, bases[j].second).equal);
    }
  }
}

TEST_CASE("reconstructing automorphisms from the standard basis") {
  PrimeField f2(2);
  std::mt19937_64 rng(5);
  auto basis = standard_basis_tuple<PrimeFieldElement>(f2);
  for (int k = 0; k < 50; ++k) {
    auto g = random_g2(rng);
    auto f = reconstruct_automorphism(g.apply_tuple(basis));
    REQUIRE(f.has_value());
    CHECK(f->matrix() == g.matrix());
  }
  auto bad = basis;
  std::swap(bad[2], bad[3]);
  CHECK_FALSE(reconstruct_automorphism(bad).has_value());
  RationalField Qf;
  auto h = compose(delta1(Vec3<Rational>(Rational(2), Rational(0), Rational(-1))), hbar<Rational>(Qf));
  auto rec = reconstruct_automorphism(h.apply_tuple(standard_basis_tuple<Rational>(Qf)));
  REQUIRE(rec.has_value());
  CHECK(rec->matrix() == h.matrix());
}
