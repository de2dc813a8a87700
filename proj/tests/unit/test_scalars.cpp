#include <random>

#include "doctest.h"
#include "g2/error.hpp"
#include "g2/scalars/scalars.hpp"

using namespace g2;

TEST_CASE("prime field basics") {
  PrimeField f2(2);
  CHECK(f2.one() + f2.one() == f2.zero());
  PrimeField f5(5);
  CHECK(f5.element(2).inverse() == f5.element(3));
  CHECK(f5.from_int(-1) == f5.element(4));
  CHECK(f5.from_integer(Integer(-7)) == f5.element(3));
  CHECK_THROWS_AS(f5.zero().inverse(), DomainError);
  CHECK_THROWS_AS(PrimeField(4), DomainError);
  CHECK_THROWS_AS(PrimeField(1), DomainError);
  CHECK_THROWS_AS(f5.one() + PrimeField(7).one(), RingMismatch);
}

TEST_CASE("inverse agrees with brute force") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    PrimeField f(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      std::uint64_t brute = 0;
      for (std::uint64_t b = 1; b < p; ++b) {
        if (a * b % p == 1) brute = b;
      }
      CHECK(f.element(a).inverse().residue() == brute);
    }
  }
}

TEST_CASE("field axioms exhaustively for p <= 5") {
  for (std::uint64_t p : {2, 3, 5}) {
    PrimeField f(p);
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        for (std::uint64_t c = 0; c < p; ++c) {
          auto x = f.element(a), y = f.element(b), z = f.element(c);
          CHECK((x + y) + z == x + (y + z));
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
      }
      if (a != 0) CHECK(f.element(a) * f.element(a).inverse() == f.one());
      CHECK(f.element(a) + (-f.element(a)) == f.zero());
    }
  }
}

TEST_CASE("field axioms randomized for p = 7 and a large prime") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {7ULL, 4294967291ULL}) {
    PrimeField f(p);
    for (int k = 0; k < 500; ++k) {
      auto x = f.element(rng()), y = f.element(rng()), z = f.element(rng());
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y) * z == x * (y * z));
      if (!x.is_zero()) CHECK(x * x.inverse() == f.one());
    }
  }
}

TEST_CASE("rationals") {
  CHECK(Rational(Integer(1), Integer(2)) * Rational(24) == Rational(12));
  CHECK(Rational(Integer(2), Integer(-4)).to_string() == "-1/2");
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
  CHECK(in_z_half(Rational(Integer(3), Integer(4))));
  CHECK_FALSE(in_z_half(Rational(Integer(1), Integer(3))));
  CHECK(in_z_half(Rational(-5)));
}

TEST_CASE("coefficients in Z[1/2]") {
  auto R = q_poly_ring();
  auto z11 = R.variable(Variable::z(1, 1));
  CHECK(coefficients_in_Z_half(z11.scaled(Rational(Integer(3), Integer(4)))));
  CHECK_FALSE(coefficients_in_Z_half(z11.scaled(Rational(Integer(1), Integer(3)))));
}

TEST_CASE("polynomial substitution") {
  auto R = q_poly_ring();
  auto z = [&](int i, int j) { return R.variable(Variable::z(i, j)); };
  auto f = z(1, 3);
  CHECK(substitute(f, std::map<Variable, Rational>{{Variable::z(1, 3), Rational(0)}}).is_zero());

  // 2x2 determinant of [[z11, z12], [z15, z18]].
  auto det = z(1, 1) * z(1, 8) - z(1, 2) * z(1, 5);
  std::map<Variable, Rational> a{{Variable::z(1, 1), Rational(3)},
                                 {Variable::z(1, 2), Rational(5)},
                                 {Variable::z(1, 5), Rational(-2)},
                                 {Variable::z(1, 8), Rational(Integer(1), Integer(2))}};
  CHECK(substitute(det, a) == QPoly(RationalField{}, Rational(Integer(23), Integer(2))));

  PrimeField f5(5);
  auto S = fp_poly_ring(5);
  auto mixed = std::map<Variable, FpPoly>{{Variable::z(1, 1), FpPoly(PrimeField(7), PrimeField(7).one())}};
  CHECK_THROWS_AS(substitute(S.variable(Variable::z(1, 1)), mixed), RingMismatch);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(11);
  auto R = fp_poly_ring(5);
  PrimeField f5(5);
  auto random_poly = [&]() {
    FpPoly p = R.zero();
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      for (int k = 0; k < 3; ++k) {
        m = m * Monomial::of(Variable::z(1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 8)),
                             static_cast<std::uint32_t>(rng() % 2));
      }
      p += FpPoly::monomial(f5, m, f5.element(rng()));
    }
    return p;
  };
  for (int k = 0; k < 100; ++k) {
    auto f = random_poly(), g = random_poly(), h = random_poly();
    CHECK((f + g) * h == f * h + g * h);
    std::map<Variable, PrimeFieldElement> a;
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 8; ++j) {
        if (rng() % 3 != 0) a.emplace(Variable::z(i, j), f5.element(rng()));
      }
    }
    CHECK(substitute(f * g, a) == substitute(f, a) * substitute(g, a));
    CHECK(substitute(f + g, a) == substitute(f, a) + substitute(g, a));
  }
}

TEST_CASE("polynomial units and multidegree") {
  auto R = q_poly_ring();
  auto x = R.variable(Variable::z(1, 1));
  auto y = R.variable(Variable::z(2, 4));
  CHECK_THROWS_AS(x.inverse(), DomainError);
  CHECK(R.from_integer(2).inverse() == QPoly(RationalField{}, Rational(Integer(1), Integer(2))));
  CHECK((x * y).multidegree(2) == std::vector<std::uint32_t>{1, 1});
  CHECK_FALSE((x + y).multidegree(2).has_value());
  CHECK(R.zero().multidegree(2) == std::vector<std::uint32_t>{0, 0});
  CHECK((x * x * y).to_string() == "z1_1^2*z2_4");
}
