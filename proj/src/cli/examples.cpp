#include <algorithm>
#include <random>
#include <sstream>

#include "g2/cli/cli.hpp"
#include "g2/orbits/orbits.hpp"
#include "g2/symbolic/symbolic.hpp"
#include "g2/words/normalize.hpp"

namespace g2 {

namespace {

using Q = Octonion<Rational>;
using F = Octonion<PrimeFieldElement>;

class Recorder {
 public:
  void check(std::string name, bool passed, std::string detail = "") {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }
  template <class Fn>
  void run(std::string name, Fn&& fn) {
    try {
      fn(name);
    } catch (const std::exception& e) {
      check(name, false, std::string("threw: ") + e.what());
    }
  }
  std::vector<ExampleResult> take() { return std::move(results_); }

 private:
  std::vector<ExampleResult> results_;
};

TupleFile rational_file(Tuple<Rational> t) {
  TupleFile f;
  f.rational = std::move(t);
  return f;
}

TupleFile residue_file(std::uint64_t p, Tuple<PrimeFieldElement> t) {
  TupleFile f;
  f.modulus = p;
  f.residues = std::move(t);
  return f;
}

F random_f(const PrimeField& f, std::mt19937_64& rng) {
  std::vector<PrimeFieldElement> z;
  for (int k = 0; k < 8; ++k) z.push_back(f.element(rng() % f.modulus()));
  return F::from_coords(z);
}

Q random_q(std::mt19937_64& rng) {
  std::vector<Rational> z;
  for (int k = 0; k < 8; ++k) z.push_back(Rational(Integer(static_cast<long>(rng() % 11) - 5), Integer(static_cast<long>(rng() % 3) + 1)));
  return Q::from_coords(z);
}

GroupElement<PrimeFieldElement> random_f2_element(std::mt19937_64& rng) {
  const auto& table = g2_over_f2();
  return GroupElement<PrimeFieldElement>(table.unpack(table.packed(rng() % table.size())), {});
}

}  // namespace

std::vector<ExampleResult> reference_examples() {
  Recorder rec;
  RationalField Qf;
  PrimeField f2(2), f5(5);
  const Q e1 = Q::e1(Qf), e2 = Q::e2(Qf), one = Q::identity(Qf), zero = Q::zero(Qf);
  const Q u1 = Q::u(Qf, 1), u2 = Q::u(Qf, 2), u3 = Q::u(Qf, 3), v1 = Q::v(Qf, 1), v2 = Q::v(Qf, 2), v3 = Q::v(Qf, 3);
  const Q c = e1 + u2 - v2 - e2;
  std::mt19937_64 rng(2024);

  // Octonion arithmetic.
  rec.check("u1 v1 = e1", u1 * v1 == e1);
  rec.check("u1 u2 = v3", u1 * u2 == v3);
  rec.check("u1 u3 = -v2", u1 * u3 == -v2);
  rec.check("n(u1 + v1) = -1", norm(u1 + v1) == Rational(-1));
  rec.run("conjugation reverses products (200 random pairs)", [&](const std::string& name) {
    bool ok = true;
    for (int k = 0; k < 200; ++k) {
      auto a = random_q(rng), b = random_q(rng);
      ok = ok && (a * b).conj() == b.conj() * a.conj();
    }
    rec.check(name, ok);
  });

  // Group.
  rec.run("signed permutation in SL3 sends (u1,v1,u2,v3) to (u1,v1,u3,-v2)", [&](const std::string& name) {
    int hits = 0;
    std::array<int, 3> perm{0, 1, 2};
    do {
      for (int signs = 0; signs < 8; ++signs) {
        Matrix<Rational> m(Qf, 3, 3);
        for (std::size_t i = 0; i < 3; ++i) m(i, static_cast<std::size_t>(perm[i])) = Rational((signs >> i) & 1 ? -1 : 1);
        if (!(m.determinant() == Rational(1))) continue;
        auto g = from_sl3(m);
        if (g.apply_tuple({u1, v1, u2, v3}) == Tuple<Rational>{u1, v1, u3, -v2}) ++hits;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    rec.check(name, hits == 1, std::to_string(hits) + " matrix found");
  });
  rec.run("delta1(0,0,1) on (u1, v2, 1 + u3 + v3) over GF(2)", [&](const std::string& name) {
    auto g = delta1(Vec3<PrimeFieldElement>(f2.zero(), f2.zero(), f2.one()));
    auto img = g.apply_tuple({F::u(f2, 1), F::v(f2, 2), F::identity(f2) + F::u(f2, 3) + F::v(f2, 3)});
    rec.check(name, img == Tuple<PrimeFieldElement>{F::u(f2, 1) + F::v(f2, 2), F::v(f2, 2), F::v(f2, 3)},
              "third image is v3");
  });
  rec.run("theta(1,-1,0)(t) u1 = t u1 over GF(5)", [&](const std::string& name) {
    bool ok = true;
    for (int t = 1; t < 5; ++t) {
      auto s = f5.from_int(t);
      ok = ok && theta(OneParamSubgroup({1, -1, 0}), s).apply(F::u(f5, 1)) == F::u(f5, 1).scaled(s);
    }
    rec.check(name, ok);
  });
  rec.run("trace and norm are preserved (500 random pairs over GF(5))", [&](const std::string& name) {
    bool ok = true;
    for (int k = 0; k < 500; ++k) {
      auto u = Vec3<PrimeFieldElement>(f5.element(rng() % 5), f5.element(rng() % 5), f5.element(rng() % 5));
      auto g = k % 3 == 0 ? delta1(u) : k % 3 == 1 ? delta2(u) : compose(hbar<PrimeFieldElement>(f5), delta1(u));
      auto a = random_f(f5, rng);
      ok = ok && trace(g.apply(a)) == trace(a) && norm(g.apply(a)) == norm(a);
    }
    rec.check(name, ok);
  });

  // Words and descriptors.
  rec.check("tr(((v1 v2) v3)(e1 - e2)) = -1",
            trace(evaluate(NAWord::parse("((x1x2)x3)"), Tuple<Rational>{v1, v2, v3}) * (e1 - e2)) == Rational(-1));
  rec.check("tr(((a1 a2) a3) a4) = 0 on (u1, v1, c, u2)",
            trace(evaluate(left_normed({1, 2, 3, 4}), Tuple<Rational>{u1, v1, c, u2})).is_zero());
  rec.run("sign of ((x3 x1) x2) is +1 on indices 1,2,3", [&](const std::string& name) {
    auto s = multilinear_sign(NAWord::parse("((x3x1)x2)"));
    rec.check(name, s.kind == MultilinearSign::Kind::Multilinear && s.sign == 1 && s.indices == std::vector<int>{1, 2, 3});
  });
  rec.check("((x1 x1) x2) is decomposable",
            multilinear_sign(NAWord::parse("((x1x1)x2)")).kind == MultilinearSign::Kind::Decomposable);
  rec.check("n(1) on (u1 + v1) = -1", eval_descriptor(InvariantDescriptor::norm(1), Tuple<Rational>{u1 + v1}) == Rational(-1));
  rec.check("tr(1,2,3) on (v1, v2, v3) = -1",
            eval_descriptor(InvariantDescriptor::trace({1, 2, 3}), Tuple<Rational>{v1, v2, v3}) == Rational(-1));
  rec.check("tr(1,2,3,4) on (v1, v2, v3, e1 - e2) = -1",
            eval_descriptor(InvariantDescriptor::trace({1, 2, 3, 4}), Tuple<Rational>{v1, v2, v3, e1 - e2}) == Rational(-1));

  // Symbolic identities.
  for (Identity id : {Identity::Eq2, Identity::EqN, Identity::Eq6}) {
    rec.run(identity_name(id) + " over Q", [&](const std::string& name) {
      auto r = verify_identity(id, 0);
      rec.check(name, r.passed, r.failing_monomial);
    });
  }
  rec.run("skew-symmetrized degree-4 trace formula", [&](const std::string& name) {
    auto r = verify_lemmaQ();
    rec.check(name, r.passed && r.specialization_passed, r.failing_monomial);
    rec.check("its coefficients lie in Z[1/2]", r.coefficients_in_z_half);
  });
  rec.run("Psi bridge for n <= 3, length <= 3", [&](const std::string& name) {
    auto r = verify_psi_bridge(3, 3);
    rec.check(name, r.passed(), std::to_string(r.words_checked) + " words");
  });
  rec.run("tr(F(A)) = tr(A) on 100 random matrices over GF(5)", [&](const std::string& name) {
    bool ok = true;
    for (int k = 0; k < 100; ++k) {
      Matrix<PrimeFieldElement> a(f5, 2, 2);
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) a(i, j) = f5.element(rng() % 5);
      }
      ok = ok && trace(embed_matrix(a)) == matrix_trace(a);
    }
    rec.check(name, ok);
  });
  rec.run("matrix traces of length 4 are minimal only in characteristic two", [&](const std::string& name) {
    auto set = matrix_invariants(4, 4);
    auto has4 = [](const std::vector<MatrixDescriptor>& ds) {
      return std::any_of(ds.begin(), ds.end(), [](const auto& d) { return d.kind == MatrixDescriptor::Kind::Trace && d.degree() == 4; });
    };
    rec.check(name, has4(set.minimal_for_characteristic(2)) && !has4(set.minimal_for_characteristic(3)) &&
                        !has4(set.minimal_for_characteristic(0)));
  });
  rec.run("tr(1,2,3,4) is not a polynomial in lower invariants", [&](const std::string& name) {
    auto r = decomposability_check(InvariantDescriptor::trace({1, 2, 3, 4}), enumerate_set(Family::S, 4, 3), 4);
    rec.check(name, !r.expressible, std::to_string(r.basis_size) + " products");
  });
  rec.run("matrix tr(1,2) is not a product of traces", [&](const std::string& name) {
    auto r = decomposability_check(MatrixDescriptor::trace({1, 2}), {MatrixDescriptor::trace({1}), MatrixDescriptor::trace({2})}, 2);
    rec.check(name, !r.expressible);
  });

  // Orbits.
  rec.check("alg(e1, e2 + u1) = span(e1, e2, u1)", algebra_closure(Tuple<Rational>{e1, e2 + u1}) == Tuple<Rational>{e1, e2, u1});
  rec.run("right GL action commutes with G2 (200 random over GF(2))", [&](const std::string& name) {
    bool ok = true;
    for (int k = 0; k < 200; ++k) {
      auto g = random_f2_element(rng);
      Matrix<PrimeFieldElement> a = Matrix<PrimeFieldElement>::identity(f2, 3);
      a(rng() % 3, 0) = f2.one();
      a(0, 0) = f2.one();
      if (a.determinant().is_zero()) continue;
      Tuple<PrimeFieldElement> x{random_f(f2, rng), random_f(f2, rng), random_f(f2, rng)};
      ok = ok && gl_right_action(g.apply_tuple(x), a) == g.apply_tuple(gl_right_action(x, a));
    }
    rec.check(name, ok);
  });
  rec.run("right GL action keeps unseparated pairs unseparated", [&](const std::string& name) {
    bool ok = true;
    for (int k = 0; k < 50; ++k) {
      auto g = random_f2_element(rng);
      Tuple<PrimeFieldElement> x{random_f(f2, rng), random_f(f2, rng)};
      auto a = Matrix<PrimeFieldElement>::from_ints(f2, {{1, 1}, {0, 1}});
      ok = ok && !separate(gl_right_action(x, a), gl_right_action(g.apply_tuple(x), a), Family::S, 8).separated;
    }
    rec.check(name, ok);
  });
  rec.run("(0,0) and (u1,v1) differ at tr(1,2): 0 vs 1", [&](const std::string& name) {
    auto r = separate(Tuple<Rational>{zero, zero}, Tuple<Rational>{u1, v1}, Family::S, 2);
    rec.check(name, r.separated && *r.witness == InvariantDescriptor::trace({1, 2}) && r.values->first == Rational(0) &&
                        r.values->second == Rational(1));
  });
  rec.run("(0,0,0) and (v1,v2,v3) agree up to degree 2, differ at tr(1,2,3)", [&](const std::string& name) {
    Tuple<Rational> a{zero, zero, zero}, b{v1, v2, v3};
    auto r = separate(a, b, Family::S, 3);
    rec.check(name, !separate(a, b, Family::S, 2).separated && r.separated && *r.witness == InvariantDescriptor::trace({1, 2, 3}));
  });
  rec.run("(u1,v1,c,u2) and (u1,v1,c,-v2) differ first at tr(1,2,3,4): 0 vs -1", [&](const std::string& name) {
    Tuple<Rational> a{u1, v1, c, u2}, b{u1, v1, c, -v2};
    auto r = separate(a, b, Family::S, 4);
    rec.check(name, !separate(a, b, Family::S, 3).separated && r.separated &&
                        *r.witness == InvariantDescriptor::trace({1, 2, 3, 4}) && r.values->first == Rational(0) &&
                        r.values->second == Rational(-1));
  });
  rec.run("limit of (u1) along (1,-1,0) is (0)", [&](const std::string& name) {
    auto r = limit(OneParamSubgroup({1, -1, 0}), Tuple<Rational>{u1});
    rec.check(name, r.exists && r.value == Tuple<Rational>{zero});
  });
  rec.run("limit of (1, u1) along (1,-1,0) is (1, 0)", [&](const std::string& name) {
    auto r = limit(OneParamSubgroup({1, -1, 0}), Tuple<Rational>{one, u1});
    rec.check(name, r.exists && r.value == Tuple<Rational>{one, zero});
  });
  rec.run("rank-dropping limits for the nine non-closed bases", [&](const std::string& name) {
    auto rows = nonclosedness_witnesses<PrimeFieldElement>(f2);
    bool ok = rows.size() == 9;
    std::string detail;
    for (const auto& r : rows) {
      ok = ok && r.reproduced() && limit_is_in_closure(r.lambda, r.tuple);
      detail += (detail.empty() ? "" : ", ") + std::to_string(r.rank_before) + "->" + std::to_string(r.rank_after);
    }
    rec.check(name, ok, detail);
  });
  rec.check("Gram matrix of the standard basis over GF(2) is nonsingular",
            !gram_matrix(standard_basis_tuple<PrimeFieldElement>(f2)).determinant().is_zero());
  rec.run("(e1) and (e2) lie in one orbit over GF(2), via hbar", [&](const std::string& name) {
    auto r = orbit_equal_oracle({F::e1(f2)}, {F::e2(f2)});
    rec.check(name, r.equal && r.witness->apply(F::e1(f2)) == F::e2(f2) &&
                        hbar<PrimeFieldElement>(f2).apply(F::e1(f2)) == F::e2(f2));
  });
  rec.run("span(e1, e2) is the only two-dimensional basis without a rank-dropping limit", [&](const std::string& name) {
    auto rows = nonclosedness_witnesses<PrimeFieldElement>(f2);
    std::vector<std::string> closed;
    for (const auto& [label, basis] : low_dimensional_subalgebra_bases<PrimeFieldElement>(f2)) {
      if (basis.size() != 2) continue;
      bool witnessed = std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return r.tuple == basis; });
      if (!witnessed) closed.push_back(label);
    }
    auto fp = subalgebra_class_fingerprint(Tuple<PrimeFieldElement>{F::e1(f2), F::e2(f2)});
    rec.check(name, closed == std::vector<std::string>{"{e1,e2}"} &&
                        fp == subalgebra_class_fingerprint(hbar<PrimeFieldElement>(f2).apply_tuple({F::e1(f2), F::e2(f2)})));
  });

  // Command line.
  rec.run("eval of (u1 + v1) over GF(5) prints n(1) = 4", [&](const std::string& name) {
    std::ostringstream out;
    cmd_eval(residue_file(5, {F::u(f5, 1) + F::v(f5, 1)}), Family::S, 2, out);
    rec.check(name, out.str().find("n(1) = 4\n") != std::string::npos);
  });
  rec.run("separate exit codes 0 / 1 / 0 on the small pairs", [&](const std::string& name) {
    std::ostringstream sink;
    int a = cmd_separate(rational_file({zero, zero}), rational_file({u1, v1}), Family::S, 2, sink);
    int b = cmd_separate(rational_file({zero, zero, zero}), rational_file({v1, v2, v3}), Family::S, 2, sink);
    int d = cmd_separate(rational_file({zero, zero, zero}), rational_file({v1, v2, v3}), Family::S, 3, sink);
    rec.check(name, a == 0 && b == 1 && d == 0);
  });

  return rec.take();
}

}  // namespace g2
