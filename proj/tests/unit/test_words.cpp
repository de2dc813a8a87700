#include <random>

#include "doctest.h"
#include "g2/words/normalize.hpp"
#include "helpers.hpp"

using namespace g2;
using test::oct;

namespace {

using Q = Octonion<Rational>;

template <class Ring>
void check_sound(const NAWord& w, const Ring& ring, int n, std::mt19937_64& rng, int samples) {
  TraceExpr e = normalize_trace(w);
  for (int k = 0; k < samples; ++k) {
    auto tuple = test::random_tuple(ring, static_cast<std::size_t>(n), rng);
    INFO(w.to_string() << " -> " << e.to_string());
    CHECK(evaluate(e, tuple) == trace(evaluate(w, tuple)));
  }
}

}  // namespace

TEST_CASE("word construction and printing") {
  auto w = NAWord::parse("((x3x1)x2)");
  CHECK(w.to_string() == "((x3x1)x2)");
  CHECK(w.degree() == 3);
  CHECK(w.letters() == std::vector<int>{3, 1, 2});
  CHECK(w.multidegree(3) == std::vector<int>{1, 1, 1});
  CHECK(w.is_left_normed());
  CHECK(w.left().to_string() == "(x3x1)");
  CHECK(w.right() == NAWord::letter(2));
  CHECK_FALSE(NAWord::parse("(x1(x2x3))").is_left_normed());
  CHECK_FALSE(NAWord::parse("((x1x1)x2)").is_multilinear());
  CHECK(left_normed({1}) == NAWord::letter(1));
  CHECK(left_normed({1, 2}).to_string() == "(x1x2)");
  CHECK(left_normed({1, 2, 3, 4}).to_string() == "(((x1x2)x3)x4)");
  CHECK_THROWS_AS(NAWord::parse("(x1x2"), DomainError);
  CHECK_THROWS_AS(NAWord::letter(0), DomainError);
  CHECK_THROWS_AS(left_normed({}), DomainError);
}

TEST_CASE("shapes follow the Catalan numbers") {
  CHECK(word_shapes(1).size() == 1);
  CHECK(word_shapes(3).size() == 2);
  CHECK(word_shapes(4).size() == 5);
  CHECK(word_shapes(5).size() == 14);
  CHECK(relabel(word_shapes(3)[0], {2, 2, 1}).letters() == std::vector<int>{2, 2, 1});
}

TEST_CASE("evaluation") {
  RationalField Qf;
  CHECK(evaluate(NAWord::letter(1), Tuple<Rational>{Q::e1(Qf)}) == Q::e1(Qf));
  Tuple<Rational> vs{Q::v(Qf, 1), Q::v(Qf, 2), Q::v(Qf, 3)};
  auto p = evaluate(NAWord::parse("((x1x2)x3)"), vs);
  CHECK(trace(p * (Q::e1(Qf) - Q::e2(Qf))) == Rational(-1));
  auto c = Q::e1(Qf) + Q::u(Qf, 2) - Q::v(Qf, 2) - Q::e2(Qf);
  Tuple<Rational> tuple{Q::u(Qf, 1), Q::v(Qf, 1), c, Q::u(Qf, 2)};
  CHECK(trace(evaluate(left_normed({1, 2, 3, 4}), tuple)) == Rational(0));
  CHECK_THROWS_AS(evaluate(NAWord::letter(2), Tuple<Rational>{Q::e1(Qf)}), DomainError);
}

TEST_CASE("descriptors") {
  CHECK(InvariantDescriptor::trace({1, 2, 3}).to_string() == "tr(1,2,3)");
  CHECK(InvariantDescriptor::norm(2).to_string() == "n(2)");
  CHECK_THROWS_AS(InvariantDescriptor::trace({2, 1}), DomainError);
  CHECK_THROWS_AS(InvariantDescriptor::trace({}), DomainError);
  CHECK(InvariantDescriptor::norm(4) < InvariantDescriptor::trace({1, 2}));
  CHECK(InvariantDescriptor::trace({3}) < InvariantDescriptor::norm(1));
  CHECK(InvariantDescriptor::norm(1).multidegree(2) == std::vector<int>{2, 0});
}

TEST_CASE("normal forms of small words") {
  CHECK(normalize_trace(NAWord::parse("(x1x2)")) == TraceExpr::symbol(InvariantDescriptor::trace({1, 2})));
  CHECK(normalize_trace(NAWord::parse("(x2x1)")) == TraceExpr::symbol(InvariantDescriptor::trace({1, 2})));
  CHECK(normalize_trace(NAWord::parse("(x1x1)")).to_string() == "-2*n(1) + tr(1)*tr(1)");
  CHECK(normalize_trace(NAWord::parse("((x1x2)x3)")) == TraceExpr::symbol(InvariantDescriptor::trace({1, 2, 3})));
  auto e = normalize_trace(NAWord::parse("((x2x1)x3)"));
  CHECK(e.coefficient({InvariantDescriptor::trace({1, 2, 3})}) == -1);
  CHECK(normalize_trace(NAWord::parse("((x1x1)x1)"), 2).to_string() == normalize_trace(NAWord::parse("((x1x1)x1)")).reduced_mod(2).to_string());
}

TEST_CASE("multilinear sign") {
  auto s = multilinear_sign(NAWord::parse("((x3x1)x2)"));
  CHECK(s.kind == MultilinearSign::Kind::Multilinear);
  CHECK(s.sign == 1);
  CHECK(s.indices == std::vector<int>{1, 2, 3});
  CHECK(multilinear_sign(NAWord::parse("((x1x1)x2)")).kind == MultilinearSign::Kind::Decomposable);
  CHECK(multilinear_sign(NAWord::parse("(x1x1)")).kind == MultilinearSign::Kind::Square);
  auto two = multilinear_sign(NAWord::parse("(x2x1)"));
  CHECK(two.sign == 1);
  CHECK(two.indices == std::vector<int>{1, 2});
  // Left-normed multilinear words carry the permutation sign.
  std::vector<int> perm{1, 2, 3, 4, 5};
  do {
    CHECK(multilinear_sign(left_normed(perm)).sign == permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("adjacent transposition flips the leading sign") {
  std::vector<int> perm{1, 2, 3, 4};
  do {
    for (std::size_t j = 0; j + 1 < perm.size(); ++j) {
      auto swapped = perm;
      std::swap(swapped[j], swapped[j + 1]);
      CHECK(multilinear_sign(left_normed(perm)).sign == -multilinear_sign(left_normed(swapped)).sign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("x1(x2x3) against evaluation") {
  std::mt19937_64 rng(9);
  auto w = NAWord::parse("(x1(x2x3))");
  check_sound(w, PrimeField(5), 3, rng, 500);
  check_sound(w, PrimeField(2), 3, rng, 500);
}

TEST_CASE("normalizer soundness on degree <= 4 words") {
  std::mt19937_64 rng(10);
  for (int d = 1; d <= 4; ++d) {
    for (const auto& shape : word_shapes(d)) {
      std::vector<int> labels(static_cast<std::size_t>(d), 1);
      while (true) {
        auto w = relabel(shape, labels);
        check_sound(w, PrimeField(5), 3, rng, 5);
        check_sound(w, RationalField{}, 3, rng, 3);
        std::size_t k = 0;
        while (k < labels.size() && labels[k] == 3) labels[k++] = 1;
        if (k == labels.size()) break;
        ++labels[k];
      }
    }
  }
}

TEST_CASE("normal form output uses only sorted descriptors") {
  for (const auto& shape : word_shapes(5)) {
    auto e = normalize_trace(relabel(shape, {3, 1, 3, 2, 1}));
    for (const auto& d : e.symbols()) {
      if (!d.is_norm()) CHECK(std::is_sorted(d.indices.begin(), d.indices.end()));
    }
  }
}
