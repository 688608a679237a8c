#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lrc/error.hpp"
#include "lrc/polynomial.hpp"

using namespace lrc;

namespace {

Polynomial poly(const FieldPtr& f, std::vector<std::uint32_t> c) { return Polynomial(f, std::move(c)); }

Polynomial random_poly(const FieldPtr& f, std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f->order() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = pick(rng);
  return poly(f, c);
}

}  // namespace

TEST_CASE("long division of x^8 - 1 by x^2 - 2 over F_5") {
  const auto f5 = Field::make(5, 1);
  const auto dm = divmod(Polynomial::cycle(f5, 8), poly(f5, {3, 0, 1}));
  CHECK(dm.quotient == poly(f5, {3, 0, 4, 0, 2, 0, 1}));
  CHECK(dm.remainder.is_zero());
}

TEST_CASE("f divided by itself") {
  const auto f = Field::make(3, 2);
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_poly(f, rng, 8);
    if (p.is_zero()) continue;
    const auto dm = divmod(p, p);
    CHECK(dm.quotient == Polynomial::constant(f, 1));
    CHECK(dm.remainder.is_zero());
  }
}

TEST_CASE("division identity on random pairs") {
  for (auto f : {Field::make(13, 1), Field::make(2, 3), Field::make(3, 2)}) {
    std::mt19937 rng(f->order());
    for (int i = 0; i < 500; ++i) {
      const auto a = random_poly(f, rng, 12);
      const auto b = random_poly(f, rng, 6);
      if (b.is_zero()) continue;
      const auto dm = divmod(a, b);
      REQUIRE(dm.quotient * b + dm.remainder == a);
      REQUIRE(dm.remainder.degree() < b.degree());
    }
  }
  const auto f = Field::make(5, 1);
  CHECK_THROWS_AS(divmod(poly(f, {1, 1}), Polynomial(f)), PreconditionError);
}

TEST_CASE("products and sums") {
  const auto f13 = Field::make(13, 1);
  CHECK(poly(f13, {12, 1}) * poly(f13, {11, 1}) == poly(f13, {2, 10, 1}));
  const auto a = poly(f13, {1, 2, 3});
  CHECK((a - a).is_zero());
  CHECK((a + a) == a.scaled(2));
  CHECK(a.degree() == 2);
  CHECK(Polynomial(f13).degree() == -1);
  CHECK(Polynomial::monomial(f13, 4, 3) == poly(f13, {0, 0, 0, 4}));
  CHECK(Polynomial::cycle(f13, 3) == poly(f13, {12, 0, 0, 1}));
  CHECK(poly(f13, {1, 2, 0, 0}).degree() == 1);
  CHECK_THROWS_AS(a + poly(Field::make(11, 1), {1}), FieldMismatch);
}

TEST_CASE("from_roots") {
  const auto f5 = Field::make(5, 1);
  const std::vector<FieldElement> one{f5->one()};
  CHECK(Polynomial::from_roots(one) == poly(f5, {4, 1}));
  const std::vector<FieldElement> twice{f5->one(), f5->one()};
  CHECK_THROWS_AS(Polynomial::from_roots(twice), PreconditionError);
}

TEST_CASE("roots 1, 2 and the square roots of 2 give the q = 5 generator") {
  const auto f5 = Field::make(5, 1);
  const auto f25 = Field::make(5, 2);
  const SubfieldEmbedding emb(f5, f25);
  const std::uint32_t two = emb.embed(2);
  std::vector<FieldElement> roots{f25->element(emb.embed(1)), f25->element(two)};
  for (std::uint32_t s = 0; s < 25; ++s) {
    if (f25->mul(s, s) == two) roots.push_back(f25->element(s));
  }
  REQUIRE(roots.size() == 4);
  const auto g25 = Polynomial::from_roots(roots);
  std::vector<std::uint32_t> down;
  for (auto c : g25.coefficients()) down.push_back(emb.project(c));
  const auto g = poly(f5, down);
  CHECK(g == poly(f5, {1, 1, 0, 2, 1}));
  CHECK(g.to_string() == "x^4 + 2x^3 + x + 1");
  CHECK(g.eval(1) == 0);
  CHECK(g.eval(2) == 0);
  CHECK(divides_cycle(g, 8));
}

TEST_CASE("conjugate-closed roots give Frobenius-fixed coefficients") {
  const auto f121 = Field::make(11, 2);
  const auto beta = primitive_nth_root(f121, 12);
  std::vector<FieldElement> roots;
  for (int i = -4; i <= 4; ++i) roots.push_back(beta.pow(i));
  const auto g = Polynomial::from_roots(roots);
  CHECK(g.degree() == 9);
  CHECK(g.is_monic());
  for (auto c : g.coefficients()) CHECK(f121->pow(c, 11) == c);
}

TEST_CASE("reciprocal") {
  const auto f5 = Field::make(5, 1);
  CHECK(poly(f5, {4, 1}).reciprocal() == poly(f5, {1, 4}));
  CHECK(poly(f5, {3, 0, 4, 0, 2, 0, 1}).reciprocal() == poly(f5, {1, 0, 2, 0, 4, 0, 3}));
  CHECK(Polynomial::constant(f5, 1).reciprocal() == Polynomial::constant(f5, 1));
  CHECK(poly(f5, {2, 0, 4}).monic() == poly(f5, {3, 0, 1}));
}

TEST_CASE("evaluation and cycle divisibility") {
  const auto f5 = Field::make(5, 1);
  const auto g = poly(f5, {1, 1, 0, 2, 1});
  CHECK(g.eval(1) == 0);
  CHECK(g.eval(f5->element(3)).value() == (81 + 54 + 3 + 1) % 5);
  for (std::size_t n = 1; n <= 30; ++n) CHECK(divides_cycle(poly(f5, {4, 1}), n));
  CHECK_FALSE(divides_cycle(poly(f5, {1, 0, 0, 1}), 8));
  // x^2 + 1 = (x - 2)(x - 3) and both roots have order 4
  CHECK(divides_cycle(poly(f5, {1, 0, 1}), 8));
}

TEST_CASE("human-readable form") {
  const auto f5 = Field::make(5, 1);
  CHECK(poly(f5, {4, 1}).to_string() == "x + 4");
  CHECK(poly(f5, {0, 0, 3}).to_string() == "3x^2");
  CHECK(Polynomial(f5).to_string() == "0");
  const auto f4 = Field::make(2, 2);
  CHECK(poly(f4, {2, 3, 1}).to_string() == "x^2 + [3]x + [2]");
}
