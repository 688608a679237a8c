#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "lrc/error.hpp"
#include "lrc/locality.hpp"
#include "support/oracles.hpp"

using namespace lrc;

namespace {

std::uint32_t dot(const Field& f, const Word& a, const Word& b) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

// All dual codewords supported exactly on `support` with first entry 1.
std::vector<Word> dual_words_on(const CyclicCode& code, const std::vector<std::size_t>& support) {
  const Field& f = *code.field();
  const std::uint32_t q = f.order();
  std::vector<Word> out;
  std::vector<std::uint32_t> tail(support.size() - 1, 1);
  while (true) {
    Word v(code.n(), 0);
    v[support[0]] = 1;
    for (std::size_t t = 1; t < support.size(); ++t) v[support[t]] = tail[t - 1];
    bool ok = true;
    for (const auto& row : code.generator_basis()) ok = ok && dot(f, v, row) == 0;
    if (ok) out.push_back(v);
    std::size_t i = tail.size();
    while (i-- > 0) {
      if (++tail[i] < q) break;
      tail[i] = 1;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

void check_round_trip(const LrcCode& code, int samples, std::uint64_t seed) {
  const RepairPlan plan(code);
  const auto& b = code.base;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, b.q() - 1);
  for (int s = 0; s < samples; ++s) {
    Word msg(b.k());
    for (auto& x : msg) x = pick(rng);
    const Word cw = systematic_encode(b, msg);
    for (std::size_t i = 0; i < b.n(); ++i) {
      const RepairResult res = repair_erasure(plan, ErasedWord::erase(cw, i));
      REQUIRE(res.value == cw[i]);
      REQUIRE(res.positions_read == plan.group(i));
    }
  }
}

}  // namespace

TEST_CASE("repair groups") {
  const LrcCode c = construct_distance4(5, 8, 3);
  const RepairPlan plan(c);
  CHECK(plan.stride() == 2);
  CHECK(plan.group(0) == std::vector<std::size_t>{2, 4, 6});
  CHECK(plan.group(3) == std::vector<std::size_t>{5, 7, 1});
  CHECK_THROWS_AS(plan.group(8), PreconditionError);

  const LrcCode wide = construct_conjugate_symmetric(11, 12, 11, 2);
  const RepairPlan single(wide);
  CHECK(single.group(4) == std::vector<std::size_t>{5, 6, 7, 8, 9, 10, 11, 0, 1, 2, 3});
}

TEST_CASE("repair vectors on the q = 5 code") {
  const LrcCode c = construct_distance4(5, 8, 3);
  const RepairPlan plan(c);
  const auto expected0 = dual_words_on(c.base, {0, 2, 4, 6});
  REQUIRE(expected0.size() == 1);
  const RepairVector& v0 = plan.vector(0);
  CHECK(v0.support == std::vector<std::size_t>{0, 2, 4, 6});
  for (std::size_t j = 0; j < 8; ++j) CHECK(v0.at(j) == expected0[0][j]);
  // For the canonical root (alpha = 3) the vector is the reversal of
  // 2 + 4x^2 + 3x^4 + x^6, normalized.
  CHECK(v0.coefficients == std::vector<std::uint32_t>{1, 3, 4, 2});

  const RepairVector& v1 = plan.vector(1);
  CHECK(v1.support == std::vector<std::size_t>{1, 3, 5, 7});
  CHECK(v1.coefficients == v0.coefficients);
  CHECK(&plan.vector(6) == &v0);
}

TEST_CASE("plans need locality dividing n and a nonzero code") {
  LrcCode c = construct_distance4(5, 8, 3);
  const auto f5 = c.base.field();
  LrcCode zero{CyclicCode::make(f5, 8, Polynomial::cycle(f5, 8)), 3, 4, c.params, c.provenance};
  CHECK_THROWS_AS(RepairPlan{zero}, PreconditionError);
  c.r = 2;
  CHECK_THROWS_AS(RepairPlan{c}, PreconditionError);
}

TEST_CASE("repairing the generator codeword") {
  const LrcCode c = construct_distance4(5, 8, 3);
  const RepairPlan plan(c);
  const Word cw{1, 2, 0, 1, 1, 0, 0, 0};
  REQUIRE(contains(c.base, cw));
  const RepairResult res = repair_erasure(plan, ErasedWord::erase(cw, 0));
  CHECK(res.value == 1);
  CHECK(res.positions_read == std::vector<std::size_t>{2, 4, 6});

  const Word zero(8, 0);
  for (std::size_t i = 0; i < 8; ++i) CHECK(repair_erasure(plan, ErasedWord::erase(zero, i)).value == 0);
}

TEST_CASE("erasure bookkeeping") {
  using S = std::vector<std::optional<std::uint32_t>>;
  CHECK_THROWS_AS(ErasedWord(S{1, std::nullopt, std::nullopt}), PreconditionError);
  CHECK_THROWS_AS(ErasedWord(S{1, 2, 3}), PreconditionError);
  CHECK(ErasedWord(S{1, std::nullopt, 3}).erased_at() == 1);

  const LrcCode c = construct_distance4(5, 8, 3);
  const RepairPlan plan(c);
  CHECK_THROWS_AS(repair_erasure(plan, ErasedWord(S{std::nullopt, 1, 2})), PreconditionError);
}

TEST_CASE("repair round trip for every scheme") {
  check_round_trip(construct_distance3(4, 9, 2), 50, 1);
  check_round_trip(construct_distance4(5, 8, 3), 50, 2);
  check_round_trip(construct_double_length(5, 3), 50, 3);
  check_round_trip(construct_multiplicative(13, 12, 2, 5), 50, 4);
  check_round_trip(construct_multiplicative(11, 10, 9, 8), 50, 5);
  check_round_trip(construct_conjugate_symmetric(11, 12, 3, 10), 50, 6);
  check_round_trip(construct_conjugate_symmetric(13, 14, 13, 12), 50, 7);
  check_round_trip(construct_distance3(8, 21, 6), 20, 8);
}

TEST_CASE("repair vectors are dual codewords with full support") {
  for (Scheme s : kAllSchemes) {
    for (const auto& rec : enumerate_valid_params(s, 13, 24)) {
      if (!rec.admissible()) continue;
      const LrcCode c = construct(rec.params);
      const RepairPlan plan(c);
      const auto rows = c.base.generator_basis();
      CAPTURE(scheme_name(s));
      CAPTURE(rec.params.q);
      CAPTURE(rec.params.n);
      CAPTURE(rec.params.r);
      for (std::size_t i = 0; i < plan.stride(); ++i) {
        const RepairVector& v = plan.vector(i);
        REQUIRE(v.support.size() == c.r + 1);
        Word full(c.base.n(), 0);
        for (std::size_t t = 0; t < v.support.size(); ++t) {
          REQUIRE(v.coefficients[t] != 0);
          full[v.support[t]] = v.coefficients[t];
        }
        CHECK(v.coefficients.front() == 1);
        for (const auto& row : rows) REQUIRE(dot(*c.base.field(), full, row) == 0);
      }
    }
  }
}

TEST_CASE("concurrent queries see one vector per class") {
  const LrcCode c = construct_multiplicative(13, 12, 2, 5);
  const RepairPlan plan(c);
  std::vector<const RepairVector*> seen(8 * 12);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < 8; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = 0; i < 12; ++i) seen[t * 12 + i] = &plan.vector((i + t) % 12);
      });
    }
  }
  for (std::size_t t = 0; t < 8; ++t) {
    for (std::size_t i = 0; i < 12; ++i) CHECK(seen[t * 12 + i] == &plan.vector((i + t) % 12));
  }
}

TEST_CASE("dual distance") {
  const LrcCode c = construct_distance4(5, 8, 3);
  const auto d = dual_distance_exact(c.base);
  CHECK(d.is_exact());
  CHECK(d.lower == oracle::min_distance_by_columns(dual_code(c.base)));
  CHECK(d.lower == 4);
  CHECK(d.enumerated == 624);

  const LrcCode i = construct_distance3(4, 9, 2);
  const auto di = dual_distance_exact(i.base);
  CHECK(di.is_exact());
  CHECK(di.enumerated == 255);
  CHECK(di.lower <= 3);
  CHECK(di.lower == oracle::min_distance_by_columns(dual_code(i.base)));

  const auto f7 = Field::make(7, 1);
  const auto parity = CyclicCode::make(f7, 6, Polynomial(f7, {6, 1}));
  CHECK(dual_distance_exact(parity).lower == 6);

  const auto over = dual_distance_exact(c.base, 10);
  CHECK(over.status == DistanceStatus::bound_only);
  CHECK(over.lower <= 4);
  CHECK(over.upper >= 4);
}

TEST_CASE("locality by dual enumeration") {
  const LrcCode c = construct_distance4(5, 8, 3);
  const LocalityCheck ok = verify_locality(c.base, 3);
  CHECK(ok.ok);
  REQUIRE(ok.witnesses.size() == 8);
  for (const auto& w : ok.witnesses) {
    CHECK(w.dual_word[w.coordinate] != 0);
    CHECK(hamming_weight(w.dual_word) <= 4);
    CHECK(contains(dual_code(c.base), w.dual_word));
  }
  const LocalityCheck low = verify_locality(c.base, 1);
  CHECK_FALSE(low.ok);
  CHECK(low.failing_coordinate.has_value());

  const auto f5 = c.base.field();
  const auto full = CyclicCode::make(f5, 8, Polynomial::constant(f5, 1));
  CHECK_FALSE(verify_locality(full, 7).ok);

  CHECK(verify_locality(construct_distance3(4, 9, 2).base, 2).ok);
  CHECK_THROWS_AS(verify_locality(c.base, 3, 100), BudgetExceeded);
}
