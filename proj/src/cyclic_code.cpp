#include "lrc/cyclic_code.hpp"

#include <algorithm>
#include <numeric>

#include "lrc/error.hpp"

namespace lrc {

CyclicCode::CyclicCode(FieldPtr field, std::size_t n, Polynomial g, Polynomial h, Polynomial dual_g)
    : field_(std::move(field)),
      n_(n),
      k_(n - static_cast<std::size_t>(g.degree())),
      g_(std::move(g)),
      h_(std::move(h)),
      dual_g_(std::move(dual_g)) {}

CyclicCode CyclicCode::make(FieldPtr field, std::size_t n, Polynomial generator) {
  if (n == 0) throw PreconditionError("code length must be positive");
  if (std::gcd<std::uint64_t>(n, field->order()) != 1) {
    throw PreconditionError("gcd(n, q) = gcd(" + std::to_string(n) + ", " +
                            std::to_string(field->order()) + ") != 1");
  }
  if (!(*generator.field() == *field)) throw FieldMismatch("generator over the wrong field");
  if (generator.is_zero()) throw PreconditionError("generator polynomial is zero");
  if (!generator.is_monic()) throw PreconditionError("generator polynomial is not monic");
  if (static_cast<std::size_t>(generator.degree()) > n) {
    throw PreconditionError("generator degree exceeds the code length");
  }
  auto [h, rem] = divmod(Polynomial::cycle(field, n), generator);
  if (!rem.is_zero()) {
    throw PreconditionError("g(x) = " + generator.to_string() + " does not divide x^" +
                            std::to_string(n) + " - 1");
  }
  Polynomial dual_g = h.reciprocal().monic();
  return CyclicCode(std::move(field), n, std::move(generator), std::move(h), std::move(dual_g));
}

std::vector<Word> CyclicCode::generator_basis() const {
  std::vector<Word> rows(k_, Word(n_, 0));
  const auto gc = g_.coefficients();
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < gc.size(); ++j) rows[i][i + j] = gc[j];
  }
  return rows;
}

Word systematic_encode(const CyclicCode& code, std::span<const std::uint32_t> message) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  if (message.size() != k) {
    throw PreconditionError("message has " + std::to_string(message.size()) +
                            " symbols, expected " + std::to_string(k));
  }
  const FieldPtr& field = code.field();
  std::vector<std::uint32_t> shifted(n, 0);
  std::copy(message.begin(), message.end(), shifted.begin() + static_cast<std::ptrdiff_t>(n - k));
  const Polynomial remainder = divmod(Polynomial(field, shifted), code.generator()).remainder;
  Word out(shifted.begin(), shifted.end());
  for (std::size_t i = 0; i < n - k; ++i) out[i] = field->neg(remainder.coeff(i));
  return out;
}

Word systematic_message(const CyclicCode& code, std::span<const std::uint32_t> codeword) {
  if (codeword.size() != code.n()) throw PreconditionError("codeword length mismatch");
  return Word(codeword.end() - static_cast<std::ptrdiff_t>(code.k()), codeword.end());
}

bool contains(const CyclicCode& code, std::span<const std::uint32_t> word) {
  if (word.size() != code.n()) {
    throw PreconditionError("word has " + std::to_string(word.size()) + " symbols, expected " +
                            std::to_string(code.n()));
  }
  const Polynomial p(code.field(), Word(word.begin(), word.end()));
  return divmod(p, code.generator()).remainder.is_zero();
}

Word cyclic_shift(std::span<const std::uint32_t> word, std::size_t by) {
  const std::size_t n = word.size();
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[(i + by) % n] = word[i];
  return out;
}

std::size_t hamming_weight(std::span<const std::uint32_t> word) {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](auto c) { return c != 0; }));
}

CyclicCode dual_code(const CyclicCode& code) {
  return CyclicCode::make(code.field(), code.n(), code.dual_generator());
}

std::set<std::size_t> root_exponents(const CyclicCode& code) {
  const SplittingField split = make_splitting_field(code.field(), code.n());
  const FieldPtr& ext = split.extension();
  std::vector<std::uint32_t> lifted;
  for (auto c : code.generator().coefficients()) lifted.push_back(split.embedding.embed(c));
  const Polynomial g(ext, std::move(lifted));
  std::set<std::size_t> out;
  std::uint32_t point = 1;
  for (std::size_t e = 0; e < code.n(); ++e) {
    if (g.eval(point) == 0) out.insert(e);
    point = ext->mul(point, split.beta.value());
  }
  return out;
}

std::size_t bch_bound_of(const std::set<std::size_t>& exponents, std::size_t n) {
  if (exponents.size() >= n) return n + 1;
  std::size_t best = 0;
  // Runs start right after a gap, so wrap-around runs are counted once.
  for (std::size_t start : exponents) {
    if (exponents.contains((start + n - 1) % n)) continue;
    std::size_t len = 0;
    while (exponents.contains((start + len) % n)) ++len;
    best = std::max(best, len);
  }
  return best + 1;
}

std::size_t bch_lower_bound(const CyclicCode& code, const std::set<std::size_t>& exponents) {
  if (exponents != root_exponents(code)) {
    throw PreconditionError("supplied root exponents do not match the generator polynomial");
  }
  return bch_bound_of(exponents, code.n());
}

std::size_t bch_lower_bound(const CyclicCode& code) {
  return bch_bound_of(root_exponents(code), code.n());
}

std::string to_string(DistanceStatus status) {
  switch (status) {
    case DistanceStatus::exact: return "exact";
    case DistanceStatus::bound_only: return "bound_only";
    case DistanceStatus::indeterminate: return "indeterminate";
  }
  return "unknown";
}

std::uint64_t message_space_size(const CyclicCode& code) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.k(); ++i) {
    if (total > UINT64_MAX / code.q()) return UINT64_MAX;
    total *= code.q();
  }
  return total;
}

CodewordEnumerator::CodewordEnumerator(const CyclicCode& code)
    : field_(code.field()),
      generator_(code.generator().coefficients().begin(), code.generator().coefficients().end()),
      digits_(code.k(), 0),
      word_(code.n(), 0) {
  const std::uint32_t q = field_->order();
  if (q <= 256) {
    add_table_.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) add_table_[a * q + b] = static_cast<std::uint16_t>(field_->add(a, b));
    }
    scaled_.resize(std::size_t{q} * generator_.size());
    for (std::uint32_t d = 0; d < q; ++d) {
      for (std::size_t j = 0; j < generator_.size(); ++j) scaled_[d * generator_.size() + j] = field_->mul(d, generator_[j]);
    }
  }
}

void CodewordEnumerator::apply(std::size_t row, std::uint32_t delta) {
  if (!add_table_.empty()) {
    const std::uint32_t q = field_->order();
    const std::size_t len = generator_.size();
    const std::uint32_t* g = scaled_.data() + delta * len;
    std::uint32_t* cells = word_.data() + row;
    std::size_t w = weight_;
    for (std::size_t j = 0; j < len; ++j) {
      const std::uint32_t before = cells[j];
      const std::uint32_t after = add_table_[before * q + g[j]];
      cells[j] = after;
      w = w + (after != 0) - (before != 0);
    }
    weight_ = w;
    return;
  }
  for (std::size_t j = 0; j < generator_.size(); ++j) {
    std::uint32_t& cell = word_[row + j];
    const bool was = cell != 0;
    cell = field_->add(cell, field_->mul(delta, generator_[j]));
    const bool now = cell != 0;
    weight_ = weight_ + now - was;
  }
}

bool CodewordEnumerator::next() {
  const std::uint32_t q = field_->order();
  // Changing digit i from a to b adds (b - a) x^i g(x).
  for (std::size_t i = digits_.size(); i-- > 0;) {
    const std::uint32_t old = digits_[i];
    const std::uint32_t next = old + 1 == q ? 0 : old + 1;
    digits_[i] = next;
    apply(i, field_->sub(next, old));
    if (next != 0) return true;
  }
  return false;
}

DistanceResult min_distance_exhaustive(const CyclicCode& code, std::uint64_t budget) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  if (k == 0) return {DistanceStatus::exact, n + 1, n + 1, 0};

  const std::uint64_t space = message_space_size(code);
  const bool exact = space <= budget;
  const std::uint64_t limit = exact ? space - 1 : budget;

  CodewordEnumerator walk(code);
  std::size_t best = n + 1;
  std::uint64_t visited = 0;
  while (visited < limit && walk.next()) {
    ++visited;
    best = std::min(best, walk.weight());
  }

  if (exact) return {DistanceStatus::exact, best, best, visited};

  const std::size_t lower = bch_lower_bound(code);
  const std::size_t upper = std::min(best, n - k + 1);
  if (visited == 0 && lower < upper) return {DistanceStatus::indeterminate, lower, upper, 0};
  return {DistanceStatus::bound_only, lower, upper, visited};
}

namespace {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t t) {
  if (t > n) return 0;
  t = std::min(t, n - t);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= t; ++i) {
    const std::uint64_t num = n - t + i;
    if (out > UINT64_MAX / num) return UINT64_MAX;
    out = out * num / i;
  }
  return out;
}

std::size_t rank_of(const Field& f, std::vector<Word> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    const std::uint32_t inv = f.inv(m[rank][col]);
    for (std::size_t other = rank + 1; other < m.size(); ++other) {
      if (m[other][col] == 0) continue;
      const std::uint32_t factor = f.mul(m[other][col], inv);
      for (std::size_t c = col; c < cols; ++c) m[other][c] = f.sub(m[other][c], f.mul(factor, m[rank][c]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::optional<bool> parity_columns_independent(const CyclicCode& code, std::size_t t, std::uint64_t budget) {
  const std::size_t n = code.n();
  if (t == 0) return true;
  if (t > n) return false;
  if (binomial_saturating(n, t) > budget) return std::nullopt;
  if (t > n - code.k()) return false;
  const Field& f = *code.field();
  const auto h = dual_code(code).generator_basis();

  std::vector<std::size_t> pick(t);
  for (std::size_t i = 0; i < t; ++i) pick[i] = i;
  std::vector<Word> sub(h.size(), Word(t));
  while (true) {
    for (std::size_t row = 0; row < h.size(); ++row) {
      for (std::size_t c = 0; c < t; ++c) sub[row][c] = h[row][pick[c]];
    }
    if (rank_of(f, sub) < t) return false;
    std::size_t i = t;
    while (i-- > 0 && pick[i] == n - t + i) {}
    if (i == static_cast<std::size_t>(-1)) break;
    ++pick[i];
    for (std::size_t j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

}  // namespace lrc
