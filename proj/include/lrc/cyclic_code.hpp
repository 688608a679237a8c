#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lrc/finite_field.hpp"
#include "lrc/polynomial.hpp"

namespace lrc {

/// Symbols of a word over the code's field, as canonical field values.
using Word = std::vector<std::uint32_t>;

/// The ideal <g(x)> of F_q[x]/(x^n - 1).
///
/// Invariants checked by make(): gcd(n, q) = 1, g monic and dividing x^n - 1,
/// k = n - deg g, h = (x^n - 1)/g, dual generator = monic reciprocal of h.
class CyclicCode {
 public:
  static CyclicCode make(FieldPtr field, std::size_t n, Polynomial generator);

  const FieldPtr& field() const { return field_; }
  std::uint32_t q() const { return field_->order(); }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const Polynomial& generator() const { return g_; }
  const Polynomial& parity() const { return h_; }
  const Polynomial& dual_generator() const { return dual_g_; }

  /// Rows x^i g(x) for i < k, each padded to length n.
  std::vector<Word> generator_basis() const;

 private:
  CyclicCode(FieldPtr field, std::size_t n, Polynomial g, Polynomial h, Polynomial dual_g);

  FieldPtr field_;
  std::size_t n_;
  std::size_t k_;
  Polynomial g_;
  Polynomial h_;
  Polynomial dual_g_;
};

/// The message occupies the last k coordinates; the low n-k coordinates hold
/// -(x^{n-k} m(x) mod g).
Word systematic_encode(const CyclicCode& code, std::span<const std::uint32_t> message);

/// Message stored in a systematic codeword.
Word systematic_message(const CyclicCode& code, std::span<const std::uint32_t> codeword);

bool contains(const CyclicCode& code, std::span<const std::uint32_t> word);

Word cyclic_shift(std::span<const std::uint32_t> word, std::size_t by = 1);

std::size_t hamming_weight(std::span<const std::uint32_t> word);

/// The cyclic code generated by the monic reciprocal of h.
CyclicCode dual_code(const CyclicCode& code);

/// Exponents e in [0, n) with g(beta^e) = 0 for the canonical primitive n-th
/// root beta of the splitting field.
std::set<std::size_t> root_exponents(const CyclicCode& code);

/// Largest delta such that delta-1 cyclically consecutive exponents lie in the
/// root set. The supplied set must equal root_exponents(code).
std::size_t bch_lower_bound(const CyclicCode& code, const std::set<std::size_t>& exponents);
std::size_t bch_lower_bound(const CyclicCode& code);

/// Longest-run computation on a bare exponent set (no consistency check).
std::size_t bch_bound_of(const std::set<std::size_t>& exponents, std::size_t n);

enum class DistanceStatus { exact, bound_only, indeterminate };

std::string to_string(DistanceStatus status);

/// Minimum-distance measurement. exact: lower == upper == d. bound_only:
/// lower <= d <= upper. The zero code reports exact n + 1.
struct DistanceResult {
  DistanceStatus status = DistanceStatus::indeterminate;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::uint64_t enumerated = 0;

  bool is_exact() const { return status == DistanceStatus::exact; }
};

/// Walks the codewords sum m_i x^i g(x) with messages in lexicographic order
/// (last digit fastest), starting after the zero message. Each step updates
/// the word in place, touching only the rows whose digit changed.
class CodewordEnumerator {
 public:
  explicit CodewordEnumerator(const CyclicCode& code);

  /// Advances to the next message; returns false once every message has
  /// been visited (the state wraps back to zero).
  bool next();

  const Word& word() const { return word_; }
  std::size_t weight() const { return weight_; }
  const std::vector<std::uint32_t>& message() const { return digits_; }

 private:
  void apply(std::size_t row, std::uint32_t delta);

  FieldPtr field_;
  std::vector<std::uint32_t> generator_;
  // For small fields: q x q addition table and delta * g for every delta.
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint32_t> scaled_;
  std::vector<std::uint32_t> digits_;
  Word word_;
  std::size_t weight_ = 0;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// q^k, saturating at UINT64_MAX.
std::uint64_t message_space_size(const CyclicCode& code);

/// Exact when q^k <= budget: enumerates every nonzero message. Otherwise
/// brackets d between the BCH bound and the minimum weight over the first
/// `budget` messages in lexicographic order.
DistanceResult min_distance_exhaustive(const CyclicCode& code, std::uint64_t budget = kDefaultBudget);

/// Whether every t columns of a parity-check matrix are linearly
/// independent, i.e. whether d >= t + 1. Empty when C(n, t) exceeds the
/// budget.
std::optional<bool> parity_columns_independent(const CyclicCode& code, std::size_t t,
                                               std::uint64_t budget = kDefaultBudget);

}  // namespace lrc
