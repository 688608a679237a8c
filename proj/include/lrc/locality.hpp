#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "lrc/constructions.hpp"
#include "lrc/cyclic_code.hpp"

namespace lrc {

/// A dual codeword restricted to its support, positions ascending.
struct RepairVector {
  std::vector<std::size_t> support;
  std::vector<std::uint32_t> coefficients;

  std::uint32_t at(std::size_t position) const;
};

/// Repair groups and repair vectors for an LRC whose local groups are the
/// residue classes modulo n/(r+1).
///
/// Vectors are solved lazily, once per residue class, and normalized so the
/// entry at the smallest position of the class is 1. A built plan is safe to
/// query from several threads.
class RepairPlan {
 public:
  explicit RepairPlan(const LrcCode& code);

  const CyclicCode& code() const { return code_; }
  std::size_t r() const { return r_; }
  std::size_t stride() const { return stride_; }

  /// {i + t*stride mod n : t = 1..r}, in that order.
  std::vector<std::size_t> group(std::size_t i) const;

  /// Dual codeword supported exactly on i's residue class, all entries nonzero.
  const RepairVector& vector(std::size_t i) const;

 private:
  RepairVector solve(std::size_t residue) const;

  CyclicCode code_;
  std::size_t r_;
  std::size_t stride_;
  std::vector<Word> basis_;
  mutable std::vector<std::optional<RepairVector>> cache_;
  mutable std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
};

/// A word with exactly one erased coordinate.
class ErasedWord {
 public:
  ErasedWord(std::vector<std::optional<std::uint32_t>> symbols);

  static ErasedWord erase(std::span<const std::uint32_t> word, std::size_t position);

  std::size_t erased_at() const { return erased_at_; }
  std::size_t size() const { return symbols_.size(); }
  const std::optional<std::uint32_t>& operator[](std::size_t i) const { return symbols_[i]; }

 private:
  std::vector<std::optional<std::uint32_t>> symbols_;
  std::size_t erased_at_ = 0;
};

struct RepairResult {
  std::uint32_t value;
  std::vector<std::size_t> positions_read;
};

/// c_i = -a_i^{-1} * sum_{j != i} a_j c_j over the repair vector of i.
RepairResult repair_erasure(const RepairPlan& plan, const ErasedWord& word);

/// Exact minimum weight of the dual code; bracketed when q^{n-k} > budget.
DistanceResult dual_distance_exact(const CyclicCode& code, std::uint64_t budget = kDefaultBudget);

struct LocalityWitness {
  std::size_t coordinate;
  Word dual_word;
};

struct LocalityCheck {
  bool ok = false;
  std::optional<std::size_t> failing_coordinate;
  std::vector<LocalityWitness> witnesses;  // one per coordinate when ok
};

/// True iff every coordinate lies in the support of a dual codeword of
/// weight <= r_test + 1. Enumerates the dual; throws BudgetExceeded when
/// q^{n-k} > budget.
LocalityCheck verify_locality(const CyclicCode& code, std::size_t r_test,
                              std::uint64_t budget = kDefaultBudget);

}  // namespace lrc
