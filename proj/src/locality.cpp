#include "lrc/locality.hpp"

#include <algorithm>

#include "lrc/error.hpp"

namespace lrc {
namespace {

// Basis of {v : M v = 0} over the field, via reduced row echelon form.
std::vector<Word> nullspace(const Field& f, std::vector<Word> m, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const std::uint32_t inv = f.inv(m[row][col]);
    for (auto& x : m[row]) x = f.mul(x, inv);
    for (std::size_t other = 0; other < m.size(); ++other) {
      if (other == row || m[other][col] == 0) continue;
      const std::uint32_t factor = m[other][col];
      for (std::size_t c = 0; c < cols; ++c) m[other][c] = f.sub(m[other][c], f.mul(factor, m[row][c]));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<Word> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    Word v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = f.neg(m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

constexpr std::uint64_t kCombinationLimit = std::uint64_t{1} << 20;

}  // namespace

std::uint32_t RepairVector::at(std::size_t position) const {
  const auto it = std::lower_bound(support.begin(), support.end(), position);
  if (it == support.end() || *it != position) return 0;
  return coefficients[static_cast<std::size_t>(it - support.begin())];
}

RepairPlan::RepairPlan(const LrcCode& code)
    : code_(code.base), r_(code.r), stride_(0) {
  const std::size_t n = code_.n();
  if (r_ < 1 || n % (r_ + 1) != 0) {
    throw PreconditionError("r + 1 = " + std::to_string(r_ + 1) + " does not divide n = " +
                            std::to_string(n));
  }
  if (code_.k() == 0) throw PreconditionError("repair plans need a code of dimension at least 1");
  stride_ = n / (r_ + 1);
  basis_ = code_.generator_basis();
  cache_.resize(stride_);
}

std::vector<std::size_t> RepairPlan::group(std::size_t i) const {
  const std::size_t n = code_.n();
  if (i >= n) throw PreconditionError("coordinate " + std::to_string(i) + " out of range");
  std::vector<std::size_t> out;
  for (std::size_t t = 1; t <= r_; ++t) out.push_back((i + t * stride_) % n);
  return out;
}

RepairVector RepairPlan::solve(std::size_t residue) const {
  const Field& f = *code_.field();
  std::vector<std::size_t> support;
  for (std::size_t t = 0; t <= r_; ++t) support.push_back(residue + t * stride_);

  std::vector<Word> system;
  system.reserve(basis_.size());
  for (const auto& row : basis_) {
    Word eq(support.size());
    for (std::size_t t = 0; t < support.size(); ++t) eq[t] = row[support[t]];
    system.push_back(std::move(eq));
  }
  const auto basis = nullspace(f, std::move(system), support.size());
  if (basis.empty()) {
    throw AssertionFailure("no dual codeword is supported on the residue class of " +
                           std::to_string(residue) + " modulo " + std::to_string(stride_));
  }

  const auto normalized = [&](Word v) {
    const std::uint32_t scale = f.inv(v.front());
    for (auto& x : v) x = f.mul(x, scale);
    return RepairVector{support, std::move(v)};
  };
  const auto nonzero_superset = [](const Word& w, const Word& v) {
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (v[t] != 0 && w[t] == 0) return false;
    }
    return true;
  };

  // Greedy: fill zero entries one at a time without clearing earlier ones.
  const std::uint32_t q = f.order();
  Word v(support.size(), 0);
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] != 0) continue;
    bool filled = false;
    for (std::size_t b = 0; b < basis.size() && !filled; ++b) {
      if (basis[b][t] == 0) continue;
      for (std::uint32_t c = 1; c < q && !filled; ++c) {
        Word w = v;
        for (std::size_t u = 0; u < w.size(); ++u) w[u] = f.add(w[u], f.mul(c, basis[b][u]));
        if (w[t] != 0 && nonzero_superset(w, v)) {
          v = std::move(w);
          filled = true;
        }
      }
    }
    if (!filled) break;
  }
  if (std::all_of(v.begin(), v.end(), [](auto x) { return x != 0; })) return normalized(std::move(v));

  // Fallback: first combination (lexicographic in the coefficients) with full support.
  std::vector<std::uint32_t> coeffs(basis.size(), 0);
  for (std::uint64_t tried = 0; tried < kCombinationLimit; ++tried) {
    std::size_t i = coeffs.size();
    while (i-- > 0) {
      coeffs[i] = coeffs[i] + 1 == q ? 0 : coeffs[i] + 1;
      if (coeffs[i] != 0) break;
    }
    if (i == static_cast<std::size_t>(-1)) break;
    v.assign(support.size(), 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coeffs[b] == 0) continue;
      for (std::size_t t = 0; t < v.size(); ++t) v[t] = f.add(v[t], f.mul(coeffs[b], basis[b][t]));
    }
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x != 0; })) return normalized(std::move(v));
  }
  throw AssertionFailure("no dual codeword on the residue class of " + std::to_string(residue) +
                         " has every entry nonzero");
}

const RepairVector& RepairPlan::vector(std::size_t i) const {
  if (i >= code_.n()) throw PreconditionError("coordinate " + std::to_string(i) + " out of range");
  const std::size_t residue = i % stride_;
  std::lock_guard lock(*mutex_);
  auto& slot = cache_[residue];
  if (!slot) slot = solve(residue);
  return *slot;
}

ErasedWord::ErasedWord(std::vector<std::optional<std::uint32_t>> symbols) : symbols_(std::move(symbols)) {
  std::size_t erasures = 0;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!symbols_[i]) {
      ++erasures;
      erased_at_ = i;
    }
  }
  if (erasures != 1) {
    throw PreconditionError("expected exactly one erasure, found " + std::to_string(erasures));
  }
}

ErasedWord ErasedWord::erase(std::span<const std::uint32_t> word, std::size_t position) {
  if (position >= word.size()) throw PreconditionError("erasure position out of range");
  std::vector<std::optional<std::uint32_t>> symbols(word.begin(), word.end());
  symbols[position].reset();
  return ErasedWord(std::move(symbols));
}

RepairResult repair_erasure(const RepairPlan& plan, const ErasedWord& word) {
  const CyclicCode& code = plan.code();
  if (word.size() != code.n()) {
    throw PreconditionError("word has " + std::to_string(word.size()) + " symbols, expected " +
                            std::to_string(code.n()));
  }
  const Field& f = *code.field();
  const std::size_t i = word.erased_at();
  const RepairVector& a = plan.vector(i);
  const auto positions = plan.group(i);
  std::uint32_t acc = 0;
  for (std::size_t j : positions) {
    const std::uint32_t c = *word[j];
    if (c >= f.order()) throw PreconditionError("symbol out of range at position " + std::to_string(j));
    acc = f.add(acc, f.mul(a.at(j), c));
  }
  return RepairResult{f.neg(f.div(acc, a.at(i))), positions};
}

DistanceResult dual_distance_exact(const CyclicCode& code, std::uint64_t budget) {
  return min_distance_exhaustive(dual_code(code), budget);
}

LocalityCheck verify_locality(const CyclicCode& code, std::size_t r_test, std::uint64_t budget) {
  const CyclicCode dual = dual_code(code);
  const std::uint64_t space = message_space_size(dual);
  if (space > budget) {
    throw BudgetExceeded("dual code has " + std::to_string(space) +
                         " codewords, more than the budget " + std::to_string(budget));
  }
  const std::size_t n = code.n();
  std::vector<std::optional<Word>> cover(n);
  std::size_t covered = 0;
  if (dual.k() > 0) {
    CodewordEnumerator walk(dual);
    while (covered < n && walk.next()) {
      if (walk.weight() > r_test + 1) continue;
      const Word& w = walk.word();
      for (std::size_t i = 0; i < n; ++i) {
        if (w[i] != 0 && !cover[i]) {
          cover[i] = w;
          ++covered;
        }
      }
    }
  }
  LocalityCheck out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!cover[i]) {
      out.failing_coordinate = i;
      return out;
    }
  }
  out.ok = true;
  for (std::size_t i = 0; i < n; ++i) out.witnesses.push_back({i, std::move(*cover[i])});
  return out;
}

}  // namespace lrc
