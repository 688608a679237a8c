#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lrc/constructions.hpp"
#include "lrc/cyclic_code.hpp"

namespace lrc {

struct SweepOptions {
  std::uint32_t q_max = 0;
  std::size_t n_max = 0;
  bool verify = false;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

struct SweepRow {
  ParamRecord record;
  /// "unverified", a verdict name, or "excluded:<reason>".
  std::string verdict;
};

/// Rows in ascending (q, n, r, d) order regardless of thread count. With
/// verification on, rows whose message space exceeds the budget are
/// reported indeterminate without running the oracles.
std::vector<SweepRow> run_sweep(Scheme scheme, const SweepOptions& options);

void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_json_lines(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace lrc
