#include "lrc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <json.hpp>

#include "lrc/error.hpp"
#include "lrc/verifier.hpp"

namespace lrc {
namespace {

std::string verdict_for(const ParamRecord& rec, const SweepOptions& options) {
  if (!rec.admissible()) return "excluded:" + rec.exclusion;
  if (!options.verify) return "unverified";
  try {
    const LrcCode code = construct(rec.params);
    if (message_space_size(code.base) > options.budget) return to_string(Verdict::indeterminate);
    return to_string(verify_optimal(code, options.budget).verdict);
  } catch (const BudgetExceeded&) {
    return to_string(Verdict::indeterminate);
  } catch (const Error&) {
    return to_string(Verdict::refuted);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<SweepRow> run_sweep(Scheme scheme, const SweepOptions& options) {
  std::vector<SweepRow> rows;
  for (auto& rec : enumerate_valid_params(scheme, options.q_max, options.n_max)) {
    rows.push_back({std::move(rec), {}});
  }
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(rows.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) rows[i].verdict = verdict_for(rows[i].record, options);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

void write_csv_header(std::ostream& out) { out << "scheme,q,n,k,r,d,verdict\n"; }

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  write_csv_header(out);
  for (const auto& row : rows) {
    const auto& p = row.record.params;
    out << scheme_name(p.scheme) << ',' << p.q << ',' << p.n << ',';
    if (row.record.k) out << *row.record.k;
    out << ',' << p.r << ',' << row.record.d_claimed << ',' << csv_field(row.verdict) << '\n';
  }
}

void write_json_lines(std::ostream& out, const std::vector<SweepRow>& rows) {
  for (const auto& row : rows) {
    const auto& p = row.record.params;
    nlohmann::ordered_json j;
    j["scheme"] = std::string(scheme_name(p.scheme));
    j["q"] = p.q;
    j["n"] = p.n;
    if (row.record.k) {
      j["k"] = *row.record.k;
    } else {
      j["k"] = nullptr;
    }
    j["r"] = p.r;
    j["d"] = row.record.d_claimed;
    j["verdict"] = row.verdict;
    out << j.dump() << '\n';
  }
}

}  // namespace lrc
