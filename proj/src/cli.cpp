#include "lrc/cli.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lrc/code_file.hpp"
#include "lrc/constructions.hpp"
#include "lrc/error.hpp"
#include "lrc/locality.hpp"
#include "lrc/sweep.hpp"
#include "lrc/verifier.hpp"

namespace lrc {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::optional<std::uint32_t>> parse_symbols(const std::string& text, const Field& field) {
  std::vector<std::optional<std::uint32_t>> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    tok = first == std::string::npos ? "" : tok.substr(first, last - first + 1);
    if (tok == "_") {
      out.emplace_back(std::nullopt);
      continue;
    }
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw UsageError("bad symbol \"" + tok + "\"");
    }
    if (v >= field.order()) {
      throw UsageError("symbol " + tok + " is not an element of " + field.describe());
    }
    out.emplace_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::string join(const auto& values) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

LrcCode load_valid(const std::string& path) {
  LoadedCode loaded = load_code(read_file(path));
  if (!loaded.code || !loaded.violations.empty()) {
    std::string msg = path + " fails validation";
    for (const auto& v : loaded.violations) msg += "\n  " + v;
    throw PreconditionError(msg);
  }
  return std::move(*loaded.code);
}

struct Flags {
  std::string scheme;
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::optional<std::size_t> d;
  std::string out_path;
  std::string file;
  std::uint64_t budget = kDefaultBudget;
  std::string message;
  std::string word;
  std::uint32_t q_max = 0;
  std::size_t n_max = 0;
  bool verify = false;
  std::string format = "csv";
  unsigned threads = 0;
};

Scheme scheme_flag(const std::string& name) {
  const auto s = parse_scheme(name);
  if (!s) throw UsageError("unknown scheme \"" + name + "\"");
  return *s;
}

int cmd_construct(const Flags& f, std::ostream& out) {
  ConstructionParams params{scheme_flag(f.scheme), f.q, f.n, f.r, f.d};
  if (params.scheme == Scheme::double_length) params.n = 2 * (static_cast<std::size_t>(f.q) - 1);
  if (scheme_takes_distance(params.scheme) && !params.d) throw UsageError("--d is required for " + f.scheme);
  const LrcCode code = construct(params);
  out << "[" << code.base.n() << ", " << code.base.k() << ", " << code.d_claimed << "] code over "
      << code.base.field()->describe() << ", locality " << code.r << "\n";
  out << "g(x) = " << code.base.generator().to_string() << "\n";
  if (!f.out_path.empty()) {
    write_file(f.out_path, save_code(code));
    out << "wrote " << f.out_path << "\n";
  }
  return 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  LoadedCode loaded = load_code(read_file(f.file));
  VerificationReport report;
  if (loaded.code) {
    report = verify_optimal(*loaded.code, f.budget);
    report.violations.insert(report.violations.begin(), loaded.violations.begin(), loaded.violations.end());
    if (!report.violations.empty()) report.verdict = Verdict::refuted;
  } else {
    report = refuted_report(std::move(loaded.violations));
  }
  out << to_json(report).dump(2) << "\n";
  return exit_code(report.verdict);
}

int cmd_encode(const Flags& f, std::ostream& out) {
  const LrcCode code = load_valid(f.file);
  const auto symbols = parse_symbols(f.message, *code.base.field());
  Word message;
  for (const auto& s : symbols) {
    if (!s) throw UsageError("messages cannot contain erasures");
    message.push_back(*s);
  }
  if (message.size() != code.base.k()) {
    throw UsageError("message has " + std::to_string(message.size()) + " symbols, expected k = " +
                     std::to_string(code.base.k()));
  }
  out << join(systematic_encode(code.base, message)) << "\n";
  return 0;
}

int cmd_repair(const Flags& f, std::ostream& out) {
  const LrcCode code = load_valid(f.file);
  auto symbols = parse_symbols(f.word, *code.base.field());
  if (symbols.size() != code.base.n()) {
    throw UsageError("word has " + std::to_string(symbols.size()) + " symbols, expected n = " +
                     std::to_string(code.base.n()));
  }
  const auto erasures = std::count(symbols.begin(), symbols.end(), std::nullopt);
  if (erasures != 1) throw UsageError("expected exactly one \"_\", found " + std::to_string(erasures));
  const RepairPlan plan(code);
  const RepairResult res = repair_erasure(plan, ErasedWord(std::move(symbols)));
  out << res.value << "\n";
  out << "positions " << join(res.positions_read) << "\n";
  return 0;
}

int cmd_sweep(const Flags& f, std::ostream& out) {
  if (f.format != "csv" && f.format != "jsonl") throw UsageError("--format must be csv or jsonl");
  SweepOptions options{f.q_max, f.n_max, f.verify, f.budget, f.threads};
  const auto rows = run_sweep(scheme_flag(f.scheme), options);
  if (f.format == "csv") {
    write_csv(out, rows);
  } else {
    write_json_lines(out, rows);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal cyclic locally repairable codes"};
  app.require_subcommand(1);
  Flags f;
  std::string scheme_help = "one of";
  for (Scheme s : kAllSchemes) scheme_help += " " + std::string(scheme_name(s));

  auto* construct_cmd = app.add_subcommand("construct", "Build a code and optionally save it");
  construct_cmd->add_option("--scheme", f.scheme, scheme_help)->required();
  construct_cmd->add_option("--q", f.q, "Field order")->required();
  construct_cmd->add_option("--n", f.n, "Code length (implied for thm-3.4)");
  construct_cmd->add_option("--r", f.r, "Locality")->required();
  construct_cmd->add_option("--d", f.d, "Target distance (ex-3.2, ex-3.3)");
  construct_cmd->add_option("--out", f.out_path, "Write the code description here");

  auto* verify_cmd = app.add_subcommand("verify", "Check a saved code against its claim");
  verify_cmd->add_option("file", f.file)->required();
  verify_cmd->add_option("--budget", f.budget, "Codeword enumeration budget");

  auto* encode_cmd = app.add_subcommand("encode", "Systematically encode a message");
  encode_cmd->add_option("file", f.file)->required();
  encode_cmd->add_option("--message", f.message, "k comma-separated symbols")->required();

  auto* repair_cmd = app.add_subcommand("repair", "Recover one erased symbol from its repair group");
  repair_cmd->add_option("file", f.file)->required();
  repair_cmd->add_option("--word", f.word, "n comma-separated symbols, \"_\" marks the erasure")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "List admissible parameters");
  sweep_cmd->add_option("--scheme", f.scheme, scheme_help)->required();
  sweep_cmd->add_option("--qmax", f.q_max)->required();
  sweep_cmd->add_option("--nmax", f.n_max, "Largest length (default 2*(qmax-1))");
  sweep_cmd->add_flag("--verify", f.verify, "Run the verifier on every row");
  sweep_cmd->add_option("--budget", f.budget, "Codeword enumeration budget");
  sweep_cmd->add_option("--format", f.format, "csv or jsonl");
  sweep_cmd->add_option("--threads", f.threads, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : kExitUsage;
  }
  if (sweep_cmd->parsed() && f.n_max == 0 && f.q_max > 1) f.n_max = 2 * (static_cast<std::size_t>(f.q_max) - 1);

  try {
    if (construct_cmd->parsed()) return cmd_construct(f, out);
    if (verify_cmd->parsed()) return cmd_verify(f, out);
    if (encode_cmd->parsed()) return cmd_encode(f, out);
    if (repair_cmd->parsed()) return cmd_repair(f, out);
    if (sweep_cmd->parsed()) return cmd_sweep(f, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}

}  // namespace lrc
