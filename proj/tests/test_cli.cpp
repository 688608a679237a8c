#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include <json.hpp>

#include "lrc/cli.hpp"
#include "lrc/code_file.hpp"
#include "lrc/constructions.hpp"

using namespace lrc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "lrc_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string q5_file() {
  const auto path = scratch("q5.json").string();
  REQUIRE(cli({"construct", "--scheme", "thm-1.1-ii", "--q", "5", "--n", "8", "--r", "3", "--out", path}).code == 0);
  return path;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("construct writes the code description") {
  const auto path = scratch("c.json").string();
  const Run r = cli({"construct", "--scheme", "thm-1.1-ii", "--q", "5", "--n", "8", "--r", "3", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("[8, 4, 4] code over GF(5), locality 3") != std::string::npos);
  CHECK(r.out.find("g(x) = x^4 + x^3 + 2x + 1") != std::string::npos);
  const auto j = nlohmann::ordered_json::parse(read_file(path));
  CHECK(j["schema_version"] == 1);
  CHECK(j["scheme"] == "thm-1.1-ii");
  CHECK(j["g"] == nlohmann::ordered_json::array({1, 2, 0, 1, 1}));
  CHECK(j["k"] == 4);
  CHECK(j["alpha"] == 3);
  CHECK(j["gamma"] == 3);
  CHECK(j["beta"]["field"]["modulus"] == nlohmann::ordered_json::array({1, 1, 1}));
}

TEST_CASE("construct reports precondition failures") {
  const Run r = cli({"construct", "--scheme", "thm-1.1-i", "--q", "4", "--n", "10", "--r", "2"});
  CHECK(r.code != 0);
  CHECK(r.err.find("gcd(n, q) = gcd(10, 4) = 2 != 1") != std::string::npos);

  CHECK(cli({"construct", "--scheme", "ex-3.2", "--q", "13", "--n", "12", "--r", "2"}).code == kExitUsage);
  CHECK(cli({"construct", "--scheme", "thm-9", "--q", "13", "--n", "12", "--r", "2"}).code == kExitUsage);
  const Run gap = cli({"construct", "--scheme", "thm-3.4", "--q", "7", "--r", "3"});
  CHECK(gap.code == 1);
  CHECK(gap.err.find("alpha is not in F_7") != std::string::npos);
}

TEST_CASE("construct the conjugate-symmetric example") {
  const auto path = scratch("ex33.json").string();
  const Run r = cli({"construct", "--scheme", "ex-3.3", "--q", "11", "--n", "12", "--r", "3", "--d", "10", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("[12, 3, 10]") != std::string::npos);
  const auto j = nlohmann::ordered_json::parse(read_file(path));
  CHECK(j["n"] == 12);
  CHECK(j["k"] == 3);
  CHECK(j["d_claimed"] == 10);
  CHECK(j["beta"]["field"]["m"] == 2);
  CHECK(j["beta"]["value"].is_array());
}

TEST_CASE("extension-field codes use digit arrays") {
  const auto path = scratch("f4.json").string();
  REQUIRE(cli({"construct", "--scheme", "thm-1.1-i", "--q", "4", "--n", "9", "--r", "2", "--out", path}).code == 0);
  const auto j = nlohmann::ordered_json::parse(read_file(path));
  CHECK(j["modulus"] == nlohmann::ordered_json::array({1, 1, 1}));
  for (const auto& c : j["g"]) CHECK(c.is_array());
  CHECK(j["alpha"].is_array());
}

TEST_CASE("save and load are byte-identical for every constructed code") {
  std::size_t count = 0;
  for (Scheme s : kAllSchemes) {
    for (const auto& rec : enumerate_valid_params(s, 13, 24)) {
      if (!rec.admissible()) continue;
      const LrcCode c = construct(rec.params);
      const std::string text = save_code(c);
      const LoadedCode back = load_code(text);
      REQUIRE(back.violations.empty());
      REQUIRE(back.code.has_value());
      CHECK(save_code(*back.code) == text);
      CHECK(back.code->base.generator() == c.base.generator());
      ++count;
    }
  }
  CHECK(count > 200);
}

TEST_CASE("verify") {
  const auto path = q5_file();
  const Run r = cli({"verify", path});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["verdict"] == "optimal-certified");
  CHECK(j["d_measured"]["value"] == 4);

  const Run low = cli({"verify", path, "--budget", "1"});
  CHECK((low.code == 2 || low.code == 4));
  CHECK(nlohmann::ordered_json::parse(low.out)["verdict"] != "optimal-certified");
}

TEST_CASE("verify flags tampered files") {
  const auto path = q5_file();
  const auto original = nlohmann::ordered_json::parse(read_file(path));

  auto edited = original;
  edited["g"][1] = 3;
  const auto bad_g = scratch("bad_g.json").string();
  write_file(bad_g, edited.dump(2));
  const Run r = cli({"verify", bad_g});
  CHECK(r.code == 3);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["verdict"] == "refuted");
  CHECK_FALSE(j["violations"].empty());

  edited = original;
  edited["h"][0] = 1;
  const auto bad_h = scratch("bad_h.json").string();
  write_file(bad_h, edited.dump(2));
  CHECK(cli({"verify", bad_h}).code == 3);

  edited = original;
  edited["beta"]["field"]["modulus"] = nlohmann::ordered_json::array({2, 0, 1});
  const auto bad_mod = scratch("bad_mod.json").string();
  write_file(bad_mod, edited.dump(2));
  CHECK(cli({"verify", bad_mod}).code == 3);

  edited = original;
  edited["d_claimed"] = 5;
  const auto bad_d = scratch("bad_d.json").string();
  write_file(bad_d, edited.dump(2));
  CHECK(cli({"verify", bad_d}).code == 3);
}

TEST_CASE("malformed files are usage errors") {
  const auto junk = scratch("junk.json").string();
  write_file(junk, "{ not json");
  CHECK(cli({"verify", junk}).code == kExitUsage);

  auto j = nlohmann::ordered_json::parse(read_file(q5_file()));
  j.erase("g");
  const auto missing = scratch("missing.json").string();
  write_file(missing, j.dump(2));
  CHECK(cli({"verify", missing}).code == kExitUsage);

  CHECK(cli({"verify", scratch("does_not_exist.json").string()}).code == kExitUsage);
  CHECK(cli({"encode", junk, "--message", "1,2,3,4"}).code == kExitUsage);
}

TEST_CASE("encode") {
  const auto path = q5_file();
  CHECK(cli({"encode", path, "--message", "0,0,0,0"}).out == "0,0,0,0,0,0,0,0\n");
  CHECK(cli({"encode", path, "--message", "1,0,0,0"}).out == "1,2,0,1,1,0,0,0\n");
  CHECK(cli({"encode", path, "--message", "1,0,0"}).code == kExitUsage);
  CHECK(cli({"encode", path, "--message", "1,0,0,5"}).code == kExitUsage);
  CHECK(cli({"encode", path, "--message", "1,x,0,0"}).code == kExitUsage);
}

TEST_CASE("repair") {
  const auto path = q5_file();
  const Run r = cli({"repair", path, "--word", "_,2,0,1,1,0,0,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\npositions 2,4,6\n");
  CHECK(cli({"repair", path, "--word", "_,_,0,1,1,0,0,0"}).code == kExitUsage);
  CHECK(cli({"repair", path, "--word", "1,2,0,1,1,0,0,0"}).code == kExitUsage);
  CHECK(cli({"repair", path, "--word", "_,2,0,1,1,0,0"}).code == kExitUsage);
}

TEST_CASE("encode then repair every coordinate through the CLI") {
  const auto paths = std::vector<std::pair<std::string, std::vector<std::string>>>{
      {"r1.json", {"--scheme", "thm-1.1-i", "--q", "4", "--n", "9", "--r", "2"}},
      {"r2.json", {"--scheme", "ex-3.2", "--q", "13", "--n", "12", "--r", "2", "--d", "5"}},
      {"r3.json", {"--scheme", "thm-3.4", "--q", "5", "--r", "3"}},
  };
  std::mt19937 rng(9);
  for (const auto& [name, flags] : paths) {
    const auto path = scratch(name).string();
    std::vector<std::string> args{"construct"};
    args.insert(args.end(), flags.begin(), flags.end());
    args.insert(args.end(), {"--out", path});
    REQUIRE(cli(args).code == 0);
    const LrcCode code = *load_code(read_file(path)).code;
    std::uniform_int_distribution<std::uint32_t> pick(0, code.base.q() - 1);
    std::string msg;
    for (std::size_t i = 0; i < code.base.k(); ++i) msg += (i ? "," : "") + std::to_string(pick(rng));
    const Run enc = cli({"encode", path, "--message", msg});
    REQUIRE(enc.code == 0);
    std::vector<std::string> symbols;
    std::stringstream ss(enc.out.substr(0, enc.out.size() - 1));
    for (std::string t; std::getline(ss, t, ',');) symbols.push_back(t);
    REQUIRE(symbols.size() == code.base.n());
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      std::string word;
      for (std::size_t j = 0; j < symbols.size(); ++j) word += (j ? "," : "") + (j == i ? std::string("_") : symbols[j]);
      const Run rep = cli({"repair", path, "--word", word});
      REQUIRE(rep.code == 0);
      CHECK(split_lines(rep.out)[0] == symbols[i]);
    }
  }
}

TEST_CASE("sweep with verification") {
  const Run r = cli({"sweep", "--scheme", "thm-1.1-i", "--qmax", "8", "--nmax", "32", "--verify"});
  CHECK(r.code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() > 1);
  CHECK(lines[0] == "scheme,q,n,k,r,d,verdict");
  std::size_t certified = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> f;
    std::stringstream ss(lines[i]);
    for (std::string t; std::getline(ss, t, ',');) f.push_back(t);
    REQUIRE(f.size() == 7);
    const std::uint64_t q = std::stoull(f[1]);
    const std::uint64_t k = std::stoull(f[3]);
    long double space = 1;
    for (std::uint64_t t = 0; t < k; ++t) space *= static_cast<long double>(q);
    CAPTURE(lines[i]);
    if (space <= static_cast<long double>(std::uint64_t{1} << 24)) {
      CHECK(f[6] == "optimal-certified");
      ++certified;
    } else {
      CHECK(f[6] == "indeterminate");
    }
  }
  CHECK(certified > 10);
}

TEST_CASE("sweep lists the double-length hypothesis gap") {
  const Run r = cli({"sweep", "--scheme", "thm-3.4", "--qmax", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("thm-3.4,5,8,4,3,4,unverified\n") != std::string::npos);
  CHECK(r.out.find("thm-3.4,7,12,7,3,4,excluded:alpha = beta^(n/(r+1)) not in F_q\n") != std::string::npos);
}

TEST_CASE("sweep edge cases and formats") {
  const Run empty = cli({"sweep", "--scheme", "ex-3.3", "--qmax", "1", "--nmax", "1"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "scheme,q,n,k,r,d,verdict\n");

  const Run jl = cli({"sweep", "--scheme", "ex-3.3", "--qmax", "4", "--nmax", "4", "--format", "jsonl"});
  CHECK(jl.code == 0);
  const auto first = nlohmann::ordered_json::parse(split_lines(jl.out).at(0));
  CHECK(first["scheme"] == "ex-3.3");
  CHECK(first["verdict"] == "unverified");
  CHECK(cli({"sweep", "--scheme", "ex-3.3", "--qmax", "4", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> a{"sweep", "--scheme", "ex-3.2", "--qmax", "13", "--nmax", "12", "--verify", "--budget", "200000", "--threads", "1"};
  std::vector<std::string> b = a;
  b.back() = "4";
  CHECK(cli(a).out == cli(b).out);
  CHECK(cli(b).out == cli(b).out);

  const auto p1 = scratch("det1.json").string();
  const auto p2 = scratch("det2.json").string();
  cli({"construct", "--scheme", "ex-3.3", "--q", "11", "--n", "12", "--r", "3", "--d", "10", "--out", p1});
  cli({"construct", "--scheme", "ex-3.3", "--q", "11", "--n", "12", "--r", "3", "--d", "10", "--out", p2});
  CHECK(read_file(p1) == read_file(p2));
  CHECK(cli({"verify", p1}).out == cli({"verify", p2}).out);
}

TEST_CASE("argument errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"construct", "--q", "5"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == 0);
}
