#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrc/cyclic_code.hpp"
#include "lrc/finite_field.hpp"

namespace lrc {

/// The five generator-polynomial families. The external identifiers are
/// "thm-1.1-i", "thm-1.1-ii", "ex-3.2", "ex-3.3" and "thm-3.4".
enum class Scheme {
  distance3,           // g = (x-1)(x^s - alpha), unbounded length
  distance4,           // g = (x-1)(x-gamma)(x^s - alpha), unbounded length
  multiplicative,      // n | q-1, any distance
  conjugate_symmetric, // n | q+1, even distances
  double_length,       // n = 2(q-1), distance 4
};

inline constexpr Scheme kAllSchemes[] = {Scheme::distance3, Scheme::distance4, Scheme::multiplicative,
                                         Scheme::conjugate_symmetric, Scheme::double_length};

std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);
bool scheme_takes_distance(Scheme scheme);

struct ConstructionParams {
  Scheme scheme = Scheme::distance3;
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::optional<std::size_t> d;  // multiplicative and conjugate_symmetric only
};

/// Elements chosen during construction. beta lives in the splitting field;
/// alpha and gamma are projected into F_q.
struct Provenance {
  FieldElement beta;
  std::optional<FieldElement> alpha;
  std::optional<FieldElement> gamma;
};

/// A cyclic code together with its locality and claimed distance.
struct LrcCode {
  CyclicCode base;
  std::size_t r;
  std::size_t d_claimed;
  ConstructionParams params;
  Provenance provenance;

  Scheme scheme() const { return params.scheme; }
  /// n / (r+1), the distance between consecutive members of a repair group.
  std::size_t stride() const { return base.n() / (r + 1); }

  /// Structural invariants: (r+1) | n, k matches the scheme's dimension
  /// formula, d_claimed equals the Singleton-type bound. Empty when all hold.
  std::vector<std::string> invariant_violations() const;
};

/// n - k - ceil(k/r) + 2 over signed integers.
long long singleton_value(long long n, long long k, long long r);

/// Dimension predicted by the scheme's closed form.
std::optional<std::size_t> scheme_dimension(const ConstructionParams& params);

LrcCode construct_distance3(std::uint32_t q, std::size_t n, std::size_t r);
LrcCode construct_distance4(std::uint32_t q, std::size_t n, std::size_t r);
LrcCode construct_multiplicative(std::uint32_t q, std::size_t n, std::size_t r, std::size_t d);
LrcCode construct_conjugate_symmetric(std::uint32_t q, std::size_t n, std::size_t r, std::size_t d);
LrcCode construct_double_length(std::uint32_t q, std::size_t r);

/// Dispatches on params.scheme.
LrcCode construct(const ConstructionParams& params);

/// Root exponents (mod n, relative to the canonical beta) that the
/// multiplicative and conjugate-symmetric families place in g.
std::vector<std::size_t> multiplicative_root_exponents(std::size_t n, std::size_t r, std::size_t d);
std::vector<std::size_t> conjugate_symmetric_root_exponents(std::size_t n, std::size_t r, std::size_t d);

/// Bezout coefficient a with a*s + b*(r+1) = 2, reduced to the smallest
/// nonnegative value modulo (r+1)/gcd(s, r+1).
long long bezout_two(long long s, long long r_plus_1);

struct ParamRecord {
  ConstructionParams params;
  std::optional<std::size_t> k;  // absent when the closed form is undefined
  std::size_t d_claimed = 0;
  /// Empty when the parameters are admissible; otherwise why the artifact
  /// refuses them although the scheme's stated hypothesis holds.
  std::string exclusion;

  bool admissible() const { return exclusion.empty(); }
};

/// Ascending enumeration over (q, n, r[, d]) with q <= q_max, n <= n_max.
/// Admissible records are exactly those construct() accepts; records that
/// satisfy the family's arithmetic hypothesis but are refused carry an exclusion note.
std::vector<ParamRecord> enumerate_valid_params(Scheme scheme, std::uint32_t q_max, std::size_t n_max);

}  // namespace lrc
