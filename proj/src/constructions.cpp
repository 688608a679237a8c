#include "lrc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

#include "lrc/error.hpp"
#include "lrc/polynomial.hpp"

namespace lrc {
namespace {

long long ceil_div(long long a, long long b) {
  const long long q = a / b;
  return (a % b != 0 && ((a > 0) == (b > 0))) ? q + 1 : q;
}

std::string str(std::size_t v) { return std::to_string(v); }

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

void require_coprime(std::uint32_t q, std::size_t n) {
  const auto g = std::gcd<std::uint64_t>(q, n);
  require(g == 1, "gcd(n, q) = gcd(" + str(n) + ", " + str(q) + ") = " + str(g) + " != 1");
}

void require_locality_divides(std::size_t n, std::size_t r) {
  require(r >= 1 && n % (r + 1) == 0, "r + 1 = " + str(r + 1) + " does not divide n = " + str(n));
}

// Lifts to the splitting field, asserts every coefficient is Frobenius-fixed
// and projects back down to F_q.
Polynomial project_down(const SplittingField& split, const Polynomial& g_ext) {
  const std::uint32_t q = split.base()->order();
  std::vector<std::uint32_t> coeffs;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(g_ext.degree()); ++i) {
    const FieldElement c = g_ext.coefficient(i);
    if (!in_base_subfield(c, q)) {
      throw AssertionFailure("coefficient of x^" + str(i) + " in g(x) is not fixed by Frobenius");
    }
    coeffs.push_back(split.embedding.project(c.value()));
  }
  return Polynomial(split.base(), std::move(coeffs));
}

// x^s - c over the extension.
Polynomial binomial(const FieldPtr& field, std::size_t s, std::uint32_t c) {
  std::vector<std::uint32_t> coeffs(s + 1, 0);
  coeffs[0] = field->neg(c);
  coeffs[s] = 1;
  return Polynomial(field, std::move(coeffs));
}

Polynomial linear(const FieldPtr& field, std::uint32_t root) {
  return Polynomial(field, {field->neg(root), 1});
}

FieldElement base_member(const SplittingField& split, const FieldElement& a, const char* name) {
  if (!in_base_subfield(a, split.base()->order())) {
    throw AssertionFailure(std::string(name) + " = " + std::to_string(a.value()) + " of " +
                           split.extension()->describe() + " is not in F_" +
                           str(split.base()->order()));
  }
  return split.embedding.project(a);
}

void require_not_zero_one(const FieldElement& a, const char* name) {
  if (a.is_zero() || a.is_one()) {
    throw AssertionFailure(std::string(name) + " must lie in F_q \\ {0, 1}");
  }
}

LrcCode finish(ConstructionParams params, const SplittingField& split, const Polynomial& g_ext,
               std::size_t d_claimed, Provenance provenance) {
  Polynomial g = project_down(split, g_ext);
  CyclicCode base = CyclicCode::make(split.base(), params.n, std::move(g));
  const auto expected_k = scheme_dimension(params);
  if (!expected_k || *expected_k != base.k()) {
    throw AssertionFailure("dimension " + str(base.k()) + " disagrees with the closed form");
  }
  const std::size_t r = params.r;
  return LrcCode{std::move(base), r, d_claimed, params, std::move(provenance)};
}

Polynomial roots_polynomial(const SplittingField& split, const std::vector<std::size_t>& exponents) {
  std::vector<FieldElement> roots;
  roots.reserve(exponents.size());
  for (auto e : exponents) roots.push_back(split.beta.pow(static_cast<std::int64_t>(e)));
  return Polynomial::from_roots(roots);
}

void require_distinct(const std::vector<std::size_t>& exponents, std::size_t n) {
  std::set<std::size_t> seen;
  for (auto e : exponents) {
    if (e >= n || !seen.insert(e).second) {
      throw PreconditionError("root exponent " + str(e) + " collides or is out of range for n = " + str(n));
    }
  }
}

}  // namespace

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::distance3: return "thm-1.1-i";
    case Scheme::distance4: return "thm-1.1-ii";
    case Scheme::multiplicative: return "ex-3.2";
    case Scheme::conjugate_symmetric: return "ex-3.3";
    case Scheme::double_length: return "thm-3.4";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (auto s : kAllSchemes) {
    if (scheme_name(s) == name) return s;
  }
  return std::nullopt;
}

bool scheme_takes_distance(Scheme scheme) {
  return scheme == Scheme::multiplicative || scheme == Scheme::conjugate_symmetric;
}

long long singleton_value(long long n, long long k, long long r) {
  return n - k - ceil_div(k, r) + 2;
}

std::optional<std::size_t> scheme_dimension(const ConstructionParams& p) {
  const auto n = static_cast<long long>(p.n);
  const auto r = static_cast<long long>(p.r);
  if (r < 1 || n % (r + 1) != 0) return std::nullopt;
  const long long s = n / (r + 1);
  long long k = -1;
  switch (p.scheme) {
    case Scheme::distance3: k = n - 1 - s; break;
    case Scheme::distance4: k = n - 2 - s; break;
    case Scheme::double_length: k = n - s - 2; break;
    case Scheme::multiplicative:
    case Scheme::conjugate_symmetric: {
      if (!p.d) return std::nullopt;
      const auto d = static_cast<long long>(*p.d);
      const long long a = d / (r + 1);
      const long long b = d % (r + 1);
      k = r * s - a * r - b + 2;
      if (p.scheme == Scheme::multiplicative && b <= 1) {
        if (b == 1) return std::nullopt;
        k -= 1;
      }
      break;
    }
  }
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

std::vector<std::string> LrcCode::invariant_violations() const {
  std::vector<std::string> out;
  const std::size_t n = base.n();
  const std::size_t k = base.k();
  if (r < 1 || n % (r + 1) != 0) {
    out.push_back("r + 1 = " + str(r + 1) + " does not divide n = " + str(n));
    return out;
  }
  const auto expected = scheme_dimension(params);
  if (!expected) {
    out.push_back("scheme dimension formula undefined for these parameters");
  } else if (*expected != k) {
    out.push_back("k = " + str(k) + " but the scheme formula gives " + str(*expected));
  }
  if (k >= 1) {
    const long long bound = singleton_value(static_cast<long long>(n), static_cast<long long>(k),
                                            static_cast<long long>(r));
    if (bound != static_cast<long long>(d_claimed)) {
      out.push_back("d_claimed = " + str(d_claimed) + " but the Singleton-type bound is " +
                    std::to_string(bound));
    }
  } else {
    out.push_back("code has dimension 0");
  }
  return out;
}

long long bezout_two(long long s, long long r_plus_1) {
  // extended Euclid on (s, r+1)
  long long old_r = s, cur_r = r_plus_1;
  long long old_x = 1, cur_x = 0;
  while (cur_r != 0) {
    const long long quot = old_r / cur_r;
    old_r = std::exchange(cur_r, old_r - quot * cur_r);
    old_x = std::exchange(cur_x, old_x - quot * cur_x);
  }
  const long long g = old_r;
  if (2 % g != 0) {
    throw PreconditionError("gcd(n/(r+1), r+1) = " + std::to_string(g) + " does not divide 2");
  }
  const long long mod = r_plus_1 / g;
  long long a = old_x * (2 / g);
  a = ((a % mod) + mod) % mod;
  return a;
}

LrcCode construct_distance3(std::uint32_t q, std::size_t n, std::size_t r) {
  FieldPtr field = Field::of_order(q);
  require(n >= 1, "n must be positive");
  require_coprime(q, n);
  require(r >= 2, "locality r = " + str(r) + " must be at least 2");
  const std::size_t g_nq = std::gcd<std::size_t>(n, q - 1);
  require(g_nq % (r + 1) == 0, "gcd(n, q-1) = " + str(g_nq) + " is not divisible by r + 1 = " + str(r + 1));

  const SplittingField split = make_splitting_field(field, n);
  const FieldPtr& ext = split.extension();
  const std::size_t s = n / (r + 1);
  const FieldElement alpha_ext = split.beta.pow(static_cast<std::int64_t>(s));
  const FieldElement alpha = base_member(split, alpha_ext, "alpha");
  require_not_zero_one(alpha, "alpha");

  const Polynomial g_ext = linear(ext, 1) * binomial(ext, s, alpha_ext.value());
  ConstructionParams params{Scheme::distance3, q, n, r, std::nullopt};
  return finish(params, split, g_ext, 3, Provenance{split.beta, alpha, std::nullopt});
}

LrcCode construct_distance4(std::uint32_t q, std::size_t n, std::size_t r) {
  FieldPtr field = Field::of_order(q);
  require(n >= 1, "n must be positive");
  require_coprime(q, n);
  require(r >= 3, "locality r = " + str(r) + " must be at least 3");
  const std::size_t g_nq = std::gcd<std::size_t>(n, q - 1);
  require(g_nq % (r + 1) == 0, "gcd(n, q-1) = " + str(g_nq) + " is not divisible by r + 1 = " + str(r + 1));
  const std::size_t s = n / (r + 1);
  const std::size_t g_sr = std::gcd(s, r + 1);
  require(2 % g_sr == 0, "gcd(n/(r+1), r+1) = " + str(g_sr) + " does not divide 2");

  const SplittingField split = make_splitting_field(field, n);
  const FieldPtr& ext = split.extension();
  const FieldElement alpha_ext = split.beta.pow(static_cast<std::int64_t>(s));
  const FieldElement alpha = base_member(split, alpha_ext, "alpha");
  require_not_zero_one(alpha, "alpha");

  const long long a = bezout_two(static_cast<long long>(s), static_cast<long long>(r + 1));
  const FieldElement gamma_ext = alpha_ext.pow(a);
  const FieldElement gamma = base_member(split, gamma_ext, "gamma");
  require_not_zero_one(gamma, "gamma");
  if (gamma_ext.pow(static_cast<std::int64_t>(s)) == alpha_ext) {
    throw AssertionFailure("gamma^(n/(r+1)) = alpha, so x - gamma divides x^(n/(r+1)) - alpha");
  }

  const Polynomial g_ext =
      linear(ext, 1) * linear(ext, gamma_ext.value()) * binomial(ext, s, alpha_ext.value());
  ConstructionParams params{Scheme::distance4, q, n, r, std::nullopt};
  return finish(params, split, g_ext, 4, Provenance{split.beta, alpha, gamma});
}

std::vector<std::size_t> multiplicative_root_exponents(std::size_t n, std::size_t r, std::size_t d) {
  const std::size_t s = n / (r + 1);
  const std::size_t a = d / (r + 1);
  const std::size_t b = d % (r + 1);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 2 <= d; ++i) out.push_back(i);
  // b in {2..r}: j runs a+1 .. s-1; b = 0: j runs a+1 .. s with offset -2.
  const std::size_t last_j = b >= 2 ? s - 1 : s;
  for (std::size_t j = a + 1; j <= last_j; ++j) out.push_back(((r + 1) * j + b + n - 2) % n);
  return out;
}

LrcCode construct_multiplicative(std::uint32_t q, std::size_t n, std::size_t r, std::size_t d) {
  FieldPtr field = Field::of_order(q);
  require(n >= 1 && (q - 1) % n == 0, "n = " + str(n) + " does not divide q - 1 = " + str(q - 1));
  require(r >= 2, "locality r = " + str(r) + " must be at least 2");
  require_locality_divides(n, r);
  require(d >= 1 && d <= n, "distance d = " + str(d) + " outside [1, n]");
  if (d % (r + 1) == 1) {
    throw PreconditionError("d = " + str(d) + " leaves remainder 1 modulo r + 1: the generator then holds " +
                            str(d) + " consecutive roots and the code has distance d + 1 = " +
                            str(d + 1) + " (use d = " + str(d + 1) + ")");
  }
  const auto exponents = multiplicative_root_exponents(n, r, d);
  require_distinct(exponents, n);

  const SplittingField split = make_splitting_field(field, n);
  const Polynomial g_ext = roots_polynomial(split, exponents);
  ConstructionParams params{Scheme::multiplicative, q, n, r, d};
  return finish(params, split, g_ext, d, Provenance{split.beta, std::nullopt, std::nullopt});
}

std::vector<std::size_t> conjugate_symmetric_root_exponents(std::size_t n, std::size_t r, std::size_t d) {
  const std::size_t s = n / (r + 1);
  const std::size_t a = d / (r + 1);
  const std::size_t half = (d - 2) / 2;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= half; ++i) out.push_back(i);
  for (std::size_t i = 1; i <= half; ++i) out.push_back(n - i);
  const std::size_t first_j = (a + 2) / 2;
  if (s >= first_j) {
    for (std::size_t j = first_j; j + first_j <= s; ++j) out.push_back(((r + 1) * j) % n);
  }
  return out;
}

LrcCode construct_conjugate_symmetric(std::uint32_t q, std::size_t n, std::size_t r, std::size_t d) {
  FieldPtr field = Field::of_order(q);
  require(n >= 1 && (q + 1) % n == 0, "n = " + str(n) + " does not divide q + 1 = " + str(q + 1));
  require(r >= 2, "locality r = " + str(r) + " must be at least 2");
  require_locality_divides(n, r);
  require(d >= 2 && d <= n, "distance d = " + str(d) + " outside [2, n]");
  const std::size_t a = d / (r + 1);
  const std::size_t b = d % (r + 1);
  const std::size_t b_max = 2 * (r / 2);  // 2 * ceil((r-1)/2)
  if (a % 2 != 0 || b % 2 != 0 || b < 2 || b > b_max) {
    throw PreconditionError("d = " + str(d) + " = " + str(a) + "(r+1) + " + str(b) +
                            " needs a even and b in {2, 4, ..., " + str(b_max) + "}");
  }
  const auto exponents = conjugate_symmetric_root_exponents(n, r, d);
  require_distinct(exponents, n);

  const SplittingField split = make_splitting_field(field, n);
  const Polynomial g_ext = roots_polynomial(split, exponents);
  ConstructionParams params{Scheme::conjugate_symmetric, q, n, r, d};
  return finish(params, split, g_ext, d, Provenance{split.beta, std::nullopt, std::nullopt});
}

LrcCode construct_double_length(std::uint32_t q, std::size_t r) {
  FieldPtr field = Field::of_order(q);
  require(q >= 3, "q must be at least 3");
  const std::size_t n = 2 * (std::size_t{q} - 1);
  require_coprime(q, n);
  require_locality_divides(n, r);
  require(r >= 3, "locality r = " + str(r) + " < 3: the Singleton-type bound for k = n - n/(r+1) - 2 is " +
                      std::to_string(singleton_value(static_cast<long long>(n),
                                                     static_cast<long long>(n - n / (r + 1) - 2),
                                                     static_cast<long long>(r))) +
                      ", not 4");

  const SplittingField split = make_splitting_field(field, n);
  const FieldPtr& ext = split.extension();
  const std::size_t s = n / (r + 1);
  const FieldElement beta_sq = split.beta.pow(2);
  base_member(split, beta_sq, "beta^2");
  const FieldElement alpha_ext = split.beta.pow(static_cast<std::int64_t>(s));
  if (!in_base_subfield(alpha_ext, q)) {
    throw PreconditionError("alpha = beta^" + str(s) + " has order " + str(r + 1) + ", which does not divide q - 1 = " +
                            str(q - 1) + ": alpha is not in F_" + str(q) +
                            " although r + 1 divides 2(q - 1)");
  }
  const FieldElement alpha = split.embedding.project(alpha_ext);
  require_not_zero_one(alpha, "alpha");

  const Polynomial g_ext =
      linear(ext, 1) * linear(ext, beta_sq.value()) * binomial(ext, s, alpha_ext.value());
  ConstructionParams params{Scheme::double_length, q, n, r, std::nullopt};
  return finish(params, split, g_ext, 4, Provenance{split.beta, alpha, std::nullopt});
}

LrcCode construct(const ConstructionParams& p) {
  switch (p.scheme) {
    case Scheme::distance3: return construct_distance3(p.q, p.n, p.r);
    case Scheme::distance4: return construct_distance4(p.q, p.n, p.r);
    case Scheme::multiplicative:
      require(p.d.has_value(), "scheme ex-3.2 needs a distance d");
      return construct_multiplicative(p.q, p.n, p.r, *p.d);
    case Scheme::conjugate_symmetric:
      require(p.d.has_value(), "scheme ex-3.3 needs a distance d");
      return construct_conjugate_symmetric(p.q, p.n, p.r, *p.d);
    case Scheme::double_length:
      if (p.n != 0) {
        require(p.n == 2 * (std::size_t{p.q} - 1),
                "scheme thm-3.4 has n = 2(q - 1) = " + str(2 * (std::size_t{p.q} - 1)));
      }
      return construct_double_length(p.q, p.r);
  }
  throw PreconditionError("unknown scheme");
}

std::vector<ParamRecord> enumerate_valid_params(Scheme scheme, std::uint32_t q_max, std::size_t n_max) {
  std::vector<ParamRecord> out;
  auto push = [&](ConstructionParams params, std::size_t d_claimed, std::string exclusion) {
    const auto k = scheme_dimension(params);
    out.push_back(ParamRecord{params, k, d_claimed, std::move(exclusion)});
  };

  for (std::uint32_t q = 2; q <= q_max; ++q) {
    if (prime_factors(q).size() != 1) continue;
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (scheme == Scheme::double_length && n != 2 * (std::size_t{q} - 1)) continue;
      for (std::size_t r = 1; r + 1 <= n; ++r) {
        if (n % (r + 1) != 0) continue;
        const std::size_t s = n / (r + 1);
        switch (scheme) {
          case Scheme::distance3:
            if (r >= 2 && std::gcd<std::size_t>(n, q) == 1 && std::gcd<std::size_t>(n, q - 1) % (r + 1) == 0) {
              push({scheme, q, n, r, std::nullopt}, 3, "");
            }
            break;
          case Scheme::distance4:
            if (r >= 3 && std::gcd<std::size_t>(n, q) == 1 && std::gcd<std::size_t>(n, q - 1) % (r + 1) == 0 &&
                2 % std::gcd(s, r + 1) == 0) {
              push({scheme, q, n, r, std::nullopt}, 4, "");
            }
            break;
          case Scheme::multiplicative:
            if (r >= 2 && (q - 1) % n == 0) {
              for (std::size_t d = 1; d <= n; ++d) {
                std::string why;
                if (d % (r + 1) == 1) why = "d mod (r+1) = 1 yields distance d+1";
                push({scheme, q, n, r, d}, d, why);
              }
            }
            break;
          case Scheme::conjugate_symmetric:
            if (r >= 2 && (q + 1) % n == 0) {
              const std::size_t b_max = 2 * (r / 2);
              for (std::size_t a = 0; a * (r + 1) + 2 <= n; a += 2) {
                for (std::size_t b = 2; b <= b_max; b += 2) {
                  const std::size_t d = a * (r + 1) + b;
                  if (d <= n) push({scheme, q, n, r, d}, d, "");
                }
              }
            }
            break;
          case Scheme::double_length:
            if (q % 2 == 1) {
              std::string why;
              if (r < 3) {
                why = "r < 3 breaks Singleton equality at d = 4";
              } else if ((q - 1) % (r + 1) != 0) {
                why = "alpha = beta^(n/(r+1)) not in F_q";
              }
              push({scheme, q, n, r, std::nullopt}, 4, why);
            }
            break;
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const ParamRecord& x, const ParamRecord& y) {
    const auto& a = x.params;
    const auto& b = y.params;
    return std::tie(a.q, a.n, a.r, a.d) < std::tie(b.q, b.n, b.r, b.d);
  });
  return out;
}

}  // namespace lrc
