#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace lrc {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field F_{p^m} in polynomial basis over the canonical modulus.
///
/// Elements are addressed by their canonical value: the integer whose base-p
/// digits (lowest first) are the coefficients of the representative
/// polynomial. A Field is immutable once built and may be shared freely.
///
/// Multiplication, inversion and addition in extension fields go through
/// log/antilog and Zech tables built at construction, so the order is capped
/// (kDefaultMaxOrder unless the caller raises it).
class Field : public std::enable_shared_from_this<Field> {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 20;

  /// Builds F_{p^m} with the lexicographically smallest monic irreducible
  /// modulus (coefficients compared from the constant term upward).
  static FieldPtr make(std::uint32_t p, std::uint32_t m,
                       std::uint64_t max_order = kDefaultMaxOrder);

  /// Builds the field of order q, which must be a prime power.
  static FieldPtr of_order(std::uint64_t q,
                           std::uint64_t max_order = kDefaultMaxOrder);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  bool is_prime_field() const { return m_ == 1; }

  /// Modulus coefficients, lowest degree first, including the leading 1.
  /// Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

  /// Canonical multiplicative generator: the smallest value of order q-1.
  std::uint32_t generator() const { return generator_; }
  std::uint32_t log(std::uint32_t a) const;
  std::uint32_t exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
  std::uint64_t multiplicative_order(std::uint32_t a) const;

  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t from_digits(std::span<const std::uint32_t> digits) const;

  FieldElement element(std::uint32_t value) const;
  FieldElement zero() const;
  FieldElement one() const;

  /// Same descriptor: characteristic, degree and modulus agree.
  bool operator==(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

  std::string describe() const;

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);
  void build_tables();
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 0;
  std::uint32_t minus_one_log_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> one_plus_;  // value of 1 + g^t, extension fields only
};

/// An element bound to its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint32_t value);

  const FieldPtr& field() const { return field_; }
  std::uint32_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  std::vector<std::uint32_t> digits() const { return field_->digits(value_); }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& rhs) const;

 private:
  void check_same(const FieldElement& rhs) const;

  FieldPtr field_;
  std::uint32_t value_;
};

bool is_prime(std::uint64_t n);

/// Prime factors of n without multiplicity, ascending (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Returns {p, m} with q = p^m, or throws when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q);

/// Multiplicative order of q modulo n: the extension degree over F_q of the
/// smallest field holding a primitive n-th root of unity.
std::uint32_t splitting_degree(std::uint64_t q, std::uint64_t n);

/// g^{(Q-1)/n} for the canonical generator g of the field of order Q.
FieldElement primitive_nth_root(const FieldPtr& field, std::uint64_t n);

/// True iff a^q = a, i.e. a lies in the subfield of order q.
bool in_base_subfield(const FieldElement& a, std::uint64_t q);

/// Field embedding of a subfield F_q into an extension F_{q^m} of the same
/// characteristic.
///
/// Prime subfields embed as constants. For a non-prime subfield the
/// polynomial-basis generator x of F_q is sent to the smallest root of the
/// subfield's modulus inside the extension.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldPtr base, FieldPtr extension);

  const FieldPtr& base() const { return base_; }
  const FieldPtr& extension() const { return extension_; }

  std::uint32_t embed(std::uint32_t base_value) const { return embed_[base_value]; }
  FieldElement embed(const FieldElement& a) const;

  bool contains(std::uint32_t ext_value) const;
  /// Inverse of embed; throws AssertionFailure if the value is not in the image.
  std::uint32_t project(std::uint32_t ext_value) const;
  FieldElement project(const FieldElement& a) const;

 private:
  FieldPtr base_;
  FieldPtr extension_;
  std::vector<std::uint32_t> embed_;
  std::unordered_map<std::uint32_t, std::uint32_t> project_;
};

/// Image of a Frobenius-fixed element of an extension in the field `base`.
FieldElement project_to_base(const FieldElement& a, const FieldPtr& base);

/// Smallest extension of `base` holding a primitive n-th root of unity,
/// together with the embedding and the canonical root beta.
struct SplittingField {
  SubfieldEmbedding embedding;
  FieldElement beta;
  std::size_t n;

  const FieldPtr& base() const { return embedding.base(); }
  const FieldPtr& extension() const { return embedding.extension(); }
};

SplittingField make_splitting_field(const FieldPtr& base, std::size_t n);

}  // namespace lrc
