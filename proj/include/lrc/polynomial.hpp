#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lrc/finite_field.hpp"

namespace lrc {

/// Dense univariate polynomial over a finite field.
///
/// Coefficients are stored lowest degree first as canonical field values, so
/// coefficient i is codeword coordinate i. The zero polynomial has no
/// coefficients and degree -1; otherwise the top coefficient is nonzero.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field);
  Polynomial(FieldPtr field, std::vector<std::uint32_t> coeffs);

  static Polynomial constant(const FieldPtr& field, std::uint32_t c);
  /// c * x^degree
  static Polynomial monomial(const FieldPtr& field, std::uint32_t c, std::size_t degree);
  /// x^n - 1
  static Polynomial cycle(const FieldPtr& field, std::size_t n);
  /// prod (x - root); rejects repeated roots.
  static Polynomial from_roots(std::span<const FieldElement> roots);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::span<const std::uint32_t> coefficients() const { return coeffs_; }
  std::uint32_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  FieldElement coefficient(std::size_t i) const { return field_->element(coeff(i)); }

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(std::uint32_t c) const;
  bool operator==(const Polynomial& rhs) const;

  FieldElement eval(const FieldElement& a) const;
  std::uint32_t eval(std::uint32_t a) const;

  /// x^{deg f} f(1/x): the coefficient sequence reversed, not normalized.
  Polynomial reciprocal() const;
  Polynomial monic() const;

  /// Human-readable form, highest degree first, e.g. "x^4 + 2x^3 + x + 1".
  /// Extension-field coefficients are printed as their canonical value in
  /// brackets.
  std::string to_string() const;

 private:
  void check_same(const Polynomial& rhs) const;
  void normalize();

  FieldPtr field_;
  std::vector<std::uint32_t> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& f, const Polynomial& g);

/// True iff f divides x^n - 1.
bool divides_cycle(const Polynomial& f, std::size_t n);

}  // namespace lrc
