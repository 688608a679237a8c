#include "lrc/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "lrc/error.hpp"

namespace lrc {

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::vector<std::uint32_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (c >= field_->order()) {
      throw PreconditionError("coefficient " + std::to_string(c) + " out of range for " +
                              field_->describe());
    }
  }
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::check_same(const Polynomial& rhs) const {
  if (field_ != rhs.field_ && !(*field_ == *rhs.field_)) {
    throw FieldMismatch("polynomials over " + field_->describe() + " and " +
                        rhs.field_->describe());
  }
}

Polynomial Polynomial::constant(const FieldPtr& field, std::uint32_t c) {
  return Polynomial(field, {c});
}

Polynomial Polynomial::monomial(const FieldPtr& field, std::uint32_t c, std::size_t degree) {
  std::vector<std::uint32_t> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Polynomial(field, std::move(coeffs));
}

Polynomial Polynomial::cycle(const FieldPtr& field, std::size_t n) {
  if (n == 0) throw PreconditionError("x^n - 1 needs n >= 1");
  std::vector<std::uint32_t> coeffs(n + 1, 0);
  coeffs[0] = field->neg(1);
  coeffs[n] = 1;
  return Polynomial(field, std::move(coeffs));
}

Polynomial Polynomial::from_roots(std::span<const FieldElement> roots) {
  if (roots.empty()) throw PreconditionError("from_roots needs at least one root");
  const FieldPtr& field = roots.front().field();
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::uint32_t> acc{1};
  for (const auto& root : roots) {
    if (!(*root.field() == *field)) throw FieldMismatch("roots from different fields");
    if (!seen.insert(root.value()).second) {
      throw PreconditionError("repeated root " + std::to_string(root.value()));
    }
    // acc *= (x - root)
    const std::uint32_t minus_root = field->neg(root.value());
    acc.push_back(0);
    for (std::size_t i = acc.size() - 1; i > 0; --i) {
      acc[i] = field->add(acc[i - 1], field->mul(acc[i], minus_root));
    }
    acc[0] = field->mul(acc[0], minus_root);
  }
  return Polynomial(field, std::move(acc));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  check_same(rhs);
  std::vector<std::uint32_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add(coeff(i), rhs.coeff(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  check_same(rhs);
  std::vector<std::uint32_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(coeff(i), rhs.coeff(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  check_same(rhs);
  if (is_zero() || rhs.is_zero()) return Polynomial(field_);
  std::vector<std::uint32_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return Polynomial(field_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return coeffs_ == rhs.coeffs_ && (field_ == rhs.field_ || *field_ == *rhs.field_);
}

std::uint32_t Polynomial::eval(std::uint32_t a) const {
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, a), coeffs_[i]);
  return acc;
}

FieldElement Polynomial::eval(const FieldElement& a) const {
  if (!(*a.field() == *field_)) throw FieldMismatch("evaluation point outside " + field_->describe());
  return field_->element(eval(a.value()));
}

Polynomial Polynomial::reciprocal() const {
  if (is_zero()) throw PreconditionError("reciprocal of the zero polynomial");
  std::vector<std::uint32_t> out(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
  return scaled(field_->inv(coeffs_.back()));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const std::uint32_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = field_->is_prime_field() ? std::to_string(c) : "[" + std::to_string(c) + "]";
    if (c != 1 || i == 0) os << cs;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (!(*f.field() == *g.field())) throw FieldMismatch("divmod over different fields");
  const FieldPtr& field = f.field();
  if (f.degree() < g.degree()) return {Polynomial(field), f};
  std::vector<std::uint32_t> rem(f.coefficients().begin(), f.coefficients().end());
  const auto gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  const std::uint32_t lead_inv = field->inv(gc.back());
  std::vector<std::uint32_t> quot(rem.size() - dg, 0);
  for (std::size_t top = rem.size(); top-- > dg;) {
    const std::uint32_t c = rem[top];
    if (c == 0) continue;
    const std::uint32_t factor = field->mul(c, lead_inv);
    const std::size_t shift = top - dg;
    quot[shift] = factor;
    for (std::size_t i = 0; i <= dg; ++i) {
      rem[shift + i] = field->sub(rem[shift + i], field->mul(factor, gc[i]));
    }
  }
  rem.resize(dg);
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

bool divides_cycle(const Polynomial& f, std::size_t n) {
  return divmod(Polynomial::cycle(f.field(), n), f).remainder.is_zero();
}

}  // namespace lrc
