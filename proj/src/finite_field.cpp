#include "lrc/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lrc/error.hpp"

namespace lrc {
namespace {

// Dense polynomials over F_p used only while searching for a modulus.
using PrimePoly = std::vector<std::uint64_t>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - factor * f[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f,
                      std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(out), f, p);
}

PrimePoly poly_powmod(PrimePoly base, std::uint64_t e, const PrimePoly& f,
                      std::uint64_t p) {
  PrimePoly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool has_root(const PrimePoly& f, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

// Root test for degree <= 3, Ben-Or's gcd test above that.
bool is_irreducible(const PrimePoly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return m == 1;
  if (m <= 3) return !has_root(f, p);
  PrimePoly x_power{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    x_power = poly_powmod(x_power, p, f, p);
    PrimePoly diff = x_power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    const PrimePoly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  // The constant term is the most significant key, so decode t with c0 as
  // its leading base-p digit.
  for (std::uint64_t t = 0; t < count; ++t) {
    PrimePoly f(m + 1, 0);
    f[m] = 1;
    std::uint64_t rest = t;
    for (std::uint32_t i = m; i-- > 0;) {
      f[i] = rest % p;
      rest /= p;
    }
    if (f[0] == 0) continue;
    if (is_irreducible(f, p)) return {f.begin(), f.end()};
  }
  throw AssertionFailure("no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
  if (q < 2) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
  const auto factors = prime_factors(q);
  if (factors.size() != 1 || factors.front() > UINT32_MAX) {
    throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
  }
  std::uint32_t m = 0;
  while (q > 1) {
    q /= factors.front();
    ++m;
  }
  return {static_cast<std::uint32_t>(factors.front()), m};
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, std::uint64_t max_order) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw PreconditionError("extension degree must be at least 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    order *= p;
    if (order > max_order || order > UINT32_MAX) {
      throw BudgetExceeded("field order " + std::to_string(p) + "^" + std::to_string(m) +
                              " exceeds the arithmetic limit " + std::to_string(max_order));
    }
  }
  std::vector<std::uint32_t> modulus;
  if (m > 1) modulus = canonical_modulus(p, m);
  auto field = std::shared_ptr<Field>(new Field(p, m, std::move(modulus)));
  field->build_tables();
  return field;
}

FieldPtr Field::of_order(std::uint64_t q, std::uint64_t max_order) {
  const auto [p, m] = prime_power_decompose(q);
  return make(p, m, max_order);
}

std::uint32_t Field::slow_add(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return (a + b) % p_;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    }
  }
  // modulus is monic: x^m = -(c_0 + ... + c_{m-1} x^{m-1})
  for (std::size_t top = prod.size(); top-- > m_;) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    prod[top] = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      prod[top - m_ + i] = (prod[top - m_ + i] + (p_ - modulus_[i]) * c) % p_;
    }
  }
  std::vector<std::uint32_t> low(prod.begin(), prod.begin() + m_);
  return from_digits(low);
}

void Field::build_tables() {
  const std::uint32_t n = q_ - 1;
  exp_.assign(n == 0 ? 1 : n, 1);
  log_.assign(q_, 0);
  if (q_ == 2) {
    generator_ = 1;
    return;
  }
  const auto factors = prime_factors(n);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint32_t cand = 2; cand < q_; ++cand) {
    bool ok = true;
    for (auto l : factors) {
      if (slow_pow(cand, n / l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = cand;
      break;
    }
  }
  if (generator_ == 0) throw AssertionFailure("no multiplicative generator found");
  std::uint32_t acc = 1;
  for (std::uint32_t t = 0; t < n; ++t) {
    exp_[t] = acc;
    log_[acc] = t;
    acc = slow_mul(acc, generator_);
  }
  if (acc != 1) throw AssertionFailure("generator order mismatch");
  minus_one_log_ = (p_ == 2) ? 0 : n / 2;
  if (m_ > 1) {
    one_plus_.resize(n);
    for (std::uint32_t t = 0; t < n; ++t) one_plus_[t] = slow_add(1, exp_[t]);
  }
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t n = q_ - 1;
  const std::uint32_t la = log_[a];
  const std::uint32_t lb = log_[b];
  const std::uint32_t t = lb >= la ? lb - la : lb + n - la;
  const std::uint32_t s = one_plus_[t];
  if (s == 0) return 0;
  const std::uint32_t e = la + log_[s];
  return exp_[e >= n ? e - n : e];
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (a == 0) return 0;
  if (m_ == 1) return p_ - a;
  if (p_ == 2) return a;
  const std::uint32_t n = q_ - 1;
  const std::uint32_t e = log_[a] + minus_one_log_;
  return exp_[e >= n ? e - n : e];
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  if (a == 0 || b == 0) return 0;
  const std::uint32_t n = q_ - 1;
  const std::uint32_t e = log_[a] + log_[b];
  return exp_[e >= n ? e - n : e];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  const std::uint32_t n = q_ - 1;
  if (n == 1) return 1;
  return exp_[(n - log_[a]) % n];
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const {
  if (b == 0) throw PreconditionError("division by zero");
  return mul(a, inv(b));
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  std::uint32_t result = 1;
  auto ue = static_cast<std::uint64_t>(e);
  while (ue > 0) {
    if (ue & 1) result = mul(result, a);
    a = mul(a, a);
    ue >>= 1;
  }
  return result;
}

std::uint32_t Field::log(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("logarithm of zero");
  return log_[a];
}

std::uint64_t Field::multiplicative_order(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("zero has no multiplicative order");
  const std::uint64_t n = q_ - 1;
  return n / std::gcd<std::uint64_t>(n, log_[a]);
}

std::vector<std::uint32_t> Field::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

std::uint32_t Field::from_digits(std::span<const std::uint32_t> ds) const {
  if (ds.size() > m_) throw PreconditionError("too many digits for " + describe());
  std::uint32_t out = 0;
  for (std::size_t i = ds.size(); i-- > 0;) {
    if (ds[i] >= p_) throw PreconditionError("digit out of range for " + describe());
    out = out * p_ + ds[i];
  }
  return out;
}

FieldElement Field::element(std::uint32_t value) const {
  if (value >= q_) {
    throw PreconditionError("value " + std::to_string(value) + " out of range for " + describe());
  }
  return FieldElement(shared_from_this(), value);
}

FieldElement Field::zero() const { return element(0); }
FieldElement Field::one() const { return element(1); }

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << "^" << m_;
  os << ")";
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, std::uint32_t value)
    : field_(std::move(field)), value_(value) {}

void FieldElement::check_same(const FieldElement& rhs) const {
  if (field_ != rhs.field_ && !(*field_ == *rhs.field_)) {
    throw FieldMismatch("operands in " + field_->describe() + " and " + rhs.field_->describe());
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->add(value_, rhs.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->sub(value_, rhs.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->mul(value_, rhs.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  check_same(rhs);
  return {field_, field_->div(value_, rhs.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

bool FieldElement::operator==(const FieldElement& rhs) const {
  return value_ == rhs.value_ && (field_ == rhs.field_ || *field_ == *rhs.field_);
}

std::uint32_t splitting_degree(std::uint64_t q, std::uint64_t n) {
  if (n == 0) throw PreconditionError("length must be positive");
  if (std::gcd(q, n) != 1) {
    throw PreconditionError("gcd(n, q) = " + std::to_string(std::gcd(q, n)) +
                            " != 1: no primitive " + std::to_string(n) + "-th root of unity");
  }
  const std::uint64_t base = q % n;
  std::uint64_t acc = base;
  std::uint32_t m = 1;
  while (acc % n != 1 % n) {
    acc = acc * base % n;
    ++m;
  }
  return m;
}

FieldElement primitive_nth_root(const FieldPtr& field, std::uint64_t n) {
  const std::uint64_t order = field->order() - 1;
  if (n == 0 || order % n != 0) {
    throw PreconditionError(std::to_string(n) + " does not divide " + std::to_string(order) +
                            " in " + field->describe());
  }
  return field->element(field->exp(order / n));
}

bool in_base_subfield(const FieldElement& a, std::uint64_t q) {
  std::uint64_t big = a.field()->order();
  if (q < 2) throw PreconditionError("base order must be at least 2");
  while (big % q == 0) big /= q;
  if (big != 1) {
    throw PreconditionError(a.field()->describe() + " is not an extension of a field of order " +
                            std::to_string(q));
  }
  return a.pow(static_cast<std::int64_t>(q)) == a;
}

SubfieldEmbedding::SubfieldEmbedding(FieldPtr base, FieldPtr extension)
    : base_(std::move(base)), extension_(std::move(extension)) {
  if (base_->characteristic() != extension_->characteristic() ||
      extension_->degree() % base_->degree() != 0) {
    throw PreconditionError(base_->describe() + " is not a subfield of " + extension_->describe());
  }
  const std::uint32_t q = base_->order();
  embed_.resize(q);
  if (base_->is_prime_field()) {
    for (std::uint32_t c = 0; c < q; ++c) embed_[c] = c;
  } else {
    const auto& f = base_->modulus();
    std::uint32_t root = 0;
    bool found = false;
    for (std::uint32_t v = 0; v < extension_->order() && !found; ++v) {
      std::uint32_t acc = 0;
      for (std::size_t i = f.size(); i-- > 0;) acc = extension_->add(extension_->mul(acc, v), f[i]);
      if (acc == 0) {
        root = v;
        found = true;
      }
    }
    if (!found) throw AssertionFailure("subfield modulus has no root in " + extension_->describe());
    for (std::uint32_t c = 0; c < q; ++c) {
      const auto ds = base_->digits(c);
      std::uint32_t acc = 0;
      for (std::size_t i = ds.size(); i-- > 0;) acc = extension_->add(extension_->mul(acc, root), ds[i]);
      embed_[c] = acc;
    }
  }
  project_.reserve(q);
  for (std::uint32_t c = 0; c < q; ++c) project_.emplace(embed_[c], c);
}

FieldElement SubfieldEmbedding::embed(const FieldElement& a) const {
  if (!(*a.field() == *base_)) throw FieldMismatch("element not in " + base_->describe());
  return extension_->element(embed_[a.value()]);
}

bool SubfieldEmbedding::contains(std::uint32_t ext_value) const {
  return project_.contains(ext_value);
}

std::uint32_t SubfieldEmbedding::project(std::uint32_t ext_value) const {
  const auto it = project_.find(ext_value);
  if (it == project_.end()) {
    throw AssertionFailure("element " + std::to_string(ext_value) + " of " +
                           extension_->describe() + " is not in the subfield " +
                           base_->describe());
  }
  return it->second;
}

FieldElement SubfieldEmbedding::project(const FieldElement& a) const {
  if (!(*a.field() == *extension_)) throw FieldMismatch("element not in " + extension_->describe());
  return base_->element(project(a.value()));
}

FieldElement project_to_base(const FieldElement& a, const FieldPtr& base) {
  if (!in_base_subfield(a, base->order())) {
    throw AssertionFailure("element is not fixed by the Frobenius map of " + base->describe());
  }
  return SubfieldEmbedding(base, a.field()).project(a);
}

SplittingField make_splitting_field(const FieldPtr& base, std::size_t n) {
  const std::uint32_t m = splitting_degree(base->order(), n);
  FieldPtr extension = m == 1 ? base : Field::make(base->characteristic(), base->degree() * m);
  SubfieldEmbedding embedding(base, extension);
  FieldElement beta = primitive_nth_root(extension, n);
  return {std::move(embedding), std::move(beta), n};
}

}  // namespace lrc
