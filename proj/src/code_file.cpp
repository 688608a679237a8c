#include "lrc/code_file.hpp"

#include <fstream>
#include <sstream>

namespace lrc {
namespace {

using nlohmann::ordered_json;

const ordered_json& require_key(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t require_uint(const ordered_json& j, const char* key) {
  const auto& v = require_key(j, key);
  if (!v.is_number_unsigned()) throw FormatError(std::string("field \"") + key + "\" must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::vector<std::uint32_t> require_digits(const ordered_json& j, const char* key) {
  const auto& v = require_key(j, key);
  if (!v.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array");
  std::vector<std::uint32_t> out;
  for (const auto& d : v) {
    if (!d.is_number_unsigned()) throw FormatError(std::string("field \"") + key + "\" holds a non-integer");
    out.push_back(d.get<std::uint32_t>());
  }
  return out;
}

ordered_json poly_to_json(const Polynomial& p) {
  ordered_json arr = ordered_json::array();
  for (auto c : p.coefficients()) arr.push_back(element_to_json(*p.field(), c));
  return arr;
}

Polynomial poly_from_json(const FieldPtr& field, const ordered_json& j, const char* key) {
  const auto& v = require_key(j, key);
  if (!v.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array");
  std::vector<std::uint32_t> coeffs;
  for (const auto& c : v) coeffs.push_back(element_from_json(*field, c));
  return Polynomial(field, std::move(coeffs));
}

FieldPtr field_from_json(const ordered_json& j, std::vector<std::string>& violations) {
  const auto p = require_uint(j, "p");
  const auto m = require_uint(j, "m");
  if (p > UINT32_MAX || m > 64) throw FormatError("field parameters out of range");
  FieldPtr field;
  try {
    field = Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
  } catch (const Error& e) {
    throw FormatError(std::string("unsupported field: ") + e.what());
  }
  if (require_digits(j, "modulus") != field->modulus()) {
    violations.push_back("stored modulus of " + field->describe() + " is not the canonical one");
  }
  return field;
}

}  // namespace

ordered_json element_to_json(const Field& field, std::uint32_t value) {
  if (field.is_prime_field()) return value;
  return field.digits(value);
}

std::uint32_t element_from_json(const Field& field, const ordered_json& j) {
  try {
    if (j.is_number_unsigned()) {
      const auto v = j.get<std::uint64_t>();
      if (v >= field.order()) throw FormatError("element " + std::to_string(v) + " out of range");
      return static_cast<std::uint32_t>(v);
    }
    if (j.is_array()) {
      const auto ds = j.get<std::vector<std::uint32_t>>();
      return field.from_digits(ds);
    }
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("bad element encoding: ") + e.what());
  }
  throw FormatError("bad element encoding");
}

ordered_json field_to_json(const Field& field) {
  return {{"p", field.characteristic()}, {"m", field.degree()}, {"modulus", field.modulus()}};
}

ordered_json to_json(const LrcCode& code) {
  const CyclicCode& base = code.base;
  const Field& f = *base.field();
  ordered_json j;
  j["schema_version"] = kCodeFileSchemaVersion;
  j["scheme"] = std::string(scheme_name(code.scheme()));
  j["q"] = f.order();
  j["p"] = f.characteristic();
  j["m"] = f.degree();
  j["modulus"] = f.modulus();
  j["n"] = base.n();
  j["k"] = base.k();
  j["r"] = code.r;
  j["d_claimed"] = code.d_claimed;
  j["g"] = poly_to_json(base.generator());
  j["h"] = poly_to_json(base.parity());
  j["dual_g"] = poly_to_json(base.dual_generator());
  const auto& beta = code.provenance.beta;
  j["beta"] = {{"field", field_to_json(*beta.field())},
               {"value", element_to_json(*beta.field(), beta.value())}};
  if (code.provenance.alpha) j["alpha"] = element_to_json(f, code.provenance.alpha->value());
  if (code.provenance.gamma) j["gamma"] = element_to_json(f, code.provenance.gamma->value());
  return j;
}

std::string save_code(const LrcCode& code) { return to_json(code).dump(2) + "\n"; }

LoadedCode load_code(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("code file must be a JSON object");

  LoadedCode out;
  auto& violations = out.violations;
  if (require_uint(j, "schema_version") != kCodeFileSchemaVersion) {
    throw FormatError("unsupported schema_version");
  }
  const auto& scheme_j = require_key(j, "scheme");
  if (!scheme_j.is_string()) throw FormatError("field \"scheme\" must be a string");
  const auto scheme = parse_scheme(scheme_j.get<std::string>());
  if (!scheme) throw FormatError("unknown scheme \"" + scheme_j.get<std::string>() + "\"");

  FieldPtr field = field_from_json(j, violations);
  if (require_uint(j, "q") != field->order()) violations.push_back("q disagrees with p^m");
  const auto n = require_uint(j, "n");
  const auto k = require_uint(j, "k");
  const auto r = require_uint(j, "r");
  const auto d_claimed = require_uint(j, "d_claimed");

  const Polynomial g = poly_from_json(field, j, "g");
  const Polynomial h = poly_from_json(field, j, "h");
  const Polynomial dual_g = poly_from_json(field, j, "dual_g");

  const auto& beta_j = require_key(j, "beta");
  FieldPtr split = field_from_json(require_key(beta_j, "field"), violations);
  const FieldElement beta = split->element(element_from_json(*split, require_key(beta_j, "value")));
  std::optional<FieldElement> alpha;
  std::optional<FieldElement> gamma;
  if (j.contains("alpha")) alpha = field->element(element_from_json(*field, j.at("alpha")));
  if (j.contains("gamma")) gamma = field->element(element_from_json(*field, j.at("gamma")));

  std::optional<CyclicCode> base;
  try {
    base = CyclicCode::make(field, n, g);
  } catch (const Error& e) {
    violations.push_back(std::string("g does not generate a cyclic code: ") + e.what());
    return out;
  }
  if (base->k() != k) violations.push_back("stored k = " + std::to_string(k) + " but n - deg g = " + std::to_string(base->k()));
  if (!(base->parity() == h)) violations.push_back("stored h differs from (x^n - 1)/g");
  if (!(base->dual_generator() == dual_g)) violations.push_back("stored dual_g differs from the monic reciprocal of h");

  ConstructionParams params{*scheme, field->order(), n, r, std::nullopt};
  if (scheme_takes_distance(*scheme)) params.d = d_claimed;
  out.code = LrcCode{std::move(*base), r, d_claimed, params, Provenance{beta, alpha, gamma}};
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

}  // namespace lrc
