#include <json.hpp>

#include "cff/errors.hpp"
#include "cff/hypercube.hpp"

namespace cff {

namespace {

using nlohmann::json;

Natural integer_field(const json& j, const char* what, bool allow_negative) {
  Natural v;
  if (j.is_number_unsigned()) {
    v = Natural(std::to_string(j.get<std::uint64_t>()), 10);
  } else if (j.is_number_integer()) {
    v = Natural(std::to_string(j.get<std::int64_t>()), 10);
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    const bool neg = !s.empty() && s[0] == '-';
    v = parse_natural(neg ? std::string_view(s).substr(1) : std::string_view(s));
    if (neg) v = -v;
  } else {
    throw DomainError(std::string(what) + " must be an integer or a decimal string");
  }
  if (!allow_negative && sgn(v) < 0) throw DomainError(std::string(what) + " must be natural");
  return v;
}

std::uint64_t small_field(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw DomainError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

json big_json(const Natural& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str(10);
}

}  // namespace

HypercubeSpec spec_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("hypercube spec must be a JSON object");
  for (const char* key : {"k", "t", "u", "monomials"})
    if (!j.contains(key)) throw DomainError(std::string("hypercube spec is missing '") + key + "'");

  HypercubeSpec spec;
  spec.k = static_cast<unsigned>(small_field(j["k"], "k"));
  spec.t = small_field(j["t"], "t");
  spec.u = small_field(j["u"], "u");
  spec.c0 = j.contains("c0") ? integer_field(j["c0"], "c0", false) : Natural(0);
  if (!j["monomials"].is_array()) throw DomainError("'monomials' must be an array");
  for (const auto& m : j["monomials"]) {
    if (!m.is_object() || !m.contains("c") || !m.contains("v") || !m.contains("r"))
      throw DomainError("each monomial needs c, v and r");
    Monomial mono;
    mono.c = integer_field(m["c"], "c", true);
    for (const auto& v : m["v"]) mono.v.push_back(integer_field(v, "v", false));
    for (const auto& r : m["r"]) mono.r.push_back(small_field(r, "r"));
    spec.monomials.push_back(std::move(mono));
  }
  check_shape(spec);
  return spec;
}

std::string spec_to_json(const HypercubeSpec& spec) {
  json j;
  j["k"] = spec.k;
  j["t"] = spec.t;
  j["u"] = spec.u;
  j["c0"] = big_json(spec.c0);
  j["monomials"] = json::array();
  for (const auto& m : spec.monomials) {
    json jm;
    jm["c"] = big_json(m.c);
    jm["v"] = json::array();
    for (const auto& v : m.v) jm["v"].push_back(big_json(v));
    jm["r"] = m.r;
    j["monomials"].push_back(std::move(jm));
  }
  return j.dump();
}

}  // namespace cff
