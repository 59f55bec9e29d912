#include "goldman/io.hpp"

#include <cctype>
#include <cstdint>
#include <string>

namespace goldman {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::int64_t parse_integer(const std::string& raw, const std::string& context) {
  const std::string s = trimmed(raw);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size() || s.empty()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("malformed integer '" + raw + "' in " + context);
  }
}

LoopClass parse_torus_pair(const std::string& text) {
  const std::string s = trimmed(text);
  const auto comma = s.find(',');
  if (s.size() < 5 || s.front() != '(' || s.back() != ')' || comma == std::string::npos)
    throw InputError("malformed torus class '" + text + "', expected \"(p,q)\"");
  const std::int64_t p = parse_integer(s.substr(1, comma - 1), "'" + text + "'");
  const std::int64_t q = parse_integer(s.substr(comma + 1, s.size() - comma - 2), "'" + text + "'");
  return LoopClass::torus(p, q);
}

LoopClass trivial_class(int genus) {
  if (genus == 1) return LoopClass::torus(0, 0);
  return LoopClass{genus, 0, 0, CyclicWord{genus, {}}};
}

const Json& require_field(const Json& j, const char* key, const std::string& context) {
  if (!j.is_object()) throw InputError(context + " must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(context + " is missing field '" + key + "'");
  return *it;
}

int read_genus(const Json& j, const std::string& context) {
  const Json& g = require_field(j, "genus", context);
  if (!g.is_number_integer())
    throw InputError(context + " field 'genus' must be an integer");
  const int genus = g.get<int>();
  if (genus < 1) throw InputError(context + " genus must be at least 1");
  return genus;
}

std::string read_string(const Json& j, const char* key, const std::string& context) {
  const Json& v = require_field(j, key, context);
  if (!v.is_string()) throw InputError(context + " field '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

std::string class_to_token(const LoopClass& c) { return c.to_string(); }

LoopClass token_to_class(const std::string& text, int genus) {
  if (genus < 1) throw InputError("genus must be at least 1, got " + std::to_string(genus));
  const std::string s = trimmed(text);
  if (!s.empty() && s.front() == '(') {
    if (genus != 1) throw InputError("pair syntax '" + text + "' is only valid at genus 1");
    return parse_torus_pair(s);
  }
  return conjugacy_canonical(parse_word(s, genus), Presentation::standard(genus));
}

Json formal_sum_to_json(const FormalSum& s) {
  Json terms = Json::array();
  for (const auto& [cls, coeff] : s.terms)
    terms.push_back(Json{{"coeff", rational_to_string(coeff)}, {"class", class_to_token(cls)}});
  return Json{{"genus", s.genus}, {"terms", std::move(terms)}};
}

FormalSum formal_sum_from_json(const Json& j) {
  const int genus = read_genus(j, "formal sum");
  const Json& terms = require_field(j, "terms", "formal sum");
  if (!terms.is_array()) throw InputError("formal sum field 'terms' must be an array");
  FormalSum s = FormalSum::zero(genus);
  for (const Json& t : terms) {
    const std::string coeff = read_string(t, "coeff", "formal sum term");
    const std::string cls = read_string(t, "class", "formal sum term");
    s.add(token_to_class(cls, genus), parse_rational(coeff));
  }
  return s;
}

Json bv_element_to_json(const BVElement& e) {
  Json alpha = Json::array();
  for (const auto& c : e.h1_alpha.coords) alpha.push_back(rational_to_string(c));
  return Json{{"genus", e.genus},
              {"h0", rational_to_string(e.h0)},
              {"h1", Json{{"alpha", std::move(alpha)}, {"loops", formal_sum_to_json(e.h1_loops)}}},
              {"h2", formal_sum_to_json(e.h2)}};
}

BVElement bv_element_from_json(const Json& j) {
  const int genus = read_genus(j, "element");
  BVElement e = BVElement::zero(genus);
  e.h0 = parse_rational(read_string(j, "h0", "element"));

  const Json& h1 = require_field(j, "h1", "element");
  const Json& alpha = require_field(h1, "alpha", "element h1");
  if (!alpha.is_array() || alpha.size() != static_cast<std::size_t>(2 * genus))
    throw InputError("element h1 field 'alpha' must be an array of " +
                     std::to_string(2 * genus) + " rationals");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!alpha[i].is_string()) throw InputError("element h1 alpha entries must be strings");
    e.h1_alpha.coords[i] = parse_rational(alpha[i].get<std::string>());
  }
  e.h1_loops = formal_sum_from_json(require_field(h1, "loops", "element h1"));
  if (e.h1_loops.genus != genus) throw InputError("element h1 loops genus mismatch");
  if (e.h1_loops.coeff(trivial_class(genus)) != 0)
    throw InputError("element h1 loops must have zero coefficient on the trivial class");

  e.h2 = formal_sum_from_json(require_field(j, "h2", "element"));
  if (e.h2.genus != genus) throw InputError("element h2 genus mismatch");
  return e;
}

Json axiom_report_to_json(const AxiomReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"passed", c.passed},
                          {"samples", c.samples},
                          {"counterexample", c.counterexample}});
  return Json{{"genus", r.genus},
              {"signs", r.signs.to_string()},
              {"seed", r.seed},
              {"samples", r.samples},
              {"max_class_length", r.max_class_length},
              {"all_passed", r.all_passed()},
              {"checks", std::move(checks)}};
}

Json sign_search_to_json(const SignSearchResult& r) {
  Json passing = Json::array();
  for (const auto& sc : r.passing) passing.push_back(sc.to_string());
  Json reports = Json::array();
  for (const auto& rep : r.reports) reports.push_back(axiom_report_to_json(rep));
  return Json{{"passing", std::move(passing)},
              {"selected", r.selected.to_string()},
              {"reports", std::move(reports)}};
}

SignConfig parse_sign_config(const std::string& text) {
  std::string body;
  for (const char ch : text) {
    if (ch == '(' || ch == ')' || ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
      continue;
    body += ch;
  }
  if (body.size() != 4 || body.find_first_not_of("+-") != std::string::npos)
    throw InputError("malformed sign config '" + text + "', expected four signs like (+,+,-,+)");
  const auto v = [&](int i) { return body[static_cast<std::size_t>(i)] == '+' ? 1 : -1; };
  return SignConfig{v(0), v(1), v(2), v(3)};
}

}  // namespace goldman
