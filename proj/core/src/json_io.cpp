#include "cuspcount/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cuspcount/error.hpp"

namespace cuspcount {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

unsigned as_unsigned(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(what + " must be a nonnegative integer");
  const auto v = j.get<unsigned long long>();
  if (v > 1'000'000) throw ParseError(what + " is too large");
  return static_cast<unsigned>(v);
}

BigInt as_bigint(const json& j, const std::string& what) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_bigint(j.get<std::string>());
    } catch (const Error&) {
    }
  }
  throw ParseError(what + " must be an integer or a decimal string");
}

GroupSpec spec_from(const json& j) {
  if (!j.is_object() || j.size() != 1) throw ParseError("group spec must be an object with one key, got " + j.dump());
  const std::string key = j.begin().key();
  const json& val = j.begin().value();
  GroupSpec spec;
  if (key == "GL") spec = GroupSpec::gl(as_unsigned(val, "GL rank"));
  else if (key == "SL") spec = GroupSpec::sl(as_unsigned(val, "SL rank"));
  else if (key == "U") spec = GroupSpec::unitary(as_unsigned(val, "U rank"));
  else if (key == "Sp") spec = GroupSpec::sp(as_unsigned(val, "Sp dimension"));
  else if (key == "SO") spec = GroupSpec::so(as_unsigned(val, "SO dimension"));
  else if (key == "Res") {
    if (!val.is_array() || val.size() != 2) throw ParseError("Res expects [degree, groupspec]");
    spec = GroupSpec::res(as_unsigned(val[0], "Res degree"), spec_from(val[1]));
  } else if (key == "Product") {
    if (!val.is_array()) throw ParseError("Product expects a list");
    std::vector<GroupSpec> factors;
    for (const auto& f : val) factors.push_back(spec_from(f));
    spec = GroupSpec::product(std::move(factors));
  } else {
    throw ParseError("unknown group kind '" + key + "'");
  }
  try {
    spec.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return spec;
}

json spec_to(const GroupSpec& s) {
  switch (s.kind) {
    case GroupSpec::Kind::GL: return {{"GL", s.param}};
    case GroupSpec::Kind::SL: return {{"SL", s.param}};
    case GroupSpec::Kind::U: return {{"U", s.param}};
    case GroupSpec::Kind::Sp: return {{"Sp", s.param}};
    case GroupSpec::Kind::SO: return {{"SO", s.param}};
    case GroupSpec::Kind::Res: return {{"Res", json::array({s.param, spec_to(s.children.at(0))})}};
    case GroupSpec::Kind::Product: {
      json list = json::array();
      for (const auto& c : s.children) list.push_back(spec_to(c));
      return {{"Product", list}};
    }
  }
  return nullptr;
}

std::vector<unsigned> degrees_from(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be a list");
  std::vector<unsigned> out;
  for (const auto& d : j) out.push_back(as_unsigned(d, what + " entry"));
  return out;
}

json terms_json(const SymPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json e = json::array();
    for (std::size_t i = 0; i < p.arity(); ++i) e.push_back(m[i]);
    terms.push_back({{"coeff", to_string(c)}, {"exponents", e}});
  }
  return terms;
}

json poly_json(const SymPoly& p) {
  return {{"variables", p.variables()}, {"terms", terms_json(p)}, {"text", p.to_string()}};
}

}  // namespace

GroupSpec group_spec_from_json(const std::string& text) { return spec_from(parse(text)); }

std::string group_spec_to_json(const GroupSpec& spec) { return spec_to(spec).dump(); }

CurveDatum curve_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) throw ParseError("curve datum must be a JSON object");
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "q" && key != "weil_numerator" && key != "s_degrees" && key != "t_degrees")
      throw ParseError("unknown curve field '" + key + "'");
  }
  if (!j.contains("q")) throw ParseError("curve datum needs q");
  if (!j.contains("s_degrees")) throw ParseError("curve datum needs s_degrees");
  CurveDatum c;
  if (!j["q"].is_number_integer() || j["q"].get<long long>() < 2) throw ParseError("q must be an integer >= 2");
  c.q = j["q"].get<std::uint64_t>();
  if (j.contains("weil_numerator")) {
    if (!j["weil_numerator"].is_array()) throw ParseError("weil_numerator must be a list");
    std::vector<BigInt> coeffs;
    for (const auto& x : j["weil_numerator"]) coeffs.push_back(as_bigint(x, "weil_numerator coefficient"));
    c.weil_numerator = IntPoly(std::move(coeffs));
  }
  c.s_degrees = degrees_from(j["s_degrees"], "s_degrees");
  if (j.contains("t_degrees")) c.t_degrees = degrees_from(j["t_degrees"], "t_degrees");
  try {
    c.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid curve datum: ") + e.what());
  }
  return c;
}

std::string curve_to_json(const CurveDatum& c) {
  json coeffs = json::array();
  for (const auto& x : c.weil_numerator.coeffs()) {
    if (x.fits_slong_p())
      coeffs.push_back(x.get_si());
    else
      coeffs.push_back(to_string(x));
  }
  return json{{"q", c.q}, {"weil_numerator", coeffs}, {"s_degrees", c.s_degrees}, {"t_degrees", c.t_degrees}}.dump();
}

GroupSpec parse_group_option(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("group must look like SL:4 or Sp:6, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string num = text.substr(colon + 1);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 6)
    throw ParseError("bad group parameter in '" + text + "'");
  return spec_from(json{{kind, std::stoul(num)}});
}

std::string load_json_argument(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot read '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string certificate_to_json(const SymbolicCertificate& cert) {
  json checks = json::array();
  for (const auto& ch : cert.checks) checks.push_back({{"label", ch.label}, {"pass", ch.passed}, {"witness", ch.witness}});
  json out{{"family", cert.family},
           {"group", spec_to(cert.group)},
           {"j_arity", cert.j_arity},
           {"materialized", cert.materialized},
           {"polynomial", poly_json(cert.polynomial)},
           {"checks", checks},
           {"all_passed", cert.all_passed()}};
  if (cert.modulus > 0) {
    json forms = json::array();
    for (const auto& [label, p] : cert.forms) forms.push_back({{"when", label}, {"polynomial", poly_json(p)}});
    out["modulus"] = cert.modulus;
    out["forms"] = forms;
  }
  return out.dump(2);
}

std::string lefschetz_to_json(const LefschetzFunction& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) terms.push_back({{"coeff", t.coeff.to_string()}, {"base", t.base.to_string()}});
  return json{{"terms", terms}, {"text", f.to_string()}}.dump(2);
}

std::string sym_poly_to_json(const SymPoly& p) { return poly_json(p).dump(2); }

}  // namespace cuspcount
