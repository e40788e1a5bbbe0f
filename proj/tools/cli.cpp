#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "cuspcount/acceptance.hpp"
#include "cuspcount/census.hpp"
#include "cuspcount/classsum.hpp"
#include "cuspcount/classtypes.hpp"
#include "cuspcount/error.hpp"
#include "cuspcount/finite_field.hpp"
#include "cuspcount/json_io.hpp"
#include "cuspcount/lefschetz.hpp"
#include "cuspcount/lfun.hpp"
#include "cuspcount/motive.hpp"

namespace cuspcount::cli {
namespace {

using nlohmann::json;

struct CertificateParams {
  std::string family;
  std::string params;
  unsigned ell = 0;
  unsigned n = 0;
  unsigned r = 0;
  unsigned n_prime = 1;
  unsigned d_prime = 1;
  std::string parity;
  unsigned max_arity = kDefaultMaxArity;
};

void apply_params_json(CertificateParams& p) {
  if (p.params.empty()) return;
  json j;
  try {
    j = json::parse(load_json_argument(p.params));
  } catch (const json::exception& e) {
    throw ParseError(std::string("--params: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("--params must be a JSON object");
  auto get = [&](const char* key, unsigned& dst) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_unsigned()) throw ParseError(std::string("--params: ") + key + " must be a nonnegative integer");
    dst = j[key].get<unsigned>();
  };
  for (const auto& [key, value] : j.items()) {
    static const std::vector<std::string> known{"ell", "n", "r", "n_prime", "d_prime", "parity", "max_arity"};
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError("--params: unknown key " + key);
  }
  get("ell", p.ell);
  get("n", p.n);
  get("r", p.r);
  get("n_prime", p.n_prime);
  get("d_prime", p.d_prime);
  get("max_arity", p.max_arity);
  if (j.contains("parity")) {
    if (!j["parity"].is_string()) throw ParseError("--params: parity must be \"odd\" or \"even\"");
    p.parity = j["parity"].get<std::string>();
  }
}

Parity parse_parity(const std::string& s) {
  if (s == "odd") return Parity::Odd;
  if (s == "even") return Parity::Even;
  throw ParseError("parity must be odd or even, got '" + s + "'");
}

int certificate_command(CertificateParams p, std::ostream& out) {
  apply_params_json(p);
  SymbolicCertificate cert;
  if (p.family == "sl-prime") {
    cert = sl_prime_certificate(p.ell, p.r, p.max_arity);
  } else if (p.family == "sl-general") {
    cert = sl_script_p(p.n, p.r, p.n_prime, p.d_prime, p.max_arity);
  } else if (p.family == "sp") {
    cert = sp_certificate(p.n, parse_parity(p.parity), p.r, p.max_arity);
  } else {
    throw ParseError("unknown certificate family '" + p.family + "'");
  }
  out << certificate_to_json(cert) << "\n";
  return cert.all_passed() ? 0 : 1;
}

LefschetzFunction parse_function(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("function must look like chi:2, const:2 or power:3");
  const std::string kind = text.substr(0, colon);
  long v = 0;
  try {
    std::size_t used = 0;
    v = std::stol(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw ParseError("bad number in '" + text + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad number in '" + text + "'");
  }
  if (kind == "chi") {
    if (v <= 0) throw ParseError("chi needs a positive index");
    return LefschetzFunction::chi(static_cast<unsigned>(v));
  }
  if (kind == "const") return LefschetzFunction::constant(v);
  if (kind == "power") return LefschetzFunction::power(v);
  throw ParseError("unknown function kind '" + kind + "'");
}

struct LefschetzParams {
  std::string op;
  std::string function = "chi:2";
  unsigned n = 1;
  std::vector<unsigned> degrees;
  unsigned eval_up_to = 0;
};

int lefschetz_command(const LefschetzParams& p, std::ostream& out) {
  LefschetzFunction f;
  TransformStats stats;
  if (p.op == "chi") {
    f = LefschetzFunction::chi(p.n);
  } else if (p.op == "fN") {
    f = f_N_transform(parse_function(p.function), p.n, &stats);
  } else if (p.op == "place-product") {
    if (p.degrees.empty()) throw ParseError("place-product needs --degrees");
    f = place_product(parse_function(p.function), p.degrees, &stats);
  } else {
    throw ParseError("unknown op '" + p.op + "'");
  }
  json j = json::parse(lefschetz_to_json(f));
  j["exact_divisions"] = stats.exact_divisions;
  if (p.eval_up_to > 0) {
    json values = json::array();
    for (unsigned m = 1; m <= p.eval_up_to; ++m) values.push_back(f.evaluate(m).to_string());
    j["values"] = values;
  }
  out << j.dump(2) << "\n";
  return 0;
}

int census_command(const std::string& group, std::uint64_t q, bool include_gl, std::uint64_t budget,
                   std::ostream& out) {
  const GroupSpec spec = parse_group_option(group);
  const oracle::FiniteField f = oracle::FiniteField::of_order(q);
  out << "type,count\n";
  // Every type of the classification is listed, with 0 when no class of
  // that type exists over F_q.
  if (spec.kind == GroupSpec::Kind::SL) {
    const auto census = oracle::sl_census(spec.param, f, budget);
    for (const auto& type : enumerate_sl_types(spec.param)) {
      const auto it = census.find(type);
      out << type.label() << "," << (it == census.end() ? 0 : it->second) << "\n";
    }
    return 0;
  }
  if (spec.kind == GroupSpec::Kind::Sp) {
    const unsigned n = spec.param / 2;
    const auto census = oracle::sp_census(n, f, budget);
    for (const auto& type : enumerate_sp_types(n, parity_of(q), include_gl)) {
      const auto it = census.find(type);
      out << type.label() << "," << (it == census.end() ? 0 : it->second) << "\n";
    }
    return 0;
  }
  throw PreconditionError("census supports SL:n and Sp:2n, got " + group);
}

int verify_command(const std::string& suite, std::ostream& out) {
  bool ok = true;
  for (int id : criteria_for_suite(suite)) {
    const CriterionResult r = run_criterion(id);
    out << format_result(r) << "\n";
    out.flush();
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

CurveDatum load_curve(const std::string& arg, std::optional<std::uint64_t> q) {
  CurveDatum c = curve_from_json(load_json_argument(arg));
  if (q) c.q = *q;
  c.validate();
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact class sums, L-values and certificates for SL_n and Sp_2n over function fields", "cuspcount"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string spec_arg, curve_arg, group, suite = "all";
  std::optional<std::uint64_t> q;
  unsigned base_change_m = 1;
  bool expanded = false, show_z = false, include_gl = false;
  std::uint64_t census_q = 0;
  std::uint64_t budget = 1'000'000;

  auto* motive = app.add_subcommand("motive", "Print det(1 - t Fr | M_G)");
  motive->add_option("group", spec_arg, "GroupSpec JSON (inline or file)")->required();
  motive->add_flag("--expanded", expanded, "Print the expanded polynomial in t, q");

  auto* lfun = app.add_subcommand("lfun", "Print L_{S,T}(M_G) for a curve datum");
  lfun->add_option("curve", curve_arg, "curve JSON (inline or file)")->required();
  lfun->add_option("group", spec_arg, "GroupSpec JSON (inline or file)")->required();
  lfun->add_option("--q", q, "override the field size of the curve datum");
  lfun->add_flag("--z", show_z, "Also print Z(x, J)");

  auto* class_sum_cmd = app.add_subcommand("class-sum", "Sum of L_S over semisimple classes");
  class_sum_cmd->add_option("curve", curve_arg, "curve JSON (inline or file)")->required();
  class_sum_cmd->add_option("--group", group, "SL:n or Sp:2n")->required();
  class_sum_cmd->add_option("--q", q, "override the field size of the curve datum");
  class_sum_cmd->add_option("--base-change", base_change_m, "evaluate over F_{q^m}")->check(CLI::PositiveNumber);

  CertificateParams cp;
  auto* cert = app.add_subcommand("certificate", "Build and check a symbolic certificate (JSON)");
  cert->add_option("--family", cp.family, "sl-prime, sl-general or sp")
      ->required()
      ->check(CLI::IsMember({"sl-prime", "sl-general", "sp"}));
  cert->add_option("--params", cp.params, "JSON object with ell, n, r, n_prime, d_prime, parity, max_arity");
  cert->add_option("--ell", cp.ell, "prime l (sl-prime)");
  cert->add_option("--n", cp.n, "n of SL_n or Sp_2n");
  cert->add_option("--r", cp.r, "number of eigenvalue variables");
  cert->add_option("--n-prime", cp.n_prime, "n' (sl-general)");
  cert->add_option("--d-prime", cp.d_prime, "d' (sl-general)");
  cert->add_option("--parity", cp.parity, "odd or even (sp)");
  cert->add_option("--max-arity", cp.max_arity, "largest r accepted");

  auto* census = app.add_subcommand("census", "Oracle census of semisimple types (CSV)");
  census->add_option("--group", group, "SL:n or Sp:2n")->required();
  census->add_option("--q", census_q, "field size")->required();
  census->add_flag("--include-gl", include_gl, "Keep Sp types with general-linear blocks");
  census->add_option("--budget", budget, "largest number of polynomials to enumerate");

  LefschetzParams lp;
  auto* lef = app.add_subcommand("lefschetz", "Lefschetz-type function algebra");
  lef->add_option("--op", lp.op, "chi, fN or place-product")->required()->check(CLI::IsMember({"chi", "fN", "place-product"}));
  lef->add_option("--f", lp.function, "input function: chi:n, const:c or power:b");
  lef->add_option("--n,-N", lp.n, "index of chi or N of f_N")->check(CLI::PositiveNumber);
  lef->add_option("--degrees", lp.degrees, "place degrees for place-product")->delimiter(',');
  lef->add_option("--eval", lp.eval_up_to, "also print f(1..m)");

  auto* verify = app.add_subcommand("verify", "Run the acceptance battery");
  verify->add_option("--suite", suite, "all, tables or identities")->check(CLI::IsMember({"all", "tables", "identities"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*motive) {
      const ArtinTateMotive m = motive_of(group_spec_from_json(load_json_argument(spec_arg)));
      out << (expanded ? frobenius_det(m).to_string() : format_frobenius_det(m)) << "\n";
      return 0;
    }
    if (*lfun) {
      const CurveDatum c = load_curve(curve_arg, q);
      const ArtinTateMotive m = motive_of(group_spec_from_json(load_json_argument(spec_arg)));
      out << to_string(l_value(m, c)) << "\n";
      if (show_z) {
        const ZPolynomial z = z_polynomial(m, c);
        out << "Z = " << z.value.to_string() << " (" << z.label() << ")\n";
      }
      return 0;
    }
    if (*class_sum_cmd) {
      const CurveDatum c = base_change(load_curve(curve_arg, q), base_change_m);
      out << to_string(class_sum(parse_group_option(group), c)) << "\n";
      return 0;
    }
    if (*cert) return certificate_command(cp, out);
    if (*census) return census_command(group, census_q, include_gl, budget, out);
    if (*lef) return lefschetz_command(lp, out);
    if (*verify) return verify_command(suite, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CertificateFailure& e) {
    err << "certificate failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cuspcount::cli
