#include "cuspcount/classsum.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "cuspcount/cyclotomic.hpp"
#include "cuspcount/error.hpp"
#include "cuspcount/lfun.hpp"
#include "cuspcount/number_theory.hpp"
#include "cuspcount/root_reduction.hpp"
#include "cuspcount/table_goldens.hpp"

namespace cuspcount {
namespace {

SymPoly x_poly(const std::vector<std::string>& vars, const IntPoly& p) { return SymPoly::from_univariate(vars, 0, p); }

SymPoly alpha(const std::vector<std::string>& vars, unsigned i) { return SymPoly::variable(vars, vars[i + 1]); }

// det(1 - t Fr | M) in (t, q) placed as (a_i, x).
SymPoly lift_det(const SymPoly& det, const std::vector<std::string>& vars, unsigned i) {
  std::vector<SymPoly::Term> terms;
  for (const auto& [m, c] : det.terms()) {
    Monomial out{};
    out[0] = m[1];
    out[i + 1] = m[0];
    terms.emplace_back(out, c);
  }
  return SymPoly::from_terms(vars, std::move(terms));
}

// One-variable rational function re-expressed in "x".
RationalFunction in_x(const RationalFunction& f) {
  const std::vector<std::string> vars{"x"};
  return RationalFunction(x_poly(vars, f.numerator().to_univariate(0)), x_poly(vars, f.denominator().to_univariate(0)));
}

std::string shorten(std::string s, std::size_t limit = 160) {
  if (s.size() > limit) s = s.substr(0, limit) + " ...";
  return s;
}

void add_check(SymbolicCertificate& cert, std::string label, bool pass, std::string witness) {
  cert.checks.push_back({std::move(label), pass, std::move(witness)});
}

void throw_on_failure(const SymbolicCertificate& cert) {
  std::string failed;
  for (const auto& ch : cert.checks)
    if (!ch.passed) failed += (failed.empty() ? "" : "; ") + ch.label;
  if (!failed.empty()) throw CertificateFailure(cert.family + " certificate failed: " + failed);
}

void require_arity(unsigned r, unsigned max_arity) {
  if (r > max_arity)
    throw PreconditionError("j_arity " + std::to_string(r) + " exceeds the cap " + std::to_string(max_arity));
  if (r + 1 > kMaxVars) throw PreconditionError("too many variables");
}

SymPoly remainder_x(const SymPoly& p, const IntPoly& modulus) {
  return divrem(p, x_poly(p.variables(), modulus), 0).remainder;
}

IntPoly one_plus_x_power(unsigned k) { return pow(IntPoly{1, 1}, k); }

IntPoly geometric(unsigned len) {
  std::vector<BigInt> c(len, BigInt(1));
  return IntPoly(std::move(c));
}

}  // namespace

std::vector<std::string> certificate_variables(unsigned r) {
  std::vector<std::string> vars{"x"};
  for (auto& a : indexed_names("a", r)) vars.push_back(a);
  return vars;
}

SymPoly centralizer_h(const ArtinTateMotive& m, unsigned r) {
  const auto vars = certificate_variables(r);
  const SymPoly det = frobenius_det(m);
  SymPoly h = SymPoly::constant(vars, 1);
  for (unsigned i = 0; i < r; ++i) h *= lift_det(det, vars, i);
  return h;
}

BigRational class_sum(const GroupSpec& spec, const CurveDatum& c) {
  c.validate();
  if (!c.t_degrees.empty()) throw PreconditionError("class_sum needs T empty");
  if (c.s_degrees.size() < 2) throw PreconditionError("class_sum needs |S| >= 2");
  BigRational total = 0;
  if (spec.kind == GroupSpec::Kind::SL) {
    const unsigned n = spec.param;
    for (const auto& t : enumerate_sl_types(n)) {
      const ArtinTateMotive m = centralizer_motive(t);
      if (ratio_from_motive(m).is_zero()) continue;
      if (t.r() != 1) throw Error("no class count for SL type " + t.label());
      total += BigRational(count_sl(n, t.pairs[0].first, c.q)) * l_value(m, c);
    }
    return total;
  }
  if (spec.kind == GroupSpec::Kind::Sp) {
    const unsigned n = spec.param / 2;
    for (const auto& t : enumerate_sp_types(n, parity_of(c.q), true)) {
      const ArtinTateMotive m = centralizer_motive(t);
      if (ratio_from_motive(m).is_zero()) continue;
      const BigInt count = count_sp(t, c.q);
      if (count == 0) continue;
      total += BigRational(count) * l_value(m, c);
    }
    return total;
  }
  throw PreconditionError("class_sum supports SL_n and Sp_2n, got " + spec.to_string());
}

bool verify_sum_identity(const GroupSpec& spec, std::uint64_t q) {
  return class_sum(spec, projective_line(q, {1, 1})) == 1;
}

bool SymbolicCertificate::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck& ch) { return ch.passed; });
}

BigRational evaluate_at_datum(const SymPoly& p, const CurveDatum& c) {
  if (p.arity() == 0 || p.variables()[0] != "x") throw PreconditionError("expected a polynomial in x, a1..ar");
  const unsigned r = static_cast<unsigned>(p.arity() - 1);
  const IntPoly j = j_polynomial(c);
  if (j.degree() != static_cast<int>(r))
    throw PreconditionError("datum has " + std::to_string(j.degree()) + " eigenvalues in J, polynomial expects " +
                            std::to_string(r));
  std::vector<RootGroup> groups;
  if (r > 0) groups.push_back({indexed_names("a", r), j});
  return eval_at_roots(p, groups, {{"x", BigRational(BigInt(static_cast<unsigned long>(c.q)))}});
}

BigRational SymbolicCertificate::evaluate(const CurveDatum& c) const {
  if (modulus > 0) return evaluate_at_datum(c.q % modulus == 1 ? forms.at(0).second : forms.at(1).second, c);
  if (!materialized) throw PreconditionError("certificate polynomial was not expanded");
  return evaluate_at_datum(polynomial, c);
}

// ---- SL_l ----

SymbolicCertificate sl_prime_certificate(unsigned ell, unsigned r, unsigned max_arity) {
  if (!is_prime(ell)) throw PreconditionError("sl_prime_certificate needs a prime, got " + std::to_string(ell));
  require_arity(r, max_arity);
  const auto vars = certificate_variables(r);
  SymbolicCertificate cert;
  cert.family = "sl-prime";
  cert.group = GroupSpec::sl(ell);
  cert.j_arity = r;
  cert.modulus = ell;

  const SymPoly x = SymPoly::variable(vars, "x");
  const SymPoly one = SymPoly::constant(vars, 1);
  SymPoly h1 = one;
  SymPoly hl = one;
  for (unsigned i = 0; i < r; ++i) {
    const SymPoly a = alpha(vars, i);
    SymPoly xk = one;
    SymPoly ak = one;
    SymPoly geo = SymPoly(vars);
    for (unsigned k = 1; k < ell; ++k) {
      xk *= x;
      h1 *= one - a * xk;
    }
    for (unsigned k = 0; k < ell; ++k) {
      geo += ak;
      ak *= a;
    }
    hl *= geo;
  }

  const SymPoly h1_motive = centralizer_h(centralizer_motive(SLType({{1U, ell}})), r);
  const SymPoly hl_motive = centralizer_h(centralizer_motive(SLType({{ell, 1U}})), r);
  add_check(cert, "H_1 matches the centralizer motive", h1 == h1_motive, shorten(h1.to_string()));
  add_check(cert, "H_l matches the centralizer motive", hl == hl_motive, shorten(hl.to_string()));

  const SymPoly diff = h1 - hl;
  const SymPoly rem = remainder_x(diff, cyclotomic(ell));
  add_check(cert, "H_1(zeta_l) = H_l(zeta_l)", rem.is_zero(), "remainder " + shorten(rem.to_string()));

  SymPoly quotient(vars);
  bool exact = true;
  try {
    quotient = exact_div(diff, x_poly(vars, geometric(ell)), 0);
  } catch (const InexactDivision&) {
    exact = false;
  }
  add_check(cert, "1 + x + ... + x^(l-1) divides H_1 - H_l", exact, exact ? "R = " + shorten(quotient.to_string()) : "");
  throw_on_failure(cert);

  cert.polynomial = quotient;
  cert.forms = {{"q = 1 mod l", BigInt(ell) * quotient + hl}, {"q != 1 mod l", quotient + hl}};
  return cert;
}

SymPoly sl_h_polynomial(unsigned big_n, unsigned big_d, unsigned r) {
  if (big_d == 0 || big_n % big_d != 0) throw PreconditionError("H_{N,D} needs D | N");
  const auto vars = certificate_variables(r);
  const SymPoly one = SymPoly::constant(vars, 1);
  SymPoly h = one;
  for (unsigned i = 0; i < r; ++i) {
    const SymPoly a = alpha(vars, i);
    const SymPoly ad = pow(a, big_d);
    SymPoly geo(vars);
    SymPoly ak = one;
    for (unsigned k = 0; k < big_d; ++k) {
      geo += ak;
      ak *= a;
    }
    h *= geo;
    for (unsigned k = 1; k < big_n / big_d; ++k) h *= one - ad * x_poly(vars, IntPoly::monomial(1, std::size_t{k} * big_d));
  }
  return h;
}

namespace {

// H_{N,D} reduced modulo Phi_c(x) factor by factor.
SymPoly sl_h_residue(unsigned big_n, unsigned big_d, unsigned r, unsigned c) {
  const auto vars = certificate_variables(r);
  const IntPoly& phi = cyclotomic(c);
  const SymPoly one = SymPoly::constant(vars, 1);
  SymPoly h = one;
  for (unsigned i = 0; i < r; ++i) {
    const SymPoly a = alpha(vars, i);
    const SymPoly ad = pow(a, big_d);
    SymPoly geo(vars);
    SymPoly ak = one;
    for (unsigned k = 0; k < big_d; ++k) {
      geo += ak;
      ak *= a;
    }
    h *= geo;
    for (unsigned k = 1; k < big_n / big_d; ++k) {
      const IntPoly xk = divrem(IntPoly::monomial(1, std::size_t{k} * big_d), phi).remainder;
      h = remainder_x(h * (one - ad * x_poly(vars, xk)), phi);
    }
  }
  return h;
}

// sum_{e | d} mu(e) (x^(d/e) - 1), the numerator of M_{n,d} over x^n - 1.
IntPoly m_numerator(unsigned d) {
  IntPoly out;
  for (auto e : divisors(d)) {
    const int mu = mobius(e);
    if (mu == 0) continue;
    out = out + BigInt(mu) * (IntPoly::monomial(1, d / e) - IntPoly::constant(1));
  }
  return out;
}

double expansion_estimate(unsigned big_n, unsigned big_d, unsigned r) {
  const double k = static_cast<double>(big_n / big_d) - 1;
  const double per_alpha = (k + 1) * (k * (k + 1) / 2 + 1) * big_d;
  double est = 1;
  for (unsigned i = 0; i < r; ++i) est *= per_alpha;
  return est;
}

constexpr double kExpansionLimit = 3e5;

}  // namespace

SymbolicCertificate sl_script_p(unsigned n, unsigned r, unsigned n_prime, unsigned d_prime, unsigned max_arity) {
  if (n == 0 || n_prime == 0 || d_prime == 0) throw PreconditionError("sl_script_p needs positive n, n', d'");
  if (n_prime % d_prime != 0) throw PreconditionError("sl_script_p needs d' | n'");
  if (std::gcd(d_prime, n) != 1) throw PreconditionError("sl_script_p needs gcd(d', n) = 1");
  require_arity(r, max_arity);
  const auto vars = certificate_variables(r);
  const unsigned big_n = n_prime * n;
  SymbolicCertificate cert;
  cert.family = "sl-general";
  cert.group = GroupSpec::sl(n);
  cert.j_arity = r;

  const auto ds = divisors(n);
  if (n_prime == 1 && d_prime == 1) {
    bool same = true;
    for (auto d : ds) {
      const SLType t({{static_cast<unsigned>(d), static_cast<unsigned>(n / d)}});
      same = same && centralizer_h(centralizer_motive(t), r) == sl_h_polynomial(n, static_cast<unsigned>(d), r);
    }
    add_check(cert, "H_{n,d} matches the centralizer motives", same, std::to_string(ds.size()) + " types");
  }

  for (auto c64 : ds) {
    const unsigned c = static_cast<unsigned>(c64);
    const IntPoly& phi = cyclotomic(c);
    SymPoly residue(vars);
    bool lemma_ok = true;
    std::string lemma_witness;
    for (auto d64 : ds) {
      const unsigned big_d = d_prime * static_cast<unsigned>(d64);
      const SymPoly h = sl_h_residue(big_n, big_d, r, c);
      residue += h * x_poly(vars, divrem(m_numerator(static_cast<unsigned>(d64)), phi).remainder);
      // prod (1 - a^L)^(N/L) / (1 - a), L = lcm(c, D)
      const unsigned l = std::lcm(c, big_d);
      SymPoly expected = SymPoly::constant(vars, 1);
      for (unsigned i = 0; i < r; ++i) {
        const SymPoly a = alpha(vars, i);
        SymPoly geo(vars);
        SymPoly ak = SymPoly::constant(vars, 1);
        for (unsigned k = 0; k < l; ++k) {
          geo += ak;
          ak *= a;
        }
        expected *= geo * pow(SymPoly::constant(vars, 1) - pow(a, l), big_n / l - 1);
      }
      if (remainder_x(h - expected, phi).is_zero()) continue;
      lemma_ok = false;
      lemma_witness += "D=" + std::to_string(big_d) + " ";
    }
    residue = remainder_x(residue, phi);
    add_check(cert, "H_{N,D}(zeta_" + std::to_string(c) + ", J) = prod (1-a^lcm)^(N/lcm)/(1-a)", lemma_ok,
              lemma_ok ? "all D" : "fails at " + lemma_witness);
    add_check(cert, "Phi_" + std::to_string(c) + " divides the numerator", residue.is_zero(),
              "remainder " + shorten(residue.to_string()));
  }

  double est = 0;
  for (auto d : ds) est = std::max(est, expansion_estimate(big_n, d_prime * static_cast<unsigned>(d), r));
  cert.materialized = est <= kExpansionLimit;
  if (cert.materialized) {
    SymPoly numerator(vars);
    for (auto d : ds)
      numerator += sl_h_polynomial(big_n, d_prime * static_cast<unsigned>(d), r) *
                   x_poly(vars, m_numerator(static_cast<unsigned>(d)));
    bool exact = true;
    try {
      cert.polynomial = exact_div(numerator, x_poly(vars, IntPoly::monomial(1, n) - IntPoly::constant(1)), 0);
    } catch (const InexactDivision&) {
      exact = false;
    }
    add_check(cert, "x^n - 1 divides the numerator", exact,
              exact ? std::to_string(cert.polynomial.size()) + " terms" : "remainder nonzero");
  } else {
    cert.polynomial = SymPoly(vars);
  }
  throw_on_failure(cert);
  return cert;
}

// ---- Sp_4 / Sp_6 ----

DerivativeWitness derivative_witness(unsigned k, unsigned r) {
  if (k < 2) throw PreconditionError("derivative witness needs k >= 2");
  const auto vars = certificate_variables(r);
  const SymPoly one = SymPoly::constant(vars, 1);
  std::vector<SymPoly> a, u;
  for (unsigned i = 0; i < r; ++i) {
    a.push_back(alpha(vars, i));
    u.push_back(one + a.back());
  }
  auto others = [&](std::initializer_list<unsigned> skip) {
    SymPoly p = one;
    for (unsigned i = 0; i < r; ++i)
      if (std::find(skip.begin(), skip.end(), i) == skip.end()) p *= pow(u[i], k);
    return p;
  };
  DerivativeWitness w{others({}), SymPoly(vars), SymPoly(vars), SymPoly(vars)};
  for (unsigned i = 0; i < r; ++i) {
    w.ab += a[i] * pow(u[i], k - 1) * others({i});
    w.ac += a[i] * a[i] * pow(u[i], k - 2) * others({i});
    for (unsigned j = 0; j < r; ++j)
      if (j != i) w.ad += a[i] * a[j] * pow(u[i], k - 1) * pow(u[j], k - 1) * others({i, j});
  }
  return w;
}

namespace {

struct QuotientRule {
  IntPoly num;
  IntPoly den;
};

QuotientRule differentiate(const QuotientRule& f) {
  return {f.num.derivative() * f.den - f.num * f.den.derivative(), f.den * f.den};
}

BigRational value_at_minus_one(const QuotientRule& f) {
  const BigRational at(-1);
  return f.num.eval(at) / f.den.eval(at);
}

// S = (1+x)^k R and its first two derivatives at x = -1.
std::array<BigRational, 3> s_jet(const RationalFunction& r, unsigned k) {
  QuotientRule f{one_plus_x_power(k) * r.numerator().to_univariate(0), r.denominator().to_univariate(0)};
  const IntPoly lin{1, 1};
  while (f.den.eval(BigInt(-1)) == 0) {
    try {
      f = {exact_div(f.num, lin), exact_div(f.den, lin)};
    } catch (const InexactDivision&) {
      throw CertificateFailure("(1+x)^" + std::to_string(k) + " R has a pole at -1");
    }
  }
  const QuotientRule f1 = differentiate(f);
  const QuotientRule f2 = differentiate(f1);
  return {value_at_minus_one(f), value_at_minus_one(f1), value_at_minus_one(f2)};
}

SymPoly x_derivative_at_minus_one(const SymPoly& h, unsigned order) {
  SymPoly p = h;
  for (unsigned i = 0; i < order; ++i) p = p.derivative(0);
  return p.substitute(0, BigInt(-1));
}

struct Plan {
  IntPoly den;  // 2(1+x)^2(1+x^2) or 6(1+x)^3(1+x^2)(1-x+x^2)
  unsigned k = 2;
  struct Modular {
    std::string label;
    long prime;
    std::vector<std::string> subset;
  };
  struct Cyclo {
    std::string label;
    unsigned order;
    std::vector<std::string> subset;
  };
  std::vector<Modular> modular;
  std::vector<Cyclo> cyclo;
  std::string root_label;
};

Plan plan_for(unsigned n, Parity parity) {
  Plan p;
  const bool odd = parity == Parity::Odd;
  const std::string t = odd ? "tau" : "tau'";
  auto names = [&](std::initializer_list<int> ids) {
    std::vector<std::string> out;
    for (int i : ids) out.push_back(t + std::to_string(i));
    return out;
  };
  if (n == 2) {
    p.den = BigInt(2) * pow(IntPoly{1, 1}, 2) * IntPoly{1, 0, 1};
    p.k = 2;
    p.modular = {{"(a) P1 = 2P is 0 mod 2", 2, names({5, 6})}};
    p.root_label = "(b) P2 = (1+x)^2 P is 0 mod (1+x)^2";
    p.cyclo = {{"(c) P3 = (1+x^2)P is 0 mod 1+x^2", 4, names({1, 6})}};
  } else {
    p.den = BigInt(6) * pow(IntPoly{1, 1}, 3) * IntPoly{1, 0, 1} * IntPoly{1, -1, 1};
    p.k = 3;
    p.modular = {{"(a) P1 = 2P is 0 mod 2", 2, odd ? names({10, 11}) : names({6, 7, 10, 11})},
                 {"(b) P2 = 3P is 0 mod 3", 3, names({10, 12})}};
    p.root_label = "(c) P3 = (1+x)^3 P is 0 mod (1+x)^3";
    p.cyclo = {{"(d) P4 = (1+x^2)P is 0 mod 1+x^2", 4, odd ? names({1, 2, 3, 7, 11}) : names({1, 3, 7, 11})},
               {"(e) P5 = (1-x+x^2)P is 0 mod 1-x+x^2", 6, names({1, 8, 12})}};
  }
  return p;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

SymbolicCertificate sp_certificate(unsigned n, Parity parity, unsigned r, unsigned max_arity) {
  if (n != 2 && n != 3) throw PreconditionError("sp_certificate covers Sp_4 and Sp_6");
  require_arity(r, max_arity);
  const auto vars = certificate_variables(r);
  const GoldenTable& table = golden_table(n, parity);
  const Plan plan = plan_for(n, parity);
  SymbolicCertificate cert;
  cert.family = "sp";
  cert.group = GroupSpec::sp(2 * n);
  cert.j_arity = r;

  struct Row {
    std::string name;
    RationalFunction r;  // in x
    IntPoly den_r;       // Den * R
    SymPoly h;
  };
  std::vector<Row> rows;
  const std::string table_tag = "Sp_" + std::to_string(2 * table.n) + " " + to_string(table.parity) + " ";
  for (const auto& g : table.rows) {
    const ArtinTateMotive m = centralizer_motive(g.type);
    const RationalFunction det_golden = parse_expression(g.det, {"t", "q"});
    add_check(cert, table_tag + g.name + ": det(1 - t Fr | M)", det_golden == RationalFunction(frobenius_det(m)),
              format_frobenius_det(m));
    std::string count_text = g.count;
    std::replace(count_text.begin(), count_text.end(), 'q', 'x');
    const RationalFunction count = count_sp_polynomial(g.type, parity);
    add_check(cert, table_tag + g.name + ": N_tau", parse_expression(count_text, {"x"}) == count, count.to_string());
    const RationalFunction derived = count * in_x(ratio_from_motive(m));
    const RationalFunction golden = parse_expression(g.r, {"x"});
    add_check(cert, table_tag + g.name + ": R_tau = N_tau * ratio", derived == golden, derived.to_string());

    Row row{g.name, golden, IntPoly(), centralizer_h(m, r)};
    bool integral = true;
    try {
      row.den_r = exact_div(plan.den * golden.numerator().to_univariate(0), golden.denominator().to_univariate(0));
    } catch (const InexactDivision&) {
      integral = false;
    }
    add_check(cert, g.name + ": Den * R_tau in Z[x]", integral, row.den_r.to_string());
    rows.push_back(std::move(row));
  }
  RationalFunction r_sum(SymPoly::constant({"x"}, 0));
  for (const auto& row : rows) r_sum = r_sum + row.r;
  add_check(cert, table_tag + "sum of R_tau = 1", r_sum == RationalFunction(SymPoly::constant({"x"}, 1)),
            r_sum.to_string());
  throw_on_failure(cert);

  SymPoly numerator(vars);
  for (const auto& row : rows) numerator += x_poly(vars, row.den_r) * row.h;

  const SymPoly one = SymPoly::constant(vars, 1);
  auto prod_over_alpha = [&](auto&& factor) {
    SymPoly p = one;
    for (unsigned i = 0; i < r; ++i) p *= factor(alpha(vars, i));
    return p;
  };

  // Congruences mod 2 and mod 3.
  for (const auto& mod : plan.modular) {
    const BigInt p(mod.prime);
    bool complement = true;
    SymPoly subset_sum(vars);
    for (const auto& row : rows) {
      if (contains(mod.subset, row.name))
        subset_sum += x_poly(vars, row.den_r) * row.h;
      else
        complement = complement && SymPoly::from_univariate({"x"}, 0, row.den_r).coefficients_divisible_by(p);
    }
    add_check(cert, mod.label + ": other types vanish mod " + std::to_string(mod.prime), complement, "");
    SymPoly identity(vars);
    std::string ident_text;
    if (mod.prime == 2 && n == 2) {
      identity = prod_over_alpha([&](const SymPoly& a) { return pow(one + a, 2); }) -
                 prod_over_alpha([&](const SymPoly& a) { return one + a * a; });
      ident_text = "prod(1+a)^2 = prod(1+a^2) mod 2";
    } else if (mod.prime == 2) {
      identity = prod_over_alpha([&](const SymPoly& a) { return pow(one + a, 3); }) +
                 prod_over_alpha([&](const SymPoly& a) { return (one + a) * (one + a * a); });
      ident_text = "prod(1+a)^3 + prod(1+a)(1+a^2) = 0 mod 2";
    } else {
      identity = prod_over_alpha([&](const SymPoly& a) { return pow(one + a, 3); }) -
                 prod_over_alpha([&](const SymPoly& a) { return one + pow(a, 3); });
      ident_text = "prod(1+a)^3 = prod(1+a^3) mod 3";
    }
    add_check(cert, mod.label + ": " + ident_text, identity.coefficients_divisible_by(p),
              shorten(identity.reduce_mod(p).to_string()));
    add_check(cert, mod.label + ": remaining types sum to 0 mod " + std::to_string(mod.prime),
              subset_sum.coefficients_divisible_by(p), shorten(subset_sum.reduce_mod(p).to_string()));
    add_check(cert, mod.label, numerator.coefficients_divisible_by(p), "cleared numerator mod " + std::to_string(mod.prime));
  }

  // Vanishing at primitive 4th and 6th roots of unity.
  for (const auto& cy : plan.cyclo) {
    const IntPoly& phi = cyclotomic(cy.order);
    bool complement = true;
    SymPoly subset_sum(vars);
    for (const auto& row : rows) {
      if (contains(cy.subset, row.name))
        subset_sum += x_poly(vars, row.den_r) * row.h;
      else
        complement = complement && divrem(row.den_r, phi).remainder.is_zero();
    }
    add_check(cert, cy.label + ": other types vanish at zeta_" + std::to_string(cy.order), complement, "");
    const SymPoly sub_rem = remainder_x(subset_sum, phi);
    add_check(cert, cy.label + ": remaining types vanish at zeta_" + std::to_string(cy.order), sub_rem.is_zero(),
              "remainder " + shorten(sub_rem.to_string()));
    const SymPoly rem = remainder_x(numerator, phi);
    add_check(cert, cy.label, rem.is_zero(), "remainder " + shorten(rem.to_string()));
  }

  // Order-k vanishing at x = -1 through the derivative table.
  const unsigned k = plan.k;
  const DerivativeWitness w = derivative_witness(k, r);
  const SymPoly a_prime = prod_over_alpha([&](const SymPoly& a) { return (one + a) * (one + a * a); });
  std::map<std::string, std::array<BigRational, 3>> jets;
  for (const auto& row : rows) jets[row.name] = s_jet(row.r, k);
  std::map<std::string, const Row*> by_name;
  for (const auto& row : rows) by_name[row.name] = &row;
  std::set<std::string> tabulated;
  BigRational c_a1 = 0, c_ab1 = 0, c_a2 = 0, c_aprime2 = 0, c_ab2 = 0, c_ac2 = 0, c_ad2 = 0, c_a0 = 0;
  for (const auto& d : table.derivatives) {
    tabulated.insert(d.name);
    const auto& jet = jets.at(d.name);
    const Row& row = *by_name.at(d.name);
    bool ok = jet[0] == d.s && (!d.s1 || jet[1] == *d.s1);
    std::string wit = "S(-1)=" + to_string(jet[0]) + " S'(-1)=" + to_string(jet[1]);
    add_check(cert, plan.root_label + ": " + d.name + " S values", ok, wit);
    add_check(cert, plan.root_label + ": " + d.name + " H(-1) = A", x_derivative_at_minus_one(row.h, 0) == w.a, "");
    add_check(cert, plan.root_label + ": " + d.name + " H'(-1) = " + std::to_string(d.h1) + " AB",
              x_derivative_at_minus_one(row.h, 1) == BigInt(d.h1) * w.ab, "");
    if (d.h2) {
      const auto& h2 = *d.h2;
      const SymPoly expect = BigInt(h2[0]) * w.ab + BigInt(h2[1]) * w.ac + BigInt(h2[2]) * w.ad;
      add_check(cert,
                plan.root_label + ": " + d.name + " H''(-1) = " + std::to_string(h2[0]) + " AB + " +
                    std::to_string(h2[1]) + " AC + " + std::to_string(h2[2]) + " AD",
                x_derivative_at_minus_one(row.h, 2) == expect, "");
      c_ab2 += BigRational(2) * jet[1] * d.h1 + d.s * h2[0];
      c_ac2 += d.s * h2[1];
      c_ad2 += d.s * h2[2];
    }
    c_a0 += d.s;
    c_a1 += jet[1];
    c_ab1 += d.s * d.h1;
    c_a2 += jet[2];
  }
  for (const auto& d : table.second_order_only) {
    tabulated.insert(d.name);
    const auto& jet = jets.at(d.name);
    const Row& row = *by_name.at(d.name);
    add_check(cert, plan.root_label + ": " + d.name + " S(-1) = S'(-1) = 0, S''(-1) = " + to_string(*d.s2),
              jet[0] == 0 && jet[1] == 0 && jet[2] == *d.s2, "S''(-1)=" + to_string(jet[2]));
    add_check(cert, plan.root_label + ": " + d.name + " H(-1) = A'", x_derivative_at_minus_one(row.h, 0) == a_prime, "");
    c_aprime2 += jet[2];
  }
  for (const auto& row : rows) {
    if (tabulated.count(row.name)) continue;
    const auto& jet = jets.at(row.name);
    bool zero = true;
    for (unsigned j = 0; j < k; ++j) zero = zero && jet[j] == 0;
    add_check(cert, plan.root_label + ": " + row.name + " S vanishes to order " + std::to_string(k), zero, "");
  }
  add_check(cert, plan.root_label + ": sum S(-1) = 0", c_a0 == 0, to_string(c_a0));
  add_check(cert, plan.root_label + ": P'(-1) coefficient of A", c_a1 == 0, to_string(c_a1));
  add_check(cert, plan.root_label + ": P'(-1) coefficient of AB", c_ab1 == 0, to_string(c_ab1));
  if (k >= 3) {
    add_check(cert, plan.root_label + ": P''(-1) coefficient of A", c_a2 == 0, to_string(c_a2));
    add_check(cert, plan.root_label + ": P''(-1) coefficient of A'", c_aprime2 == 0, to_string(c_aprime2));
    add_check(cert, plan.root_label + ": P''(-1) coefficient of AB", c_ab2 == 0, to_string(c_ab2));
    add_check(cert, plan.root_label + ": P''(-1) coefficient of AC", c_ac2 == 0, to_string(c_ac2));
    add_check(cert, plan.root_label + ": P''(-1) coefficient of AD", c_ad2 == 0, to_string(c_ad2));
  }
  // Direct evaluation of (1+x)^k P and its derivatives at -1.
  BigInt lcm_den = 1;
  for (const auto& [name, jet] : jets)
    for (const auto& v : jet) lcm_den = lcm(lcm_den, BigInt(v.get_den()));
  for (unsigned j = 0; j < k; ++j) {
    SymPoly total(vars);
    for (const auto& row : rows) {
      const auto& jet = jets.at(row.name);
      BigInt binom = 1;
      for (unsigned i = 0; i <= j; ++i) {
        if (i > 0) binom = binom * (j - i + 1) / i;
        const BigRational coeff = BigRational(binom) * jet[i] * BigRational(lcm_den);
        if (coeff == 0) continue;
        total += to_integer(coeff) * x_derivative_at_minus_one(row.h, j - i);
      }
    }
    add_check(cert, plan.root_label + ": derivative " + std::to_string(j) + " at -1 vanishes", total.is_zero(),
              shorten(total.to_string()));
  }
  const SymPoly lin_k = x_poly(vars, one_plus_x_power(k));
  const SymPoly root_rem = divrem(numerator, lin_k, 0).remainder;
  add_check(cert, plan.root_label, root_rem.is_zero(), "remainder " + shorten(root_rem.to_string()));
  throw_on_failure(cert);

  const BigInt content = plan.den.content();
  bool exact = numerator.coefficients_divisible_by(content);
  if (exact) {
    try {
      cert.polynomial = exact_div(numerator.divide_exact(content), x_poly(vars, plan.den.divide_exact(content)), 0);
    } catch (const InexactDivision&) {
      exact = false;
    }
  }
  add_check(cert, "P = N / " + plan.den.to_string() + " in Z[x, J]", exact,
            exact ? std::to_string(cert.polynomial.size()) + " terms" : "");
  throw_on_failure(cert);
  return cert;
}

RationalFunction sp_assembled_sum(unsigned n, Parity parity, unsigned r) {
  const auto vars = certificate_variables(r);
  RationalFunction total(SymPoly::constant(vars, 0));
  for (const auto& t : enumerate_sp_types(n, parity, false)) {
    const ArtinTateMotive m = centralizer_motive(t);
    const RationalFunction ratio = count_sp_polynomial(t, parity) * in_x(ratio_from_motive(m));
    const RationalFunction lifted(x_poly(vars, ratio.numerator().to_univariate(0)),
                                  x_poly(vars, ratio.denominator().to_univariate(0)));
    total = total + lifted * RationalFunction(centralizer_h(m, r));
  }
  return total;
}

SpEvidence sp_evidence(unsigned n, Parity parity, unsigned r) {
  SpEvidence e;
  e.n = n;
  e.parity = parity;
  e.r = r;
  e.types = enumerate_sp_types(n, parity, false).size();
  e.sum = sp_assembled_sum(n, parity, r);
  e.polynomial = e.sum.denominator().is_constant();
  e.integral = e.polynomial && e.sum.denominator().constant_term() == 1;
  return e;
}

}  // namespace cuspcount
