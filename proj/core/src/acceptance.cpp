#include "cuspcount/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "cuspcount/census.hpp"
#include "cuspcount/classsum.hpp"
#include "cuspcount/classtypes.hpp"
#include "cuspcount/cyclotomic_field.hpp"
#include "cuspcount/error.hpp"
#include "cuspcount/finite_field.hpp"
#include "cuspcount/geometry.hpp"
#include "cuspcount/lefschetz.hpp"
#include "cuspcount/lfun.hpp"
#include "cuspcount/motive.hpp"
#include "cuspcount/number_theory.hpp"
#include "cuspcount/table_goldens.hpp"

namespace cuspcount {
namespace {

class Outcome {
 public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) failures_ += (failures_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  bool ok() const { return failed_ == 0 && checked_ > 0; }
  std::string detail() const {
    std::string d = std::to_string(checked_) + " checks";
    if (failed_ > 0) d += ", " + std::to_string(failed_) + " failed: " + failures_;
    if (!notes_.empty()) d += " (" + notes_ + ")";
    return d;
  }

 private:
  int checked_ = 0;
  int failed_ = 0;
  std::string failures_;
  std::string notes_;
};

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

std::string qtag(std::uint64_t q) { return "q=" + std::to_string(q); }

std::string degree_list(const std::vector<unsigned>& ds) {
  std::string out = "{";
  for (std::size_t i = 0; i < ds.size(); ++i) out += (i ? "," : "") + std::to_string(ds[i]);
  return out + "}";
}

std::string curve_label(const CurveDatum& c) {
  return qtag(c.q) + " g=" + std::to_string(c.genus()) + " S=" + degree_list(c.s_degrees) +
         (c.t_degrees.empty() ? "" : " T=" + degree_list(c.t_degrees));
}

// P^1 data whose J = J_X u J_S - {1, 1} has r elements.
CurveDatum p1_with_arity(std::uint64_t q, unsigned r) {
  static const std::vector<std::vector<unsigned>> s{{1, 1}, {1, 1, 1}, {1, 1, 2}, {1, 1, 3}};
  return projective_line(q, s.at(r));
}

// Genus one data with r = 2 (S = {1,1}) or r = 3 (S = {1,1,1}) over F_q,
// obtained by base change from a small field.
CurveDatum elliptic_with_arity(std::uint64_t q, unsigned r) {
  const std::vector<unsigned> s = r == 2 ? std::vector<unsigned>{1, 1} : std::vector<unsigned>{1, 1, 1};
  struct Base {
    std::uint64_t q0;
    long trace;
  };
  const std::vector<Base> bases{{2, 1}, {3, 1}, {5, 2}, {7, -1}};
  for (const auto& b : bases) {
    std::uint64_t qq = b.q0;
    for (unsigned m = 1; m <= 6; ++m, qq *= b.q0)
      if (qq == q) return base_change(elliptic_curve(b.q0, b.trace, s), m);
  }
  throw PreconditionError("no elliptic datum for " + qtag(q));
}

Outcome trivial_l_value() {
  Outcome out;
  const std::vector<GroupSpec> specs{GroupSpec::sl(2), GroupSpec::sl(3), GroupSpec::sl(4), GroupSpec::sl(5),
                                     GroupSpec::sp(4), GroupSpec::sp(6), GroupSpec::gl(3),
                                     GroupSpec::res(2, GroupSpec::unitary(2))};
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    const CurveDatum c = projective_line(q, {1}, {1});
    for (const auto& g : specs) {
      const BigRational v = l_value(motive_of(g), c);
      out.check(v == 1, g.to_string() + " " + qtag(q) + " gave " + to_string(v));
    }
  }
  return out;
}

Outcome sum_identity() {
  Outcome out;
  const std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9};
  for (auto q : qs) {
    for (unsigned n = 2; n <= 6; ++n)
      out.check(verify_sum_identity(GroupSpec::sl(n), q), "SL(" + std::to_string(n) + ") " + qtag(q));
    for (unsigned two_n : {4U, 6U})
      out.check(verify_sum_identity(GroupSpec::sp(two_n), q), "Sp(" + std::to_string(two_n) + ") " + qtag(q));
  }
  return out;
}

Outcome table_census() {
  Outcome out;
  const std::vector<std::pair<unsigned, std::vector<std::uint64_t>>> plan{{2, {2, 3, 4, 5, 7}}, {3, {2, 3, 4}}};
  for (const auto& [n, qs] : plan) {
    for (auto q : qs) {
      const oracle::FiniteField f = oracle::FiniteField::of_order(q);
      const auto census = oracle::sp_census(n, f);
      const GoldenTable& table = golden_table(n, parity_of(q));
      for (const auto& row : table.rows) {
        const BigRational expected = parse_expression(row.count, {"q"}).eval({{"q", BigRational(big(q))}});
        const auto it = census.find(row.type);
        const BigInt got = it == census.end() ? BigInt(0) : big(it->second);
        out.check(expected == got, "Sp_" + std::to_string(2 * n) + " " + row.name + " " + qtag(q) +
                                       ": census " + to_string(got) + ", table " + to_string(expected));
      }
      for (const auto& [type, count] : census) {
        if (type.has_gl()) continue;
        bool listed = false;
        for (const auto& row : table.rows) listed = listed || row.type == type;
        out.check(listed, "census type " + type.label() + " missing from the Sp_" + std::to_string(2 * n) + " table");
      }
    }
  }
  return out;
}

Outcome counting_formulas() {
  Outcome out;
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const oracle::FiniteField f = oracle::FiniteField::of_order(q);
    for (unsigned two_n : {2U, 4U, 6U, 8U}) {
      const BigInt formula = s_count(two_n, q);
      const std::uint64_t census = oracle::self_reciprocal_irreducible_census(f, two_n);
      out.check(formula == big(census), "s_count(" + std::to_string(two_n) + ") " + qtag(q));
    }
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
    const oracle::FiniteField f = oracle::FiniteField::of_order(q);
    for (unsigned n = 1; n <= 5; ++n) {
      if (std::gcd<std::uint64_t>(n, q - 1) != 1) continue;
      const oracle::Elem target = n % 2 == 0 ? f.one() : f.neg(f.one());
      for (auto d : divisors(n)) {
        std::uint64_t census = 0;
        for (oracle::Elem c = 1; c < f.order(); ++c)
          if (f.pow(c, n / d) == target) census += oracle::count_irreducible_monics(f, static_cast<unsigned>(d), c);
        out.check(count_sl(n, static_cast<unsigned>(d), q) == big(census),
                  "count_sl(" + std::to_string(n) + "," + std::to_string(d) + ") " + qtag(q));
      }
    }
  }
  return out;
}

Outcome sl_prime_certificates() {
  Outcome out;
  for (unsigned ell : {2U, 3U, 5U}) {
    for (unsigned r = 0; r <= 3; ++r) {
      const SymbolicCertificate cert = sl_prime_certificate(ell, r);
      out.check(cert.all_passed(), "SL(" + std::to_string(ell) + ") r=" + std::to_string(r) + " checks");
      std::vector<CurveDatum> data{p1_with_arity(2, r)};
      if (r >= 2)
        for (long a : {-1L, 0L, 1L})
          data.push_back(elliptic_curve(2, a, r == 2 ? std::vector<unsigned>{1, 1} : std::vector<unsigned>{1, 1, 1}));
      for (const auto& c : data) {
        for (unsigned m = 1; m <= 3; ++m) {
          const CurveDatum cm = base_change(c, m);
          out.check(cert.evaluate(cm) == class_sum(GroupSpec::sl(ell), cm),
                    "SL(" + std::to_string(ell) + ") r=" + std::to_string(r) + " " + curve_label(cm));
        }
      }
    }
  }
  return out;
}

Outcome sl_integrality() {
  Outcome out;
  int residue_only = 0;
  const std::vector<std::pair<unsigned, unsigned>> variants{{1, 1}, {3, 1}, {5, 5}};
  for (unsigned n = 2; n <= 8; ++n) {
    for (const auto& [np, dp] : variants) {
      if (std::gcd(dp, n) != 1) continue;
      for (unsigned r = 0; r <= 2; ++r) {
        const SymbolicCertificate cert = sl_script_p(n, r, np, dp);
        out.check(cert.all_passed(), "n=" + std::to_string(n) + " (n',d')=(" + std::to_string(np) + "," +
                                         std::to_string(dp) + ") r=" + std::to_string(r));
        if (!cert.materialized) ++residue_only;
      }
    }
    const SymbolicCertificate c1 = sl_script_p(n, 1);
    const SymbolicCertificate c2 = sl_script_p(n, 2);
    const std::vector<std::pair<const SymbolicCertificate*, CurveDatum>> data{
        {&c1, projective_line(2, {1, 1, 1})}, {&c2, elliptic_curve(2, 1, {1, 1})}};
    for (const auto& [cert, c] : data) {
      for (unsigned m = 1; m <= 3; ++m) {
        const CurveDatum cm = base_change(c, m);
        if (std::gcd<std::uint64_t>(n, cm.q - 1) != 1) continue;
        out.check(cert->evaluate(cm) == class_sum(GroupSpec::sl(n), cm),
                  "P(q, J) = class sum for SL(" + std::to_string(n) + ") " + curve_label(cm));
      }
    }
  }
  out.note(std::to_string(residue_only) + " certified through residues without expanding the quotient");
  return out;
}

Outcome sp_certificates() {
  Outcome out;
  for (unsigned n : {2U, 3U}) {
    for (Parity parity : {Parity::Odd, Parity::Even}) {
      const std::vector<std::uint64_t> qs =
          parity == Parity::Odd ? std::vector<std::uint64_t>{3, 5, 7, 9} : std::vector<std::uint64_t>{2, 4, 8};
      for (unsigned r = 0; r <= 3; ++r) {
        const std::string tag = "Sp(" + std::to_string(2 * n) + ") " + to_string(parity) + " r=" + std::to_string(r);
        const SymbolicCertificate cert = sp_certificate(n, parity, r);
        out.check(cert.all_passed(), tag + " checks");
        for (auto q : qs) {
          std::vector<CurveDatum> data{p1_with_arity(q, r)};
          if (r >= 2) data.push_back(elliptic_with_arity(q, r));
          for (const auto& c : data)
            out.check(cert.evaluate(c) == class_sum(GroupSpec::sp(2 * n), c), tag + " " + curve_label(c));
        }
      }
    }
  }
  return out;
}

Outcome base_change_law() {
  Outcome out;
  const std::vector<GroupSpec> specs{GroupSpec::sl(2), GroupSpec::sl(3),       GroupSpec::sp(4),
                                     GroupSpec::gl(2), GroupSpec::unitary(2), GroupSpec::res(2, GroupSpec::unitary(1))};
  const std::vector<CurveDatum> data{projective_line(2, {1}, {1}), projective_line(3, {1, 2}, {1}),
                                     elliptic_curve(2, 1, {1}, {1}), elliptic_curve(3, 2, {2}, {1})};
  for (const auto& g : specs) {
    const ArtinTateMotive m = motive_of(g);
    for (const auto& c : data) {
      const std::string tag = g.to_string() + " " + curve_label(c);
      const ZPolynomial z = z_polynomial(m, c);
      const bool integral = z.polynomial && z.value.denominator().is_constant() &&
                            z.value.denominator().constant_term() == 1;
      out.check(integral, tag + ": Z not in Z[x, J]");
      for (unsigned k = 1; k <= 4; ++k)
        out.check(l_value(base_change(m, k), base_change(c, k)) == z.evaluate_power(big(c.q), k),
                  tag + " m=" + std::to_string(k));
    }
  }
  return out;
}

Outcome lefschetz_algebra() {
  Outcome out;
  const std::vector<std::pair<std::string, LefschetzFunction>> fs{
      {"chi2", LefschetzFunction::chi(2)},
      {"chi3", LefschetzFunction::chi(3)},
      {"2", LefschetzFunction::constant(2L)},
      {"3^m", LefschetzFunction::power(3L)}};
  std::size_t divisions = 0;
  for (const auto& [name, f] : fs) {
    for (unsigned big_n : {1U, 2U, 3U, 4U, 6U, 12U}) {
      TransformStats stats;
      const LefschetzFunction g = f_N_transform(f, big_n, &stats);
      divisions += stats.exact_divisions;
      bool same = true;
      for (unsigned m = 1; m <= 5 * big_n; ++m) {
        const unsigned l = std::lcm(big_n, m);
        same = same && g.evaluate(m) == f.evaluate(l).pow(std::gcd(big_n, m));
      }
      out.check(same, "f_N " + name + " N=" + std::to_string(big_n));
    }
    for (const std::vector<unsigned>& degrees :
         {std::vector<unsigned>{1, 1}, std::vector<unsigned>{2}, std::vector<unsigned>{2, 3}}) {
      TransformStats stats;
      const LefschetzFunction g = place_product(f, degrees, &stats);
      divisions += stats.exact_divisions;
      bool same = true;
      for (unsigned m = 1; m <= 12; ++m) {
        CyclotomicRational direct(1L);
        for (auto w : split_places(degrees, m)) direct = direct * f.evaluate(static_cast<unsigned long>(m) * w);
        same = same && g.evaluate(m) == direct;
      }
      std::string deg_label;
      for (auto d : degrees) deg_label += std::to_string(d);
      out.check(same, "place_product " + name + " {" + deg_label + "}");
    }
  }
  out.note(std::to_string(divisions) + " exact divisions");
  return out;
}

// sum_{d | n} phi(d) [d | q^m - 1] (q^m - 1) as a Lefschetz function.
LefschetzFunction all_chi_closed_form(unsigned center, std::uint64_t q) {
  LefschetzFunction total;
  const LefschetzFunction q_minus_one =
      LefschetzFunction::power(CyclotomicRational(big(q))) - LefschetzFunction::constant(1L);
  for (auto d : divisors(center)) {
    if (std::gcd<std::uint64_t>(d, q) != 1) continue;
    unsigned o = 1;
    std::uint64_t x = q % d;
    while (d > 1 && x != 1) {
      x = (x * q) % d;
      ++o;
    }
    LefschetzFunction indicator;
    for (unsigned j = 0; j < o; ++j) indicator = indicator + LefschetzFunction::power(CyclotomicRational::root_of_unity(o, j));
    indicator = CyclotomicRational(make_rational(BigInt(static_cast<unsigned long>(euler_phi(d))), BigInt(o))) * indicator;
    total = total + indicator * q_minus_one;
  }
  return total;
}

Outcome conditional_counts() {
  Outcome out;
  struct Case {
    GroupSpec spec;
    unsigned center;  // roots of unity of order <= center are candidates
  };
  const std::vector<Case> cases{{GroupSpec::sl(2), 2}, {GroupSpec::sl(3), 3}, {GroupSpec::sl(4), 4},
                                {GroupSpec::sp(4), 2}, {GroupSpec::sp(6), 2}};
  std::size_t max_points = 8;
  for (const auto& cs : cases) {
    for (std::uint64_t q : {2, 3, 4, 5}) {
      const std::string tag = cs.spec.to_string() + " " + qtag(q);
      const CurveDatum c = projective_line(q, {1}, {1});
      const BigInt expected_all = big(std::gcd<std::uint64_t>(cs.center, q - 1)) * big(q - 1);
      out.check(multiplicity_sum(cs.spec, c, true) == 1, tag + " fixed chi");
      out.check(multiplicity_sum(cs.spec, c, false) == expected_all, tag + " all chi");

      std::vector<CyclotomicRational> bases;
      for (unsigned o = 1; o <= cs.center; ++o)
        for (unsigned j = 0; j < o; ++j)
          if (std::gcd(j, o) == 1)
            for (unsigned e = 0; e <= 2; ++e)
              bases.push_back(CyclotomicRational::root_of_unity(o, j) * CyclotomicRational(ipow(big(q), e)));
      const std::size_t points = std::max<std::size_t>(8, bases.size() + 4);
      max_points = std::max(max_points, points);
      std::vector<BigRational> values;
      for (unsigned m = 1; m <= points; ++m) values.push_back(multiplicity_sum(cs.spec, base_change(c, m), false));
      const FitResult fit = lefschetz_fit(values, bases);
      out.check(fit.ok, tag + " fit: " + fit.diagnostic);
      if (!fit.ok) continue;
      out.check(fit.function.has_integral_coefficients(), tag + " fit has non-integral coefficients");
      out.check(fit.function == all_chi_closed_form(cs.center, q), tag + " fit differs from closed form");
    }
  }
  out.note("up to " + std::to_string(max_points) + " points");
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "trivial L-value on P^1 with S = T = {deg 1}", 1, trivial_l_value},
      {2, "class sum identity equals 1", 10, sum_identity},
      {3, "oracle census reproduces the N_tau tables", 60, table_census},
      {4, "counting formulas against the census", 30, counting_formulas},
      {5, "SL_l certificates", 30, sl_prime_certificates},
      {6, "SL_n integrality", 120, sl_integrality},
      {7, "Sp_4 / Sp_6 certificates", 120, sp_certificates},
      {8, "base-change law for Z", 10, base_change_law},
      {9, "Lefschetz algebra", 10, lefschetz_algebra},
      {10, "conditional multiplicity counts", 10, conditional_counts},
  };
  return list;
}

}  // namespace

CriterionResult run_criterion(int id) {
  for (const auto& cr : criteria()) {
    if (cr.id != id) continue;
    CriterionResult res;
    res.id = id;
    res.title = cr.title;
    res.budget = cr.budget;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = cr.run();
      res.passed = o.ok();
      res.detail = o.detail();
    } catch (const std::exception& e) {
      res.passed = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (res.seconds >= res.budget) {
      res.passed = false;
      res.detail += "; over the time budget";
    }
    return res;
  }
  throw PreconditionError("no acceptance criterion " + std::to_string(id));
}

std::vector<int> criteria_for_suite(const std::string& suite) {
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  if (suite == "tables") return {3, 7};
  if (suite == "identities") return {1, 2, 4, 5, 6, 8, 9, 10};
  throw PreconditionError("unknown suite '" + suite + "' (all, tables, identities)");
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", r.seconds, r.budget);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + " (" + timing +
         "): " + r.detail;
}

}  // namespace cuspcount
