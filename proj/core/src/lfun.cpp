#include "cuspcount/lfun.hpp"

#include "cuspcount/error.hpp"

namespace cuspcount {

BigRational l_value(const ArtinTateMotive& m, const CurveDatum& c) {
  c.validate();
  const BigInt q(static_cast<unsigned long>(c.q));
  const IntPoly d = frobenius_det_at(m, q);

  // prod over J_X of det(1 - alpha Fr | M) = Res(W, D) since W is monic.
  const BigInt f1 = resultant(weil_eigenvalue_poly(c), d);

  // Divide before evaluating so that the zero of det(1 - Fr | M) at t = 1
  // survives exactly once.
  const BigInt f2 = exact_div(h0_det_at(c.s_degrees, m, q), d).eval(BigInt(1));

  const BigInt d_at_q = d.eval(q);
  if (d_at_q == 0) throw Error("det(1 - q Fr | M) vanishes");
  const BigInt t_part = c.t_degrees.empty() ? BigInt(1) : h0_det_at(c.t_degrees, m, q).eval(q);
  return BigRational(f1 * f2) * make_rational(t_part, d_at_q);
}

namespace {

// c(beta * x^shift) over the variable list, with beta the variable at index var.
SymPoly twisted_charpoly(const std::vector<std::string>& vars, const IntPoly& c, std::size_t var, unsigned shift) {
  std::vector<SymPoly::Term> terms;
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    if (c.coeffs()[k] == 0) continue;
    Monomial mono{};
    mono[0] = static_cast<std::uint16_t>(k * shift);
    mono[var] = static_cast<std::uint16_t>(mono[var] + k);
    terms.emplace_back(mono, c.coeffs()[k]);
  }
  return SymPoly::from_terms(vars, std::move(terms));
}

// p with one root equal to 1 removed.
IntPoly drop_unit_root(const IntPoly& p) { return exact_div(p, IntPoly{-1, 1}); }

// prod_d Z_{q,d} with the eigenvalues of J_X u J_S - {1} at variables 1..a and
// those of J_T - {1} after them.
RationalFunction z_value(const std::vector<std::string>& vars, const ArtinTateMotive& m, std::size_t a_count,
                         std::size_t b_count, bool has_t) {
  SymPoly num = SymPoly::constant(vars, 1);
  SymPoly den = SymPoly::constant(vars, 1);
  for (const auto& piece : m.pieces()) {
    for (std::size_t i = 0; i < a_count; ++i) num *= twisted_charpoly(vars, piece.charpoly, 1 + i, piece.weight - 1);
    for (std::size_t j = 0; j < b_count; ++j)
      num *= twisted_charpoly(vars, piece.charpoly, 1 + a_count + j, piece.weight);
    if (!has_t) den *= SymPoly::from_univariate(vars, 0, piece.charpoly.inflate(piece.weight));
  }
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace

ZPolynomial z_polynomial(const ArtinTateMotive& m, const CurveDatum& c) {
  c.validate();
  const IntPoly a_roots = drop_unit_root(weil_eigenvalue_poly(c) * place_eigenvalue_poly(c.s_degrees));
  const bool has_t = !c.t_degrees.empty();
  const IntPoly b_roots = has_t ? drop_unit_root(place_eigenvalue_poly(c.t_degrees)) : IntPoly::constant(1);
  const auto a_vars = indexed_names("a", static_cast<std::size_t>(a_roots.degree()));
  const auto b_vars = indexed_names("b", static_cast<std::size_t>(b_roots.degree()));
  if (1 + a_vars.size() + b_vars.size() > kMaxVars) throw PreconditionError("too many eigenvalue variables for Z");

  std::vector<std::string> vars{"x"};
  vars.insert(vars.end(), a_vars.begin(), a_vars.end());
  vars.insert(vars.end(), b_vars.begin(), b_vars.end());

  ZPolynomial z;
  z.motive = m;
  z.has_t = has_t;
  z.value = z_value(vars, m, a_vars.size(), b_vars.size(), has_t);
  z.polynomial = z.value.is_polynomial();
  if (!a_vars.empty()) z.groups.push_back({a_vars, a_roots});
  if (!b_vars.empty()) z.groups.push_back({b_vars, b_roots});
  return z;
}

BigRational ZPolynomial::evaluate(const BigInt& q) const {
  const std::map<std::string, BigRational> at{{"x", BigRational(q)}};
  const BigRational num = eval_at_roots(value.numerator(), groups, at);
  const BigRational den = value.denominator().to_univariate(0).eval(BigRational(q));
  if (den == 0) throw PreconditionError("Z has a pole at x = " + cuspcount::to_string(q));
  return num / den;
}

BigRational ZPolynomial::evaluate_power(const BigInt& q, unsigned k) const {
  // J contains the eigenvalues of Frobenius on the motive too, so they are
  // raised to the k-th power along with J_X, J_S and J_T.
  ZPolynomial powered = *this;
  std::size_t a_count = 0, b_count = 0;
  for (auto& g : powered.groups) {
    g.roots_of = root_power_transform(g.roots_of, k);
    (g.variables.front()[0] == 'a' ? a_count : b_count) = g.variables.size();
  }
  powered.value = z_value(value.variables(), base_change(motive, k), a_count, b_count, has_t);
  return powered.evaluate(ipow(q, k));
}

unsigned group_rank(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::SL:
      return spec.param - 1;
    case GroupSpec::Kind::Sp:
      return spec.param / 2;
    default:
      throw PreconditionError("multiplicity sums are implemented for SL_n and Sp_2n only, got " + spec.to_string());
  }
}

BigInt center_order(const GroupSpec& spec, const BigInt& field_size) {
  BigInt g;
  const BigInt unit_count = field_size - 1;
  switch (spec.kind) {
    case GroupSpec::Kind::SL:
      g = gcd(BigInt(spec.param), unit_count);
      return g;
    case GroupSpec::Kind::Sp:
      g = gcd(BigInt(2), unit_count);
      return g;
    default:
      throw PreconditionError("center order is implemented for SL_n and Sp_2n only");
  }
}

BigRational multiplicity_sum(const GroupSpec& spec, const CurveDatum& c, bool fixed_chi) {
  spec.validate();
  if (c.t_degrees.empty()) throw PreconditionError("multiplicity_sum needs T non-empty; use class_sum when T is empty");
  const unsigned r = group_rank(spec);
  const bool negative = ((c.s_degrees.size() + c.t_degrees.size()) * r) % 2 == 1;
  BigRational value = l_value(motive_of(spec), c);
  if (negative) value = -value;
  if (!fixed_chi) {
    for (unsigned deg : c.t_degrees) {
      const BigInt field = ipow(BigInt(static_cast<unsigned long>(c.q)), deg);
      value *= BigRational(center_order(spec, field) * (field - 1));
    }
  }
  return value;
}

}  // namespace cuspcount
