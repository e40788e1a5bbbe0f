#include "cuspcount/geometry.hpp"

#include <numeric>

#include "cuspcount/error.hpp"
#include "cuspcount/number_theory.hpp"

namespace cuspcount {

void CurveDatum::validate() const {
  if (!is_prime_power(q)) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
  if (weil_numerator.coeff(0) != 1) throw PreconditionError("Weil numerator must satisfy P(0) = 1");
  if (weil_numerator.degree() % 2 != 0) throw PreconditionError("Weil numerator must have even degree");
  if (weil_numerator.leading() != ipow(BigInt(static_cast<unsigned long>(q)), genus()))
    throw PreconditionError("Weil numerator must have leading coefficient q^g");
  if (s_degrees.empty()) throw PreconditionError("S must be non-empty");
  for (auto d : s_degrees)
    if (d == 0) throw PreconditionError("place degrees must be positive");
  for (auto d : t_degrees)
    if (d == 0) throw PreconditionError("place degrees must be positive");
}

CurveDatum projective_line(std::uint64_t q, std::vector<unsigned> s_degrees, std::vector<unsigned> t_degrees) {
  CurveDatum c{q, IntPoly::constant(1), std::move(s_degrees), std::move(t_degrees)};
  c.validate();
  return c;
}

CurveDatum elliptic_curve(std::uint64_t q, long trace, std::vector<unsigned> s_degrees,
                          std::vector<unsigned> t_degrees) {
  // Hasse: a^2 <= 4q
  if (BigInt(trace) * trace > 4 * BigInt(static_cast<unsigned long>(q)))
    throw PreconditionError("trace " + std::to_string(trace) + " violates the Hasse bound for q = " + std::to_string(q));
  CurveDatum c{q, IntPoly(std::vector<BigInt>{1, -trace, BigInt(static_cast<unsigned long>(q))}),
               std::move(s_degrees), std::move(t_degrees)};
  c.validate();
  return c;
}

IntPoly weil_eigenvalue_poly(const CurveDatum& c) { return c.weil_numerator.reversed(); }

std::vector<unsigned> split_places(const std::vector<unsigned>& degrees, unsigned m) {
  if (m == 0) throw PreconditionError("base change degree must be positive");
  std::vector<unsigned> out;
  for (auto d : degrees) {
    const unsigned g = std::gcd(d, m);
    out.insert(out.end(), g, d / g);
  }
  return out;
}

CurveDatum base_change(const CurveDatum& c, unsigned m) {
  c.validate();
  if (m == 0) throw PreconditionError("base change degree must be positive");
  CurveDatum out;
  out.q = checked_pow(c.q, m);
  out.weil_numerator = root_power_transform(weil_eigenvalue_poly(c), m).reversed();
  out.s_degrees = split_places(c.s_degrees, m);
  out.t_degrees = split_places(c.t_degrees, m);
  return out;
}

IntPoly place_eigenvalue_poly(const std::vector<unsigned>& degrees) {
  IntPoly out = IntPoly::constant(1);
  for (auto d : degrees) out = out * (IntPoly::monomial(1, d) - IntPoly::constant(1));
  return out;
}

IntPoly j_polynomial(const CurveDatum& c) {
  IntPoly f = weil_eigenvalue_poly(c) * place_eigenvalue_poly(c.s_degrees);
  const IntPoly x_minus_1{-1, 1};
  try {
    return exact_div(f, x_minus_1 * x_minus_1);
  } catch (const InexactDivision&) {
    throw PreconditionError("J_X u J_S needs the eigenvalue 1 twice (|S| >= 2)");
  }
}

SymPoly h0_det(const std::vector<unsigned>& degrees, const ArtinTateMotive& m) {
  const std::vector<std::string> vars{"t", "q"};
  SymPoly out = SymPoly::constant(vars, 1);
  for (auto e : degrees) {
    SymPoly f = frobenius_det(base_change(m, e));
    out = out * f.inflate(0, e).inflate(1, e);
  }
  return out;
}

IntPoly h0_det_at(const std::vector<unsigned>& degrees, const ArtinTateMotive& m, const BigInt& q) {
  IntPoly out = IntPoly::constant(1);
  for (auto e : degrees)
    out = out * frobenius_det_at(base_change(m, e), ipow(q, e)).inflate(e);
  return out;
}

}  // namespace cuspcount
