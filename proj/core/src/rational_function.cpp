#include "cuspcount/rational_function.hpp"

#include <utility>

#include "cuspcount/error.hpp"

namespace cuspcount {
namespace {

bool only_first_variable(const SymPoly& p) {
  for (std::size_t i = 1; i < p.arity(); ++i)
    if (p.degree(i) > 0) return false;
  return true;
}

}  // namespace

RationalFunction::RationalFunction(SymPoly numerator)
    : num_(std::move(numerator)), den_(SymPoly::constant(num_.variables(), 1)) {}

RationalFunction::RationalFunction(SymPoly numerator, SymPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.variables() != den_.variables()) throw PreconditionError("rational function over mismatched variables");
  if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = SymPoly::constant(num_.variables(), 1);
    return;
  }
  if (den_.terms().back().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_.content(), den_.content());
  if (g != 1) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  if (num_.arity() == 0 || !only_first_variable(den_) || den_.is_constant()) return;
  IntPoly d = den_.to_univariate(0);
  // gcd with every coefficient of the numerator viewed in Z[x][others]
  std::map<Monomial, std::vector<BigInt>> groups;
  for (const auto& [m, c] : num_.terms()) {
    Monomial rest = m;
    rest[0] = 0;
    auto& v = groups[rest];
    if (v.size() <= m[0]) v.resize(m[0] + 1U);
    v[m[0]] = c;
  }
  IntPoly g_x = d;
  for (auto& [rest, v] : groups) {
    g_x = gcd(g_x, IntPoly(v));
    if (g_x.degree() == 0) return;
  }
  if (g_x.degree() <= 0) return;
  g_x = g_x.primitive_part();
  SymPoly gs = SymPoly::from_univariate(num_.variables(), 0, g_x);
  num_ = exact_div(num_, gs, 0);
  den_ = exact_div(den_, gs, 0);
  if (den_.terms().back().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool RationalFunction::is_polynomial() const {
  if (den_.is_constant()) return den_.constant_term() == 1;
  try {
    return divrem(num_, den_, 0).remainder.is_zero();
  } catch (const Error&) {
    return false;
  }
}

SymPoly RationalFunction::to_polynomial() const {
  if (den_.is_constant()) {
    if (den_.constant_term() != 1) throw InexactDivision("rational function has a constant denominator " + den_.to_string());
    return num_;
  }
  try {
    return exact_div(num_, den_, 0);
  } catch (const PreconditionError&) {
    throw InexactDivision("rational function is not a polynomial");
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

BigRational RationalFunction::eval(const std::map<std::string, BigRational>& at) const {
  BigRational d = den_.eval(at);
  if (d == 0) throw PreconditionError("rational function denominator vanishes");
  return num_.eval(at) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace cuspcount
