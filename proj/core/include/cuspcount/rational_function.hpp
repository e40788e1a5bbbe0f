#pragma once

#include <map>
#include <string>

#include "cuspcount/sym_poly.hpp"

namespace cuspcount {

// Quotient of two SymPolys over the same variables. Normalized so that the
// integer contents are coprime, the highest term of the denominator is
// positive and, when the denominator only involves variable 0, the gcd in
// that variable is cancelled.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(SymPoly numerator);
  RationalFunction(SymPoly numerator, SymPoly denominator);

  const SymPoly& numerator() const { return num_; }
  const SymPoly& denominator() const { return den_; }
  const std::vector<std::string>& variables() const { return num_.variables(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  SymPoly to_polynomial() const;  // throws InexactDivision

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  // Throws PreconditionError if the denominator vanishes at the point.
  BigRational eval(const std::map<std::string, BigRational>& at) const;

  std::string to_string() const;

 private:
  void normalize();
  SymPoly num_;
  SymPoly den_ = SymPoly::constant({}, 1);
};

}  // namespace cuspcount
