#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cuspcount/bigint.hpp"

namespace cuspcount {

// Dense univariate polynomial over the integers, coefficient i multiplies x^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  static IntPoly x();

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;

  BigInt eval(const BigInt& at) const;
  BigRational eval(const BigRational& at) const;
  IntPoly derivative() const;
  // x^n p(1/x) with n = degree().
  IntPoly reversed() const;
  // p(x^k)
  IntPoly inflate(std::size_t k) const;
  // p(c*x)
  IntPoly scale_argument(const BigInt& c) const;
  IntPoly compose(const IntPoly& inner) const;

  BigInt content() const;  // nonnegative gcd of coefficients
  IntPoly primitive_part() const;
  IntPoly divide_exact(const BigInt& d) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  // Ascending exponents, e.g. "1 - x + 2*x^2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly pow(const IntPoly& p, unsigned e);

struct IntDivRem {
  IntPoly quotient;
  IntPoly remainder;
};

// Division that is exact over Z when lc(b) = +-1; with another leading
// coefficient every step must divide exactly or InexactDivision is thrown.
IntDivRem divrem(const IntPoly& a, const IntPoly& b);
// Throws InexactDivision unless b divides a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
// lc(b)^(deg a - deg b + 1) a = q b + r
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Subresultant PRS. Throws PreconditionError on a zero input.
BigInt resultant(const IntPoly& p, const IntPoly& q);

// Monic polynomial whose roots are the m-th powers of the roots of w.
IntPoly root_power_transform(const IntPoly& w, unsigned m);

}  // namespace cuspcount
