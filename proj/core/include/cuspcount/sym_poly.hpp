#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cuspcount/bigint.hpp"
#include "cuspcount/int_poly.hpp"

namespace cuspcount {

inline constexpr std::size_t kMaxVars = 12;
using Monomial = std::array<std::uint16_t, kMaxVars>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Sparse polynomial over Z in a fixed, named list of variables. Terms are
// kept sorted by lexicographic exponent order (variable 0 most significant)
// with no zero coefficients.
class SymPoly {
 public:
  using Term = std::pair<Monomial, BigInt>;

  SymPoly() = default;
  explicit SymPoly(std::vector<std::string> vars);

  static SymPoly constant(std::vector<std::string> vars, const BigInt& c);
  static SymPoly variable(std::vector<std::string> vars, const std::string& name);
  static SymPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms);
  // Univariate polynomial placed in variable `var`.
  static SymPoly from_univariate(std::vector<std::string> vars, std::size_t var, const IntPoly& p);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  std::size_t index_of(const std::string& name) const;
  bool has_variable(const std::string& name) const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt constant_term() const;
  BigInt coefficient(const Monomial& m) const;
  int degree(std::size_t var) const;  // -1 for zero
  bool involves(std::size_t var) const { return degree(var) > 0; }

  SymPoly operator-() const;
  SymPoly& operator+=(const SymPoly& b);
  SymPoly& operator-=(const SymPoly& b);
  SymPoly& operator*=(const SymPoly& b);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const BigInt& c, const SymPoly& a);
  friend bool operator==(const SymPoly& a, const SymPoly& b);
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

  SymPoly derivative(std::size_t var) const;
  // Every variable must be assigned; throws PreconditionError otherwise.
  BigRational eval(const std::map<std::string, BigRational>& at) const;
  SymPoly substitute(std::size_t var, const BigInt& value) const;
  SymPoly substitute(std::size_t var, const SymPoly& value) const;
  // var -> var^k
  SymPoly inflate(std::size_t var, unsigned k) const;
  // var -> c * var
  SymPoly scale_variable(std::size_t var, const BigInt& c) const;
  // Exchange the exponents of two variables.
  SymPoly swap_variables(std::size_t a, std::size_t b) const;
  // Re-express over another variable list; variables in use must be present.
  SymPoly with_variables(const std::vector<std::string>& vars) const;

  BigInt content() const;
  SymPoly divide_exact(const BigInt& d) const;
  bool coefficients_divisible_by(const BigInt& p) const;
  // Coefficient images reduced to the symmetric range mod p.
  SymPoly reduce_mod(const BigInt& p) const;

  // Throws PreconditionError if any other variable occurs.
  IntPoly to_univariate(std::size_t var) const;
  // result[k] is the coefficient of var^k (as a polynomial without var).
  std::vector<SymPoly> coefficients_in(std::size_t var) const;
  static SymPoly from_coefficients(std::vector<std::string> vars, std::size_t var, const std::vector<SymPoly>& coeffs);

  // Ascending term order, explicit `*` and `^`, e.g. "1 - t*q^3".
  std::string to_string() const;

 private:
  void require_same_vars(const SymPoly& b) const;
  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

SymPoly pow(const SymPoly& p, unsigned e);

struct SymDivRem {
  SymPoly quotient;
  SymPoly remainder;
};

// Division in variable `var`. The leading coefficient of b in var must be an
// integer constant; if it is not +-1, every step must divide exactly.
SymDivRem divrem(const SymPoly& a, const SymPoly& b, std::size_t var);
SymPoly exact_div(const SymPoly& a, const SymPoly& b, std::size_t var);

}  // namespace cuspcount
