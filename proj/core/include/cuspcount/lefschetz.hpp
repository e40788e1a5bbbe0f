#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cuspcount/cyclotomic_field.hpp"

namespace cuspcount {

// f(m) = sum_i coeff_i * base_i^m. Canonical form: bases distinct and nonzero,
// coefficients nonzero, terms sorted by base.
class LefschetzFunction {
 public:
  struct Term {
    CyclotomicRational coeff;
    CyclotomicRational base;
  };

  LefschetzFunction() = default;
  explicit LefschetzFunction(std::vector<Term> terms);

  static LefschetzFunction constant(const CyclotomicRational& c);
  static LefschetzFunction power(const CyclotomicRational& base, const CyclotomicRational& coeff = 1L);
  // chi_n(m) = n if n | m, else 0.
  static LefschetzFunction chi(unsigned n);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  CyclotomicRational evaluate(unsigned long m) const;
  // f(m) is an integer for m = 1 .. max(1, term count).
  bool is_integer_valued() const;
  // Every coefficient lies in Z[zeta].
  bool has_integral_coefficients() const;

  friend LefschetzFunction operator+(const LefschetzFunction& a, const LefschetzFunction& b);
  friend LefschetzFunction operator-(const LefschetzFunction& a, const LefschetzFunction& b);
  friend LefschetzFunction operator*(const LefschetzFunction& a, const LefschetzFunction& b);
  friend LefschetzFunction operator*(const CyclotomicRational& c, const LefschetzFunction& a);
  friend bool operator==(const LefschetzFunction& a, const LefschetzFunction& b);
  friend bool operator!=(const LefschetzFunction& a, const LefschetzFunction& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

bool equals(const LefschetzFunction& f, const LefschetzFunction& g);
LefschetzFunction pow(const LefschetzFunction& f, unsigned e);
// m -> f(l m)
LefschetzFunction compose_scale(const LefschetzFunction& f, unsigned l);

struct TransformStats {
  std::size_t exact_divisions = 0;
};

// m -> f(lcm(N, m))^gcd(N, m), via the prime-power recursion
// f_{l^e} = (g)_{l^(e-1)} + chi_{l^e} h with g(m) = f(l m) and
// h = (f^(l^e) - g^(l^(e-1))) / l^e. Each division is checked to be exact.
LefschetzFunction f_N_transform(const LefschetzFunction& f, unsigned N, TransformStats* stats = nullptr);

// m -> prod_{w in T_m} f(m deg w) for T with the given place degrees.
LefschetzFunction place_product(const LefschetzFunction& f, const std::vector<unsigned>& degrees,
                                TransformStats* stats = nullptr);

struct FitResult {
  bool ok = false;
  LefschetzFunction function;
  std::string diagnostic;
};

// Solves sum_i n_i b_i^m = values[m-1] on the first |bases| points and checks
// the remaining ones.
FitResult lefschetz_fit(const std::vector<BigRational>& values, const std::vector<CyclotomicRational>& bases);

}  // namespace cuspcount
