#pragma once

#include <string>
#include <vector>

#include "cuspcount/bigint.hpp"

namespace cuspcount {

inline constexpr unsigned kMaxConductor = 10000;

// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1), reduced
// modulo Phi_N. Rational values always carry conductor 1.
class CyclotomicRational {
 public:
  CyclotomicRational() = default;
  CyclotomicRational(long value) : CyclotomicRational(BigRational(value)) {}  // NOLINT
  CyclotomicRational(const BigInt& value) : CyclotomicRational(BigRational(value)) {}  // NOLINT
  CyclotomicRational(const BigRational& value);  // NOLINT
  CyclotomicRational(unsigned conductor, std::vector<BigRational> coeffs);

  // zeta_n^k
  static CyclotomicRational root_of_unity(unsigned n, long k = 1);

  unsigned conductor() const { return conductor_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  // Same value written over Q(zeta_L); N must divide L.
  CyclotomicRational lift(unsigned conductor) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  BigRational rational_value() const;  // throws if not rational
  // All power-basis coordinates are integers (membership in Z[zeta_N]).
  bool has_integral_coordinates() const;

  CyclotomicRational operator-() const;
  friend CyclotomicRational operator+(const CyclotomicRational& a, const CyclotomicRational& b);
  friend CyclotomicRational operator-(const CyclotomicRational& a, const CyclotomicRational& b);
  friend CyclotomicRational operator*(const CyclotomicRational& a, const CyclotomicRational& b);
  friend CyclotomicRational operator/(const CyclotomicRational& a, const CyclotomicRational& b);
  friend bool operator==(const CyclotomicRational& a, const CyclotomicRational& b);
  friend bool operator!=(const CyclotomicRational& a, const CyclotomicRational& b) { return !(a == b); }
  // Total order on values written at a common conductor; used for sorting.
  friend bool less_at_common_conductor(const CyclotomicRational& a, const CyclotomicRational& b);

  CyclotomicRational inverse() const;
  CyclotomicRational pow(long e) const;

  // e.g. "3", "z6 - 1/2" (z6 = exp(2 pi i / 6)).
  std::string to_string() const;

 private:
  void normalize();
  unsigned conductor_ = 1;
  std::vector<BigRational> coeffs_;
};

unsigned lcm_conductor(unsigned a, unsigned b);

}  // namespace cuspcount
