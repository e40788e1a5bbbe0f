#pragma once

#include <cstdint>
#include <vector>

#include "cuspcount/int_poly.hpp"
#include "cuspcount/motive.hpp"
#include "cuspcount/sym_poly.hpp"

namespace cuspcount {

// A curve over F_q known through its Weil numerator P(t), together with the
// degrees of the places in S and T.
struct CurveDatum {
  std::uint64_t q = 0;
  IntPoly weil_numerator = IntPoly::constant(1);
  std::vector<unsigned> s_degrees;
  std::vector<unsigned> t_degrees;

  void validate() const;  // throws PreconditionError
  unsigned genus() const { return static_cast<unsigned>(weil_numerator.degree() / 2); }

  friend bool operator==(const CurveDatum& a, const CurveDatum& b) {
    return a.q == b.q && a.weil_numerator == b.weil_numerator && a.s_degrees == b.s_degrees &&
           a.t_degrees == b.t_degrees;
  }
};

CurveDatum projective_line(std::uint64_t q, std::vector<unsigned> s_degrees, std::vector<unsigned> t_degrees = {});
// Genus-one datum with P(t) = 1 - a t + q t^2.
CurveDatum elliptic_curve(std::uint64_t q, long trace, std::vector<unsigned> s_degrees,
                          std::vector<unsigned> t_degrees = {});

// Monic polynomial whose roots are the Frobenius eigenvalues J_X.
IntPoly weil_eigenvalue_poly(const CurveDatum& c);
// Places of degree d split into gcd(d, m) places of degree d / gcd(d, m).
std::vector<unsigned> split_places(const std::vector<unsigned>& degrees, unsigned m);
CurveDatum base_change(const CurveDatum& c, unsigned m);

// prod_v (x^deg v - 1): Frobenius on H^0 acts by permutations.
IntPoly place_eigenvalue_poly(const std::vector<unsigned>& degrees);
// Polynomial with roots J_X u J_S minus two copies of 1 (needs a degree-1
// root of multiplicity >= 2, i.e. |S| >= 2).
IntPoly j_polynomial(const CurveDatum& c);

// prod_v det(1 - t^deg v Fr^deg v | M) in variables (t, q).
SymPoly h0_det(const std::vector<unsigned>& degrees, const ArtinTateMotive& m);
// The same with q specialized.
IntPoly h0_det_at(const std::vector<unsigned>& degrees, const ArtinTateMotive& m, const BigInt& q);

}  // namespace cuspcount
