#pragma once

#include <string>
#include <vector>

#include "cuspcount/bigint.hpp"
#include "cuspcount/geometry.hpp"
#include "cuspcount/lefschetz.hpp"
#include "cuspcount/motive.hpp"
#include "cuspcount/rational_function.hpp"
#include "cuspcount/root_reduction.hpp"

namespace cuspcount {

// L_{S,T}(M) at s = 0.
BigRational l_value(const ArtinTateMotive& m, const CurveDatum& c);

// Z as a function of x (standing for q) and symbolic eigenvalues
// a1..aA for J_X u J_S - {1} and b1..bB for J_T - {1}.
struct ZPolynomial {
  RationalFunction value;
  bool polynomial = false;  // false when T is empty and the division fails
  std::vector<RootGroup> groups;
  ArtinTateMotive motive;
  bool has_t = false;

  // Z(q, J) with the groups' roots substituted.
  BigRational evaluate(const BigInt& q) const;
  // Z(q^k, J^k), the motive's eigenvalues included.
  BigRational evaluate_power(const BigInt& q, unsigned k) const;
  std::string label() const { return polynomial ? "polynomial" : "rational, not polynomial"; }
};

ZPolynomial z_polynomial(const ArtinTateMotive& m, const CurveDatum& c);

// Sign times L_{S,T}(M_G) for G = SL_n or Sp_2n; with fixed_chi false the
// count over all central characters. These equal multiplicities only under
// the conjectures the counting theorem assumes.
BigRational multiplicity_sum(const GroupSpec& spec, const CurveDatum& c, bool fixed_chi);

unsigned group_rank(const GroupSpec& spec);
// #Z(F_Q) for the center of SL_n or Sp_2n.
BigInt center_order(const GroupSpec& spec, const BigInt& field_size);

}  // namespace cuspcount
