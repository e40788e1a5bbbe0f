#pragma once

#include <string>
#include <vector>

#include "cuspcount/int_poly.hpp"
#include "cuspcount/sym_poly.hpp"

namespace cuspcount {

// A block of variables standing for the full root multiset of a monic
// integer polynomial.
struct RootGroup {
  std::vector<std::string> variables;
  IntPoly roots_of;
};

// Evaluates p at the roots of each group's polynomial, using the Cauchy
// modules of the splitting algebra. p must be symmetric in each group;
// otherwise the group variables survive and PreconditionError is thrown.
// Variables outside the groups are left untouched.
SymPoly reduce_at_roots(const SymPoly& p, const std::vector<RootGroup>& groups);

// Convenience for polynomials whose remaining variables are all assigned.
BigRational eval_at_roots(const SymPoly& p, const std::vector<RootGroup>& groups,
                          const std::map<std::string, BigRational>& others);

// Names prefix1 .. prefixN.
std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count);

}  // namespace cuspcount
