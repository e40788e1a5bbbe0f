#pragma once

#include <cstdint>
#include <map>

#include "cuspcount/classtypes.hpp"
#include "cuspcount/finite_field.hpp"
#include "cuspcount/motive.hpp"

namespace cuspcount::oracle {

inline constexpr std::uint64_t kCensusBudget = 10'000'000;

// Semisimple classes of SL_n(F_q) by type, from the monic degree-n
// polynomials with constant term (-1)^n.
std::map<SLType, std::uint64_t> sl_census(unsigned n, const FiniteField& f, std::uint64_t budget = kCensusBudget);

// Semisimple classes of Sp_2n(F_q) by type, from the palindromic monic
// degree-2n polynomials with constant term 1 whose multiplicities at x - 1
// and x + 1 are even. Includes types with general-linear blocks.
std::map<SpType, std::uint64_t> sp_census(unsigned n, const FiniteField& f, std::uint64_t budget = 1'000'000);

std::uint64_t self_reciprocal_irreducible_census(const FiniteField& f, unsigned two_n,
                                                 std::uint64_t budget = 1'000'000);

struct MatrixCensus {
  std::uint64_t group_order = 0;
  std::uint64_t semisimple_classes = 0;
  std::uint64_t polynomial_classes = 0;      // from the polynomial-level census
  std::map<FPoly, std::uint64_t> classes_per_charpoly;
  bool bijection = false;                    // one class per admissible charpoly
};

// Brute force over SL_2 / Sp_2 (any small q) and Sp_4 (q = 2).
MatrixCensus matrix_census_tiny(const GroupSpec& group, const FiniteField& f, std::uint64_t budget = 100'000);

}  // namespace cuspcount::oracle
