#pragma once

#include "cuspcount/int_poly.hpp"

namespace cuspcount {

// Phi_n, memoized. Safe to call from several threads.
const IntPoly& cyclotomic(unsigned n);

// Multiplicity of Phi_n in p (p nonzero).
unsigned cyclotomic_multiplicity(const IntPoly& p, unsigned n);

// True when p is +-1 times a product of cyclotomic polynomials Phi_k with
// k <= max_order (the u - 1 factors appear as 1 - u).
bool is_cyclotomic_product(const IntPoly& p, unsigned max_order);

}  // namespace cuspcount
