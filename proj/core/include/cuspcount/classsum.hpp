#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cuspcount/bigint.hpp"
#include "cuspcount/classtypes.hpp"
#include "cuspcount/geometry.hpp"
#include "cuspcount/motive.hpp"
#include "cuspcount/rational_function.hpp"
#include "cuspcount/sym_poly.hpp"

namespace cuspcount {

inline constexpr unsigned kDefaultMaxArity = 4;

// Sum over the semisimple classes of SL_n(F_q) or Sp_2n(F_q) of L_S of the
// centralizer motive. Needs T empty and |S| >= 2.
BigRational class_sum(const GroupSpec& spec, const CurveDatum& c);

// P^1 over F_q with two degree-one places: the class sum must be exactly 1.
bool verify_sum_identity(const GroupSpec& spec, std::uint64_t q);

struct CertificateCheck {
  std::string label;
  bool passed = false;
  std::string witness;
};

struct SymbolicCertificate {
  std::string family;  // "sl-prime", "sl-general" or "sp"
  GroupSpec group;
  unsigned j_arity = 0;
  // In the variables x, a1 .. a{j_arity}.
  SymPoly polynomial;
  // False when integrality was certified through residues only and the
  // quotient itself was too large to expand.
  bool materialized = true;
  // Closed forms selected by q mod `modulus`: forms[0] when q = 1, forms[1]
  // otherwise (SL_l only).
  std::uint64_t modulus = 0;
  std::vector<std::pair<std::string, SymPoly>> forms;
  std::vector<CertificateCheck> checks;

  bool all_passed() const;
  // Value at x = q and the a's set to J_X u J_S - {1, 1} of the datum.
  BigRational evaluate(const CurveDatum& c) const;
};

// Evaluates a polynomial in x, a1..ar at x = q and the roots of j_polynomial(c).
BigRational evaluate_at_datum(const SymPoly& p, const CurveDatum& c);

// H_1 - H_l divided by 1 + x + ... + x^(l-1).
SymbolicCertificate sl_prime_certificate(unsigned ell, unsigned r, unsigned max_arity = kDefaultMaxArity);

// sum_{d | n} H_{n'n, d'd}(x, J) M_{n,d}(x) in Z[x, J].
SymbolicCertificate sl_script_p(unsigned n, unsigned r, unsigned n_prime = 1, unsigned d_prime = 1,
                                unsigned max_arity = kDefaultMaxArity);

// H_{N,D}(x, J) over the variables x, a1..ar.
SymPoly sl_h_polynomial(unsigned big_n, unsigned big_d, unsigned r);

// Sp_4 (n = 2) and Sp_6 (n = 3).
SymbolicCertificate sp_certificate(unsigned n, Parity parity, unsigned r, unsigned max_arity = kDefaultMaxArity);

// A = prod (1+a)^k together with B, C, D cleared by A, so that
// ab = A*B, ac = A*C, ad = A*D are polynomials in the a's.
struct DerivativeWitness {
  SymPoly a;
  SymPoly ab;
  SymPoly ac;
  SymPoly ad;
};
DerivativeWitness derivative_witness(unsigned k, unsigned r);

// prod over a1..ar of det(1 - a Fr | M) with q replaced by x.
SymPoly centralizer_h(const ArtinTateMotive& m, unsigned r);

// sum_tau N_tau(x) det(1 - Fr | M_tau)/det(1 - x Fr | M_tau) H_tau(x, J)
// assembled from the type enumeration for any Sp_2n.
RationalFunction sp_assembled_sum(unsigned n, Parity parity, unsigned r);

// Assemble-and-test for Sp_2n beyond the proved cases. The outcome is
// evidence only: no divisibility argument backs it.
struct SpEvidence {
  unsigned n = 0;
  Parity parity = Parity::Odd;
  unsigned r = 0;
  std::size_t types = 0;
  bool polynomial = false;
  bool integral = false;
  RationalFunction sum;
};
SpEvidence sp_evidence(unsigned n, Parity parity, unsigned r);

// The variables x, a1 .. ar.
std::vector<std::string> certificate_variables(unsigned r);

}  // namespace cuspcount
