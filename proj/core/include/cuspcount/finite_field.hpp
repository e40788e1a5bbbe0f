#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cuspcount::oracle {

using Elem = std::uint32_t;
// Coefficients low to high; monic polynomials end in 1.
using FPoly = std::vector<Elem>;

// F_q with q = p^k, elements encoded as integers whose base-p digits are the
// coefficients of a polynomial in the generator. The modulus is the
// lexicographically first monic irreducible of degree k over F_p.
class FiniteField {
 public:
  FiniteField(std::uint32_t p, unsigned k);
  static FiniteField of_order(std::uint64_t q);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  // The element p-adic digit encoding of an integer (mod p).
  Elem from_int(long v) const;

 private:
  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;            // exp_[i] = g^i, doubled for wraparound
  std::vector<std::uint32_t> log_;   // log_[a] for a != 0
  std::vector<Elem> add_table_;      // q*q when small
  std::vector<Elem> neg_;
};

// Polynomial helpers over a fixed field.
class PolyRing {
 public:
  explicit PolyRing(const FiniteField& f) : f_(f) {}
  const FiniteField& field() const { return f_; }

  void trim(FPoly& a) const;
  FPoly add(const FPoly& a, const FPoly& b) const;
  FPoly sub(const FPoly& a, const FPoly& b) const;
  FPoly mul(const FPoly& a, const FPoly& b) const;
  // Division by a nonzero polynomial; remainder in place of a, quotient returned.
  FPoly divrem(FPoly& a, const FPoly& b) const;
  FPoly rem(FPoly a, const FPoly& b) const;
  FPoly gcd(FPoly a, FPoly b) const;  // monic
  FPoly powmod(const FPoly& base, std::uint64_t e, const FPoly& m) const;
  FPoly make_monic(FPoly a) const;
  // Self-reciprocal partner P*(x) = P(0)^-1 x^deg P(1/x); requires P(0) != 0.
  FPoly reciprocal(const FPoly& a) const;
  bool is_irreducible(const FPoly& f) const;
  Elem eval(const FPoly& a, Elem x) const;
  std::string to_string(const FPoly& a) const;

 private:
  const FiniteField& f_;
};

struct Factor {
  FPoly poly;
  unsigned multiplicity;
};

// Monic irreducibles of degree d, optionally with a prescribed constant term.
// Throws BudgetExceeded when q^d (or q^(d-1) with a constraint) exceeds budget.
std::vector<FPoly> irreducible_monics(const FiniteField& f, unsigned d, std::optional<Elem> constant = std::nullopt,
                                      std::uint64_t budget = 10'000'000);
std::uint64_t count_irreducible_monics(const FiniteField& f, unsigned d, std::optional<Elem> constant = std::nullopt,
                                       std::uint64_t budget = 10'000'000);

// Factorization of a monic polynomial by root stripping and trial division
// against cached irreducibles.
class Factorizer {
 public:
  explicit Factorizer(const FiniteField& f, unsigned max_degree);
  std::vector<Factor> factor(FPoly f) const;

 private:
  const FiniteField& field_;
  PolyRing ring_;
  std::vector<std::vector<FPoly>> irreducibles_;  // by degree, degree >= 2
};

}  // namespace cuspcount::oracle
