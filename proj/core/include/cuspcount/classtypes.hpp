#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cuspcount/bigint.hpp"
#include "cuspcount/motive.hpp"
#include "cuspcount/rational_function.hpp"

namespace cuspcount {

enum class Parity { Odd, Even };
Parity parity_of(std::uint64_t q);
std::string to_string(Parity p);

// Weighted partition n = sum a_i d_i; pairs are (d_i, a_i), sorted ascending.
struct SLType {
  std::vector<std::pair<unsigned, unsigned>> pairs;

  SLType() = default;
  explicit SLType(std::vector<std::pair<unsigned, unsigned>> p);
  unsigned n() const;
  std::size_t r() const { return pairs.size(); }
  // "d:a+d:a"
  std::string label() const;
  friend bool operator==(const SLType& a, const SLType& b) { return a.pairs == b.pairs; }
  friend bool operator<(const SLType& a, const SLType& b) { return a.pairs < b.pairs; }
};

// (a+, a-; (d_i, b_i); (e_j, c_j)) with a+ >= a-; unitary pairs (d, b) stand
// for a self-reciprocal irreducible factor of degree 2d with multiplicity b,
// general-linear pairs (e, c) for a pair Q Q* of degree-e factors.
struct SpType {
  unsigned a_plus = 0;
  unsigned a_minus = 0;
  std::vector<std::pair<unsigned, unsigned>> unitary;
  std::vector<std::pair<unsigned, unsigned>> gl;

  SpType() = default;
  SpType(unsigned ap, unsigned am, std::vector<std::pair<unsigned, unsigned>> u,
         std::vector<std::pair<unsigned, unsigned>> g = {});
  unsigned n() const;  // half-dimension
  bool has_gl() const { return !gl.empty(); }
  // "a+/a-/d:b+d:b/e:c", "-" for an empty list
  std::string label() const;
  friend bool operator==(const SpType& a, const SpType& b) {
    return a.a_plus == b.a_plus && a.a_minus == b.a_minus && a.unitary == b.unitary && a.gl == b.gl;
  }
  friend bool operator<(const SpType& a, const SpType& b);
};

SLType parse_sl_type(const std::string& label);
SpType parse_sp_type(const std::string& label);

std::vector<SLType> enumerate_sl_types(unsigned n);
// Types of semisimple classes of Sp_2n; with include_gl false only the types
// without general-linear blocks (the ones whose L_S can be nonzero).
std::vector<SpType> enumerate_sp_types(unsigned n, Parity parity, bool include_gl = false);

ArtinTateMotive centralizer_motive(const SLType& t);
ArtinTateMotive centralizer_motive(const SpType& t);

// det(1 - Fr | M) / det(1 - q Fr | M) for the SL centralizer, in the variable q.
RationalFunction ratio_at_one(const SLType& t);
// The same ratio computed directly from the centralizer motive.
RationalFunction ratio_from_motive(const ArtinTateMotive& m);

// Number of irreducible monic P of degree d with P(0)^(n/d) = (-1)^n.
BigInt count_sl(unsigned n, unsigned d, std::uint64_t q);
// Self-reciprocal irreducible monics of degree two_n.
BigInt s_count(unsigned two_n, std::uint64_t q);
// Unordered pairs {Q, Q*} of distinct irreducible monics of degree e, Q(0) != 0.
BigInt gl_pair_count(unsigned e, std::uint64_t q);
// Number of semisimple classes of Sp_2n(F_q) of the given type.
BigInt count_sp(const SpType& t, std::uint64_t q);
// N_tau as a polynomial in x with rational coefficients, valid for all q of
// the given parity (types without general-linear blocks).
RationalFunction count_sp_polynomial(const SpType& t, Parity parity);

BigInt falling_factorial(const BigInt& s, unsigned k);

}  // namespace cuspcount
