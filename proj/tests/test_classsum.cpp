#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cuspcount/error.hpp"
#include "cuspcount/census.hpp"
#include "cuspcount/classsum.hpp"
#include "cuspcount/classtypes.hpp"
#include "cuspcount/finite_field.hpp"
#include "cuspcount/lfun.hpp"

using namespace cuspcount;

namespace {

// Class sum assembled from the brute-force census instead of the counting
// formulas.
BigRational census_sum(const GroupSpec& g, const CurveDatum& c) {
  const auto f = oracle::FiniteField::of_order(c.q);
  BigRational total = 0;
  if (g.kind == GroupSpec::Kind::SL) {
    for (const auto& [type, count] : oracle::sl_census(g.param, f)) {
      const ArtinTateMotive m = centralizer_motive(type);
      if (ratio_from_motive(m).is_zero()) continue;
      total += BigRational(BigInt(static_cast<unsigned long>(count))) * l_value(m, c);
    }
  } else {
    for (const auto& [type, count] : oracle::sp_census(g.param / 2, f)) {
      const ArtinTateMotive m = centralizer_motive(type);
      if (ratio_from_motive(m).is_zero()) continue;
      total += BigRational(BigInt(static_cast<unsigned long>(count))) * l_value(m, c);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("class sums from formulas equal class sums from the census") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (const CurveDatum& c : {projective_line(q, {1, 1}), projective_line(q, {1, 1, 2}),
                                elliptic_curve(q, 1, {1, 1})}) {
      for (unsigned n : {2U, 3U, 4U}) {
        if (std::gcd<std::uint64_t>(n, q - 1) != 1) continue;
        if (n <= 3 || (c.genus() == 0 && c.s_degrees.size() == 2)) {
          CAPTURE(n);
          CAPTURE(q);
          CHECK(class_sum(GroupSpec::sl(n), c) == census_sum(GroupSpec::sl(n), c));
        }
      }
      CHECK(class_sum(GroupSpec::sp(4), c) == census_sum(GroupSpec::sp(4), c));
    }
  }
}

TEST_CASE("sum identity on P^1 with two points") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    CHECK(verify_sum_identity(GroupSpec::sl(2), q));
    CHECK(verify_sum_identity(GroupSpec::sp(4), q));
  }
  CHECK_THROWS_AS(class_sum(GroupSpec::sl(2), projective_line(3, {1})), PreconditionError);
}

TEST_CASE("certificate polynomials are symmetric in the eigenvalue variables") {
  std::mt19937 rng(11);
  std::vector<SymbolicCertificate> certs{sl_prime_certificate(3, 3), sl_script_p(4, 3), sl_script_p(6, 2),
                                         sp_certificate(2, Parity::Odd, 3), sp_certificate(3, Parity::Even, 3)};
  for (const auto& cert : certs) {
    REQUIRE(cert.all_passed());
    REQUIRE(cert.materialized);
    const std::size_t r = cert.j_arity;
    for (int trial = 0; trial < 6 && r >= 2; ++trial) {
      std::uniform_int_distribution<std::size_t> pick(1, r);
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      CHECK(cert.polynomial.swap_variables(i, j) == cert.polynomial);
    }
  }
}

TEST_CASE("random elliptic data: Sp_4 certificate equals the class sum") {
  std::mt19937 rng(2024);
  const std::vector<std::uint64_t> qs{3, 4, 5, 7, 8, 9, 11, 13};
  const SymbolicCertificate odd = sp_certificate(2, Parity::Odd, 2);
  const SymbolicCertificate even = sp_certificate(2, Parity::Even, 2);
  for (int trial = 0; trial < 24; ++trial) {
    const std::uint64_t q = qs[rng() % qs.size()];
    const long bound = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(q))));
    const long a = std::uniform_int_distribution<long>(-bound, bound)(rng);
    const CurveDatum c = elliptic_curve(q, a, {1, 1});
    const SymbolicCertificate& cert = q % 2 ? odd : even;
    CAPTURE(q);
    CAPTURE(a);
    CHECK(cert.evaluate(c) == class_sum(GroupSpec::sp(4), c));
  }
}

TEST_CASE("SL_l closed forms by residue class") {
  const SymbolicCertificate cert = sl_prime_certificate(3, 1);
  REQUIRE(cert.forms.size() == 2);
  CHECK(cert.modulus == 3);
  // q = 4 is 1 mod 3 and q = 5 is not; both agree with the class sum.
  for (std::uint64_t q : {4, 5, 7, 8}) {
    const CurveDatum c = projective_line(q, {1, 1, 1});
    const auto& form = cert.forms[q % 3 == 1 ? 0 : 1].second;
    CHECK(evaluate_at_datum(form, c) == class_sum(GroupSpec::sl(3), c));
  }
}

TEST_CASE("derivative witness: A B, A C, A D are polynomials") {
  for (unsigned r = 1; r <= 3; ++r) {
    const DerivativeWitness w = derivative_witness(2, r);
    CHECK_FALSE(w.a.is_zero());
    CHECK_FALSE(w.ab.is_zero());
  }
}

TEST_CASE("Sp_8 assemble-and-test is reported as evidence") {
  const SpEvidence e = sp_evidence(4, Parity::Odd, 0);
  CHECK(e.types == enumerate_sp_types(4, Parity::Odd).size());
  CHECK(e.polynomial);
}
