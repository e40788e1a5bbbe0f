#include <doctest.h>

#include <random>

#include "cuspcount/error.hpp"
#include "cuspcount/cyclotomic.hpp"
#include "cuspcount/cyclotomic_field.hpp"
#include "cuspcount/int_poly.hpp"
#include "cuspcount/number_theory.hpp"
#include "cuspcount/rational_function.hpp"
#include "cuspcount/root_reduction.hpp"
#include "cuspcount/sym_poly.hpp"

using namespace cuspcount;

TEST_CASE("mobius and phi agree with brute force") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::uint64_t coprime = 0;
    for (std::uint64_t k = 1; k <= n; ++k) coprime += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == coprime);
    long sum = 0;
    for (auto d : divisors(n)) sum += mobius(d);
    CHECK(sum == (n == 1 ? 1 : 0));
  }
  CHECK(is_prime_power(49));
  CHECK_FALSE(is_prime_power(12));
  CHECK_THROWS_AS(checked_pow(10, 30), PreconditionError);
}

TEST_CASE("x^n - 1 is the product of Phi_d over d | n") {
  for (unsigned n = 1; n <= 40; ++n) {
    IntPoly prod = IntPoly::constant(1);
    for (auto d : divisors(n)) prod = prod * cyclotomic(static_cast<unsigned>(d));
    CHECK(prod == IntPoly::monomial(1, n) - IntPoly::constant(1));
  }
}

TEST_CASE("resultant against the product of root differences") {
  // Res(prod (x - a_i), prod (x - b_j)) = prod (a_i - b_j)
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> a(1 + trial % 3), b(1 + trial % 4);
    IntPoly pa = IntPoly::constant(1), pb = IntPoly::constant(1);
    for (auto& x : a) pa = pa * IntPoly{-(x = dist(rng)), 1};
    for (auto& x : b) pb = pb * IntPoly{-(x = dist(rng)), 1};
    BigInt expected = 1;
    for (long x : a)
      for (long y : b) expected *= x - y;
    CHECK(resultant(pa, pb) == expected);
  }
}

TEST_CASE("exact division and its failure") {
  const IntPoly a = IntPoly{1, 1} * IntPoly{-2, 0, 3};
  CHECK(exact_div(a, IntPoly{1, 1}) == IntPoly({-2, 0, 3}));
  CHECK_THROWS_AS(exact_div(a, IntPoly{1, 2}), InexactDivision);
}

TEST_CASE("polynomial printing is ascending with explicit operators") {
  const std::vector<std::string> vars{"t", "q"};
  const SymPoly t = SymPoly::variable(vars, "t"), q = SymPoly::variable(vars, "q");
  const SymPoly one = SymPoly::constant(vars, 1);
  CHECK((one - t * pow(q, 3)).to_string() == "1 - t*q^3");
  CHECK(IntPoly({1, -1, 2}).to_string() == "1 - x + 2*x^2");
}

TEST_CASE("rational functions normalize") {
  const std::vector<std::string> vars{"x"};
  const SymPoly x = SymPoly::variable(vars, "x"), one = SymPoly::constant(vars, 1);
  const RationalFunction f(x * x - one, x - one);
  CHECK(f.is_polynomial());
  CHECK(f == RationalFunction(x + one));
  CHECK(f.eval({{"x", BigRational(5)}}) == 6);
}

TEST_CASE("symmetric evaluation at roots matches power sums") {
  // a1^k + a2^k + a3^k over the roots of x^3 - 2x + 5, by Newton's identities.
  const IntPoly p{5, -2, 0, 1};
  const auto names = indexed_names("a", 3);
  std::vector<std::string> vars(names);
  std::vector<BigRational> newton{3, 0, 4, -15};  // p_0 .. p_3
  for (unsigned k = 4; k <= 7; ++k) newton.push_back(2 * newton[k - 2] - 5 * newton[k - 3]);
  for (unsigned k = 1; k <= 7; ++k) {
    SymPoly s(vars);
    for (const auto& v : names) s += pow(SymPoly::variable(vars, v), k);
    CHECK(eval_at_roots(s, {{names, p}}, {}) == newton[k]);
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  const auto z = CyclotomicRational::root_of_unity(6);
  CHECK(z.pow(6) == CyclotomicRational(1L));
  CHECK(z.pow(3) == CyclotomicRational(-1L));
  CHECK(z * z.inverse() == CyclotomicRational(1L));
  // 1 + w + w^2 = 0 for a primitive cube root
  const auto w = CyclotomicRational::root_of_unity(3);
  CHECK((CyclotomicRational(1L) + w + w * w).is_zero());
  CHECK(CyclotomicRational::root_of_unity(12, 4) == w);
}
