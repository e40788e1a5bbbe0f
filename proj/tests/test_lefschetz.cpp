#include <doctest.h>

#include <numeric>

#include "cuspcount/error.hpp"
#include "cuspcount/geometry.hpp"
#include "cuspcount/lefschetz.hpp"

using namespace cuspcount;

TEST_CASE("canonical form merges equal bases") {
  const auto z4 = CyclotomicRational::root_of_unity(4);
  const LefschetzFunction f = LefschetzFunction::power(z4) + LefschetzFunction::power(z4, 2L) -
                              LefschetzFunction::power(z4, 3L);
  CHECK(f.size() == 0);
  CHECK(LefschetzFunction::chi(4).size() == 4);
  CHECK(LefschetzFunction::chi(4) == LefschetzFunction::chi(2) * LefschetzFunction::chi(2) +
                                         LefschetzFunction::chi(4) - LefschetzFunction::chi(2) * LefschetzFunction::chi(2));
}

TEST_CASE("chi_n is n on multiples of n and 0 elsewhere") {
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned m = 1; m <= 30; ++m) CHECK(LefschetzFunction::chi(n).evaluate(m) == CyclotomicRational(m % n ? 0L : long(n)));
}

TEST_CASE("f_N of a sum of two powers") {
  const LefschetzFunction f = LefschetzFunction::power(2L) + LefschetzFunction::power(-3L, 5L);
  for (unsigned n : {5U, 8U, 9U, 10U}) {
    TransformStats stats;
    const LefschetzFunction g = f_N_transform(f, n, &stats);
    CHECK(g.has_integral_coefficients());
    for (unsigned m = 1; m <= 3 * n; ++m)
      CHECK(g.evaluate(m) == f.evaluate(std::lcm(n, m)).pow(std::gcd(n, m)));
  }
}

TEST_CASE("lefschetz_fit recovers known functions and rejects wrong bases") {
  const LefschetzFunction f = 3L * LefschetzFunction::power(4L) - LefschetzFunction::chi(2);
  std::vector<BigRational> values;
  for (unsigned m = 1; m <= 8; ++m) values.push_back(f.evaluate(m).rational_value());
  const FitResult ok = lefschetz_fit(values, {1L, -1L, 4L});
  CHECK(ok.ok);
  CHECK(ok.function == f);
  const FitResult bad = lefschetz_fit(values, {1L, 4L});
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.diagnostic.empty());
}

TEST_CASE("place product of the constant 1 counts nothing") {
  const LefschetzFunction one = LefschetzFunction::constant(1L);
  CHECK(place_product(one, {2, 3}) == one);
  // f = q^m over a single place of degree 2: m -> f(lcm(2, m))^gcd(2, m)
  const LefschetzFunction f = LefschetzFunction::power(3L);
  const LefschetzFunction g = place_product(f, {2});
  for (unsigned m = 1; m <= 10; ++m)
    CHECK(g.evaluate(m) == f.evaluate(std::lcm(2U, m)).pow(std::gcd(2U, m)));
}
