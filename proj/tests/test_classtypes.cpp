#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cuspcount/error.hpp"
#include "cuspcount/census.hpp"
#include "cuspcount/classtypes.hpp"
#include "cuspcount/finite_field.hpp"
#include "cuspcount/number_theory.hpp"
#include "cuspcount/table_goldens.hpp"

using namespace cuspcount;

TEST_CASE("finite field axioms on small fields") {
  for (std::uint64_t q : {2, 4, 8, 9, 25}) {
    const auto f = oracle::FiniteField::of_order(q);
    for (oracle::Elem a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, q) == a);
    }
  }
}

TEST_CASE("irreducible monic counts follow the necklace formula") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto f = oracle::FiniteField::of_order(q);
    for (unsigned d = 1; d <= 4; ++d) {
      long total = 0;
      for (auto e : divisors(d)) total += mobius(d / e) * static_cast<long>(checked_pow(q, static_cast<unsigned>(e)));
      CHECK(static_cast<long>(oracle::count_irreducible_monics(f, d)) * static_cast<long>(d) == total);
    }
  }
}

// A simply connected group has q^rank semisimple classes over F_q.
TEST_CASE("type counts add up to q^rank") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11}) {
    for (unsigned n = 1; n <= 4; ++n) {
      BigInt total = 0;
      for (const auto& t : enumerate_sp_types(n, parity_of(q), true)) total += count_sp(t, q);
      CHECK(total == BigInt(static_cast<unsigned long>(checked_pow(q, n))));
    }
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
    for (unsigned n = 2; n <= 6; ++n) {
      if (std::gcd<std::uint64_t>(n, q - 1) != 1) continue;
      // polynomial count by type: prod over (d, a) of a falling product of count_sl
      const auto f = oracle::FiniteField::of_order(q);
      std::uint64_t total = 0;
      for (const auto& [type, count] : oracle::sl_census(n, f)) total += count;
      CHECK(total == checked_pow(q, n - 1));
    }
  }
}

TEST_CASE("matrix brute force: one semisimple class per admissible characteristic polynomial") {
  for (std::uint64_t q : {2, 3, 5}) {
    const auto f = oracle::FiniteField::of_order(q);
    const auto sl2 = oracle::matrix_census_tiny(GroupSpec::sl(2), f);
    CHECK(sl2.group_order == q * (q * q - 1));
    CHECK(sl2.semisimple_classes == sl2.polynomial_classes);
  }
  const auto sp4 = oracle::matrix_census_tiny(GroupSpec::sp(4), oracle::FiniteField::of_order(2), 1'000'000);
  CHECK(sp4.group_order == 720);
  CHECK(sp4.bijection);
}

TEST_CASE("type labels round-trip") {
  for (const auto& t : enumerate_sp_types(3, Parity::Odd, true)) CHECK(parse_sp_type(t.label()) == t);
  for (const auto& t : enumerate_sl_types(5)) CHECK(parse_sl_type(t.label()) == t);
  CHECK(enumerate_sp_types(2, Parity::Odd).size() == 6);
}

TEST_CASE("tabulated Sp rows: counts and centralizer motives") {
  for (Parity parity : {Parity::Odd, Parity::Even}) {
    for (unsigned n : {2U, 3U}) {
      const GoldenTable& table = golden_table(n, parity);
      CHECK(table.rows.size() == enumerate_sp_types(n, parity).size());
      for (const auto& row : table.rows) {
        CAPTURE(row.name);
        std::string in_x = row.count;
        std::replace(in_x.begin(), in_x.end(), 'q', 'x');
        CHECK(count_sp_polynomial(row.type, parity) == parse_expression(in_x, {"x"}));
        const RationalFunction det = parse_expression(row.det, {"t", "q"});
        CHECK(RationalFunction(frobenius_det(centralizer_motive(row.type))) == det);
      }
    }
  }
}

TEST_CASE("budgets stop runaway enumerations") {
  const auto f = oracle::FiniteField::of_order(9);
  CHECK_THROWS_AS(oracle::sp_census(4, f, 1000), BudgetExceeded);
  CHECK_THROWS_AS(oracle::irreducible_monics(f, 6, std::nullopt, 100), BudgetExceeded);
}
