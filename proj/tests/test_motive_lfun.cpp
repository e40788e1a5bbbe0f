#include <doctest.h>

#include <cmath>
#include <numeric>
#include <complex>
#include <numbers>

#include "cuspcount/error.hpp"
#include "cuspcount/cyclotomic.hpp"
#include "cuspcount/geometry.hpp"
#include "cuspcount/lfun.hpp"
#include "cuspcount/motive.hpp"
#include "cuspcount/number_theory.hpp"

using namespace cuspcount;
using cplx = std::complex<long double>;

TEST_CASE("motives of split and non-split groups") {
  CHECK(format_frobenius_det(motive_of(GroupSpec::sp(4))) == "(1 - t*q)(1 - t*q^3)");
  CHECK(format_frobenius_det(motive_of(GroupSpec::sl(3))) == "(1 - t*q)(1 - t*q^2)");
  CHECK(format_frobenius_det(motive_of(GroupSpec::gl(2))) == "(1 - t)(1 - t*q)");
  CHECK(frobenius_det(motive_of(GroupSpec::unitary(2))).to_string() == "1 + t - t*q - t^2*q");
  CHECK(frobenius_det(motive_of(GroupSpec::res(2, GroupSpec::unitary(1)))).to_string() == "1 + t^2");
  CHECK(motive_of(GroupSpec::so(5)) == motive_of(GroupSpec::sp(4)));
  CHECK(motive_of(GroupSpec::product({GroupSpec::sl(2), GroupSpec::gl(1)})) ==
        direct_sum(motive_of(GroupSpec::sl(2)), motive_of(GroupSpec::gl(1))));
  CHECK_THROWS_AS(motive_of(GroupSpec::sl(0)), PreconditionError);
}

TEST_CASE("base change of a motive powers its eigenvalues") {
  const ArtinTateMotive u2 = motive_of(GroupSpec::unitary(2));
  CHECK(base_change(u2, 2) == motive_of(GroupSpec::gl(2)));
  CHECK(base_change(u2, 3) == u2);
  CHECK(charpoly_power(cyclotomic(3), 3) == pow(IntPoly{1, -1}, 2));
}

TEST_CASE("place splitting under base change") {
  CHECK(split_places({2, 3}, 6) == std::vector<unsigned>{1, 1, 1, 1, 1});
  CHECK(split_places({4}, 2) == std::vector<unsigned>{2, 2});
  const CurveDatum e = elliptic_curve(2, 1, {1, 1});
  // #E(F_4) = 4 + 1 - (a^2 - 2q) = 8 with a = 1
  CHECK(base_change(e, 2).weil_numerator == IntPoly({1, 3, 4}));
}

namespace {

// Inverse roots of c(u) = prod (1 - z u), all roots of unity.
std::vector<cplx> unit_eigenvalues(const IntPoly& c) {
  std::vector<cplx> out;
  IntPoly rest = c.reversed();
  for (unsigned k = 1; rest.degree() > 0 && k <= 120; ++k) {
    while (rest.degree() > 0 && divrem(rest, cyclotomic(k)).remainder.is_zero()) {
      rest = exact_div(rest, cyclotomic(k));
      for (unsigned j = 1; j <= k; ++j)
        if (std::gcd(j, k) == 1) out.push_back(std::polar(1.0L, 2 * std::numbers::pi_v<long double> * j / k));
    }
  }
  REQUIRE(rest.degree() == 0);
  return out;
}

std::vector<cplx> place_eigenvalues(const std::vector<unsigned>& degrees) {
  std::vector<cplx> out;
  for (unsigned d : degrees)
    for (unsigned j = 0; j < d; ++j) out.push_back(std::polar(1.0L, 2 * std::numbers::pi_v<long double> * j / d));
  return out;
}

void drop_one(std::vector<cplx>& v) {
  for (auto it = v.begin(); it != v.end(); ++it)
    if (std::abs(*it - cplx(1)) < 1e-12L) {
      v.erase(it);
      return;
    }
  FAIL("no eigenvalue 1");
}

// L_{S,T}(M) straight from the Euler-factor description, in floating point.
struct Numeric {
  cplx value = 1;
  long double magnitude = 1;  // product of the factor sizes, for the tolerance
};

Numeric numeric_l(const ArtinTateMotive& m, std::uint64_t q, long trace, const std::vector<unsigned>& s,
               const std::vector<unsigned>& t, bool elliptic) {
  std::vector<cplx> a = place_eigenvalues(s);
  drop_one(a);
  if (elliptic) {
    // roots of x^2 - a x + q
    const long double disc = static_cast<long double>(trace * trace) - 4.0L * q;
    const cplx root = std::sqrt(cplx(disc));
    a.push_back((cplx(trace) + root) / 2.0L);
    a.push_back((cplx(trace) - root) / 2.0L);
  }
  std::vector<cplx> b = place_eigenvalues(t);
  if (!t.empty()) drop_one(b);
  Numeric total;
  auto mul = [&](cplx f) {
    total.value *= f;
    total.magnitude *= std::max(1.0L, std::abs(f));
  };
  for (const auto& piece : m.pieces()) {
    const auto zs = unit_eigenvalues(piece.charpoly);
    const long double qd1 = std::pow(static_cast<long double>(q), piece.weight - 1);
    for (const auto& z : zs) {
      for (const auto& x : a) mul(cplx(1) - x * qd1 * z);
      for (const auto& x : b) mul(cplx(1) - x * qd1 * static_cast<long double>(q) * z);
      if (t.empty()) mul(cplx(1) / (cplx(1) - qd1 * static_cast<long double>(q) * z));
    }
  }
  return total;
}

}  // namespace

TEST_CASE("l_value agrees with a floating-point Euler product") {
  const std::vector<GroupSpec> specs{GroupSpec::sl(2), GroupSpec::sl(3), GroupSpec::sl(4),
                                     GroupSpec::sp(4), GroupSpec::gl(2), GroupSpec::unitary(2),
                                     GroupSpec::unitary(3), GroupSpec::res(2, GroupSpec::unitary(1)),
                                     GroupSpec::so(5)};
  struct Datum {
    std::uint64_t q;
    long trace;
    bool elliptic;
    std::vector<unsigned> s, t;
  };
  const std::vector<Datum> data{{2, 0, false, {1, 1}, {}}, {3, 0, false, {1, 2}, {1}}, {5, 0, false, {1, 3}, {2}},
                                {2, 1, true, {1, 1}, {}},  {3, -2, true, {1}, {1}},    {4, 3, true, {2, 1}, {1, 1}}};
  for (const auto& g : specs) {
    const ArtinTateMotive m = motive_of(g);
    for (const auto& d : data) {
      const CurveDatum c = d.elliptic ? elliptic_curve(d.q, d.trace, d.s, d.t) : projective_line(d.q, d.s, d.t);
      const BigRational exact = l_value(m, c);
      const Numeric n = numeric_l(m, d.q, d.trace, d.s, d.t, d.elliptic);
      const cplx approx = n.value;
      const long double scale = 1e-3L * n.magnitude;
      CAPTURE(g.to_string());
      CAPTURE(d.q);
      CHECK(std::abs(approx.imag()) < 1e-9L * scale);
      CHECK(std::abs(static_cast<long double>(exact.get_d()) - approx.real()) < 1e-9L * scale);
    }
  }
}

TEST_CASE("Z evaluates to the L-value") {
  const ArtinTateMotive m = motive_of(GroupSpec::sp(4));
  for (const CurveDatum& c : {projective_line(3, {1, 1}, {1}), elliptic_curve(5, 2, {1, 2}, {1}),
                              projective_line(7, {1, 1, 1})}) {
    const ZPolynomial z = z_polynomial(m, c);
    CHECK(z.evaluate(BigInt(static_cast<unsigned long>(c.q))) == l_value(m, c));
    if (!c.t_degrees.empty()) CHECK(z.polynomial);
  }
}

TEST_CASE("curve data are validated") {
  CHECK_THROWS_AS(projective_line(6, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(elliptic_curve(2, 3, {1}), PreconditionError);  // |a| > 2 sqrt(q)
  CurveDatum bad = projective_line(3, {1});
  bad.weil_numerator = IntPoly{1, 0, 2};
  CHECK_THROWS_AS(bad.validate(), PreconditionError);
}
