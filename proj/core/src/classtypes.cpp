#include "cuspcount/classtypes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "cuspcount/error.hpp"
#include "cuspcount/finite_field.hpp"
#include "cuspcount/number_theory.hpp"

namespace cuspcount {
namespace {

using PairList = std::vector<std::pair<unsigned, unsigned>>;

// All multisets of pairs (x, y) with sum x*y = total, each sorted ascending.
std::vector<PairList> pair_multisets(unsigned total) {
  std::vector<std::pair<unsigned, unsigned>> universe;
  for (unsigned x = 1; x <= total; ++x)
    for (unsigned y = 1; x * y <= total; ++y) universe.emplace_back(x, y);
  std::vector<PairList> out;
  PairList current;
  auto rec = [&](auto&& self, std::size_t start, unsigned left) -> void {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < universe.size(); ++i) {
      const auto [x, y] = universe[i];
      if (x * y > left) continue;
      current.emplace_back(x, y);
      self(self, i, left - x * y);
      current.pop_back();
    }
  };
  rec(rec, 0, total);
  return out;
}

std::string pair_label(const PairList& pairs) {
  if (pairs.empty()) return "-";
  std::string out;
  for (const auto& [x, y] : pairs) {
    if (!out.empty()) out += "+";
    out += std::to_string(x) + ":" + std::to_string(y);
  }
  return out;
}

PairList parse_pairs(const std::string& text) {
  PairList out;
  if (text == "-" || text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '+')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("type component '" + item + "' is not of the form d:a");
    try {
      const unsigned long x = std::stoul(item.substr(0, colon));
      const unsigned long y = std::stoul(item.substr(colon + 1));
      if (x == 0 || y == 0) throw ParseError("type component '" + item + "' must be positive");
      out.emplace_back(static_cast<unsigned>(x), static_cast<unsigned>(y));
    } catch (const std::logic_error&) {
      throw ParseError("type component '" + item + "' is not numeric");
    }
  }
  return out;
}

BigInt factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

// prod over keys of falling(count(key), k_key) / prod k_(key, value)!
template <class CountFn>
BigRational block_count(const PairList& pairs, CountFn&& count_of_degree) {
  std::map<unsigned, unsigned> by_degree;
  std::map<std::pair<unsigned, unsigned>, unsigned> by_pair;
  for (const auto& p : pairs) {
    ++by_degree[p.first];
    ++by_pair[p];
  }
  BigRational out = 1;
  for (const auto& [deg, k] : by_degree) out *= BigRational(falling_factorial(count_of_degree(deg), k));
  for (const auto& [pair, k] : by_pair) out /= BigRational(factorial(k));
  return out;
}

BigInt q_big(std::uint64_t q) { return BigInt(static_cast<unsigned long>(q)); }

}  // namespace

Parity parity_of(std::uint64_t q) { return q % 2 == 0 ? Parity::Even : Parity::Odd; }

std::string to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

SLType::SLType(std::vector<std::pair<unsigned, unsigned>> p) : pairs(std::move(p)) {
  for (const auto& [d, a] : pairs)
    if (d == 0 || a == 0) throw PreconditionError("SL type entries must be positive");
  std::sort(pairs.begin(), pairs.end());
}

unsigned SLType::n() const {
  unsigned s = 0;
  for (const auto& [d, a] : pairs) s += d * a;
  return s;
}

std::string SLType::label() const { return pair_label(pairs); }

SpType::SpType(unsigned ap, unsigned am, std::vector<std::pair<unsigned, unsigned>> u,
               std::vector<std::pair<unsigned, unsigned>> g)
    : a_plus(std::max(ap, am)), a_minus(std::min(ap, am)), unitary(std::move(u)), gl(std::move(g)) {
  for (const auto& [d, b] : unitary)
    if (d == 0 || b == 0) throw PreconditionError("Sp type unitary entries must be positive");
  for (const auto& [e, c] : gl)
    if (e == 0 || c == 0) throw PreconditionError("Sp type general-linear entries must be positive");
  std::sort(unitary.begin(), unitary.end());
  std::sort(gl.begin(), gl.end());
}

unsigned SpType::n() const {
  unsigned s = a_plus + a_minus;
  for (const auto& [d, b] : unitary) s += d * b;
  for (const auto& [e, c] : gl) s += e * c;
  return s;
}

std::string SpType::label() const {
  return std::to_string(a_plus) + "/" + std::to_string(a_minus) + "/" + pair_label(unitary) + "/" + pair_label(gl);
}

bool operator<(const SpType& a, const SpType& b) {
  // Larger symplectic blocks first, then the unitary and general-linear parts.
  return std::make_tuple(b.a_plus, b.a_minus, a.gl, a.unitary) < std::make_tuple(a.a_plus, a.a_minus, b.gl, b.unitary);
}

SLType parse_sl_type(const std::string& label) {
  SLType t(parse_pairs(label));
  if (t.pairs.empty()) throw ParseError("empty SL type");
  return t;
}

SpType parse_sp_type(const std::string& label) {
  std::vector<std::string> parts;
  std::stringstream ss(label);
  std::string item;
  while (std::getline(ss, item, '/')) parts.push_back(item);
  if (parts.size() != 4) throw ParseError("Sp type '" + label + "' must have the form a+/a-/unitary/gl");
  try {
    return SpType(static_cast<unsigned>(std::stoul(parts[0])), static_cast<unsigned>(std::stoul(parts[1])),
                  parse_pairs(parts[2]), parse_pairs(parts[3]));
  } catch (const std::logic_error&) {
    throw ParseError("Sp type '" + label + "' has a non-numeric symplectic part");
  }
}

std::vector<SLType> enumerate_sl_types(unsigned n) {
  if (n == 0) throw PreconditionError("enumerate_sl_types needs n >= 1");
  std::vector<SLType> out;
  for (auto& p : pair_multisets(n)) out.emplace_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpType> enumerate_sp_types(unsigned n, Parity parity, bool include_gl) {
  if (n == 0) throw PreconditionError("enumerate_sp_types needs n >= 1");
  std::vector<SpType> out;
  for (unsigned ap = n + 1; ap-- > 0;) {
    for (unsigned am = std::min(ap, n - ap) + 1; am-- > 0;) {
      if (parity == Parity::Even && am > 0) continue;
      const unsigned rest = n - ap - am;
      for (unsigned g = 0; g <= (include_gl ? rest : 0); ++g) {
        const auto unitary_parts = pair_multisets(rest - g);
        const auto gl_parts = pair_multisets(g);
        for (const auto& u : unitary_parts)
          for (const auto& gp : gl_parts) out.emplace_back(ap, am, u, gp);
      }
    }
  }
  std::stable_sort(out.begin(), out.end());
  return out;
}

ArtinTateMotive centralizer_motive(const SLType& t) {
  ArtinTateMotive m;
  for (const auto& [d, a] : t.pairs) m = direct_sum(m, induce(motive_of(GroupSpec::gl(a)), d));
  return quotient_trivial(m);
}

ArtinTateMotive centralizer_motive(const SpType& t) {
  ArtinTateMotive m;
  if (t.a_plus > 0) m = direct_sum(m, motive_of(GroupSpec::sp(2 * t.a_plus)));
  if (t.a_minus > 0) m = direct_sum(m, motive_of(GroupSpec::sp(2 * t.a_minus)));
  for (const auto& [d, b] : t.unitary) m = direct_sum(m, induce(motive_of(GroupSpec::unitary(b)), d));
  for (const auto& [e, c] : t.gl) m = direct_sum(m, induce(motive_of(GroupSpec::gl(c)), e));
  return m;
}

RationalFunction ratio_at_one(const SLType& t) {
  const std::vector<std::string> vars{"q"};
  if (t.r() != 1) return RationalFunction(SymPoly(vars));
  const unsigned d = t.pairs[0].first;
  const unsigned n = t.n();
  const SymPoly num = SymPoly::from_univariate(vars, 0, IntPoly{static_cast<long>(d), -static_cast<long>(d)});
  const SymPoly den = SymPoly::from_univariate(vars, 0, IntPoly::constant(1) - IntPoly::monomial(1, n));
  return RationalFunction(num, den);
}

RationalFunction ratio_from_motive(const ArtinTateMotive& m) {
  const SymPoly det = frobenius_det(m);
  const std::vector<std::string> vars{"q"};
  const std::size_t t = det.index_of("t");
  const std::size_t qi = det.index_of("q");
  // det(1 - Fr) and det(1 - q Fr) as polynomials in q.
  const SymPoly at_one = det.substitute(t, BigInt(1));
  const SymPoly at_q = det.substitute(t, SymPoly::variable(det.variables(), "q"));
  auto only_q = [&](const SymPoly& p) { return SymPoly::from_univariate(vars, 0, p.to_univariate(qi)); };
  return RationalFunction(only_q(at_one), only_q(at_q));
}

BigInt falling_factorial(const BigInt& s, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= s - i;
  return r;
}

BigInt count_sl(unsigned n, unsigned d, std::uint64_t q) {
  if (n == 0 || d == 0 || n % d != 0) throw PreconditionError("count_sl needs d | n");
  if (!is_prime_power(q)) throw PreconditionError("q must be a prime power");
  const BigInt qq = q_big(q);
  const std::uint64_t g = std::gcd<std::uint64_t>(n, q - 1);
  if (d == 1) return BigInt(static_cast<unsigned long>(g));
  if (g == 1) {
    BigInt sum = 0;
    for (auto e : divisors(d)) sum += mobius(e) * (ipow(qq, d / e) - 1);
    return to_integer(make_rational(sum, (qq - 1) * d));
  }
  // No closed form in this regime: count by enumeration.
  static std::mutex mu;
  static std::map<std::tuple<unsigned, unsigned, std::uint64_t>, BigInt> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({n, d, q});
    if (it != memo.end()) return it->second;
  }
  const oracle::FiniteField f = oracle::FiniteField::of_order(q);
  const oracle::Elem target = n % 2 == 0 ? f.one() : f.neg(f.one());
  std::uint64_t total = 0;
  for (oracle::Elem c = 1; c < f.order(); ++c)
    if (f.pow(c, n / d) == target) total += oracle::count_irreducible_monics(f, d, c);
  BigInt result(static_cast<unsigned long>(total));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(std::make_tuple(n, d, q), result);
  return result;
}

BigInt s_count(unsigned two_n, std::uint64_t q) {
  if (two_n < 2 || two_n % 2 != 0) throw PreconditionError("s_count needs an even degree >= 2");
  const unsigned n = two_n / 2;
  const BigInt qq = q_big(q);
  const bool power_of_two = (n & (n - 1)) == 0;
  if (q % 2 == 1 && power_of_two) return to_integer(make_rational(ipow(qq, n) - 1, BigInt(two_n)));
  BigInt sum = 0;
  for (auto d : divisors(n))
    if (d % 2 == 1) sum += mobius(d) * ipow(qq, n / d);
  return to_integer(make_rational(sum, BigInt(two_n)));
}

BigInt gl_pair_count(unsigned e, std::uint64_t q) {
  if (e == 0) throw PreconditionError("gl_pair_count needs e >= 1");
  const BigInt qq = q_big(q);
  BigInt irreducible = 0;
  if (e == 1) {
    irreducible = qq - 1;  // x - c with c != 0
  } else {
    BigInt sum = 0;
    for (auto k : divisors(e)) sum += mobius(k) * ipow(qq, e / k);
    irreducible = to_integer(make_rational(sum, BigInt(e)));
  }
  BigInt self_reciprocal = 0;
  if (e == 1)
    self_reciprocal = q % 2 == 1 ? 2 : 1;
  else if (e % 2 == 0)
    self_reciprocal = s_count(e, q);
  return to_integer(make_rational(irreducible - self_reciprocal, 2));
}

BigInt count_sp(const SpType& t, std::uint64_t q) {
  if (!is_prime_power(q)) throw PreconditionError("q must be a prime power");
  const bool odd = q % 2 == 1;
  if (!odd && t.a_minus > 0) throw PreconditionError("type " + t.label() + " needs odd q");
  BigRational value = block_count(t.unitary, [q](unsigned d) { return s_count(2 * d, q); });
  value *= block_count(t.gl, [q](unsigned e) { return gl_pair_count(e, q); });
  if (odd && t.a_plus != t.a_minus) value *= 2;
  if (!is_integer(value) || value < 0)
    throw Error("class count for type " + t.label() + " is not a nonnegative integer: " + to_string(value));
  return to_integer(value);
}

RationalFunction count_sp_polynomial(const SpType& t, Parity parity) {
  if (t.has_gl()) throw PreconditionError("count_sp_polynomial covers types without general-linear blocks");
  if (parity == Parity::Even && t.a_minus > 0) throw PreconditionError("type " + t.label() + " needs odd q");
  const std::vector<std::string> vars{"x"};
  auto constant = [&](const BigInt& c) { return RationalFunction(SymPoly::constant(vars, c)); };
  auto s_poly = [&](unsigned d) {
    const bool power_of_two = (d & (d - 1)) == 0;
    IntPoly num;
    if (parity == Parity::Odd && power_of_two) {
      num = IntPoly::monomial(1, d) - IntPoly::constant(1);
    } else {
      for (auto e : divisors(d))
        if (e % 2 == 1) num = num + IntPoly::monomial(mobius(e), d / e);
    }
    return RationalFunction(SymPoly::from_univariate(vars, 0, num), SymPoly::constant(vars, 2 * d));
  };
  std::map<unsigned, unsigned> by_degree;
  std::map<std::pair<unsigned, unsigned>, unsigned> by_pair;
  for (const auto& p : t.unitary) {
    ++by_degree[p.first];
    ++by_pair[p];
  }
  RationalFunction out = constant(1);
  for (const auto& [d, k] : by_degree) {
    const RationalFunction s = s_poly(d);
    for (unsigned i = 0; i < k; ++i) out = out * (s - constant(i));
  }
  BigInt denom = 1;
  for (const auto& [pair, k] : by_pair) denom *= factorial(k);
  out = out * RationalFunction(SymPoly::constant(vars, 1), SymPoly::constant(vars, denom));
  if (parity == Parity::Odd && t.a_plus != t.a_minus) out = out * constant(2);
  return out;
}

}  // namespace cuspcount
