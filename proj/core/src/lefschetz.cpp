#include "cuspcount/lefschetz.hpp"

#include <algorithm>
#include <numeric>

#include "cuspcount/cyclotomic.hpp"
#include "cuspcount/error.hpp"
#include "cuspcount/number_theory.hpp"

namespace cuspcount {
namespace {

unsigned common_conductor(const std::vector<LefschetzFunction::Term>& terms) {
  unsigned n = 1;
  for (const auto& t : terms) {
    n = lcm_conductor(n, t.coeff.conductor());
    n = lcm_conductor(n, t.base.conductor());
  }
  return n;
}

std::vector<BigRational> key_at(const CyclotomicRational& c, unsigned n) {
  std::vector<BigRational> k = c.lift(n).coeffs();
  k.resize(std::max<std::size_t>(1, cyclotomic(n).degree()));
  return k;
}

}  // namespace

LefschetzFunction::LefschetzFunction(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

void LefschetzFunction::canonicalize() {
  const unsigned n = common_conductor(terms_);
  std::vector<std::pair<std::vector<BigRational>, Term>> keyed;
  keyed.reserve(terms_.size());
  for (auto& t : terms_) {
    if (t.base.is_zero() || t.coeff.is_zero()) continue;
    keyed.emplace_back(key_at(t.base, n), std::move(t));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Term> merged;
  for (std::size_t i = 0; i < keyed.size();) {
    Term t = keyed[i].second;
    std::size_t j = i + 1;
    for (; j < keyed.size() && keyed[j].first == keyed[i].first; ++j) t.coeff = t.coeff + keyed[j].second.coeff;
    if (!t.coeff.is_zero()) merged.push_back(std::move(t));
    i = j;
  }
  terms_ = std::move(merged);
}

LefschetzFunction LefschetzFunction::constant(const CyclotomicRational& c) { return power(CyclotomicRational(1L), c); }

LefschetzFunction LefschetzFunction::power(const CyclotomicRational& base, const CyclotomicRational& coeff) {
  return LefschetzFunction({Term{coeff, base}});
}

LefschetzFunction LefschetzFunction::chi(unsigned n) {
  if (n == 0) throw PreconditionError("chi_0 is undefined");
  std::vector<Term> terms;
  for (unsigned i = 0; i < n; ++i) terms.push_back({CyclotomicRational(1L), CyclotomicRational::root_of_unity(n, i)});
  return LefschetzFunction(std::move(terms));
}

CyclotomicRational LefschetzFunction::evaluate(unsigned long m) const {
  CyclotomicRational sum;
  for (const auto& t : terms_) sum = sum + t.coeff * t.base.pow(static_cast<long>(m));
  return sum;
}

bool LefschetzFunction::is_integer_valued() const {
  const std::size_t upto = std::max<std::size_t>(1, terms_.size());
  for (std::size_t m = 1; m <= upto; ++m) {
    CyclotomicRational v = evaluate(m);
    if (!v.is_rational() || !is_integer(v.rational_value())) return false;
  }
  return true;
}

bool LefschetzFunction::has_integral_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.has_integral_coordinates(); });
}

LefschetzFunction operator+(const LefschetzFunction& a, const LefschetzFunction& b) {
  std::vector<LefschetzFunction::Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return LefschetzFunction(std::move(terms));
}

LefschetzFunction operator-(const LefschetzFunction& a, const LefschetzFunction& b) {
  return a + CyclotomicRational(-1L) * b;
}

LefschetzFunction operator*(const LefschetzFunction& a, const LefschetzFunction& b) {
  std::vector<LefschetzFunction::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({s.coeff * t.coeff, s.base * t.base});
  return LefschetzFunction(std::move(terms));
}

LefschetzFunction operator*(const CyclotomicRational& c, const LefschetzFunction& a) {
  std::vector<LefschetzFunction::Term> terms = a.terms_;
  for (auto& t : terms) t.coeff = c * t.coeff;
  return LefschetzFunction(std::move(terms));
}

bool operator==(const LefschetzFunction& a, const LefschetzFunction& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  // Sort order depends on the conductor used for the keys, so compare both
  // sides at a shared conductor.
  const unsigned n = lcm_conductor(common_conductor(a.terms_), common_conductor(b.terms_));
  auto keys = [n](const std::vector<LefschetzFunction::Term>& ts) {
    std::vector<std::pair<std::vector<BigRational>, std::vector<BigRational>>> out;
    for (const auto& t : ts) out.emplace_back(key_at(t.base, n), key_at(t.coeff, n));
    std::sort(out.begin(), out.end());
    return out;
  };
  return keys(a.terms_) == keys(b.terms_);
}

std::string LefschetzFunction::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.to_string() + ")*(" + t.base.to_string() + ")^m";
  }
  return out;
}

bool equals(const LefschetzFunction& f, const LefschetzFunction& g) { return f == g; }

LefschetzFunction pow(const LefschetzFunction& f, unsigned e) {
  LefschetzFunction result = LefschetzFunction::constant(1L);
  LefschetzFunction base = f;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

LefschetzFunction compose_scale(const LefschetzFunction& f, unsigned l) {
  std::vector<LefschetzFunction::Term> terms = f.terms();
  for (auto& t : terms) t.base = t.base.pow(l);
  return LefschetzFunction(std::move(terms));
}

namespace {

LefschetzFunction prime_power_transform(const LefschetzFunction& f, unsigned l, unsigned e, TransformStats* stats) {
  if (e == 0) return f;
  const unsigned le = static_cast<unsigned>(checked_pow(l, e));
  const unsigned le1 = le / l;
  const LefschetzFunction g = compose_scale(f, l);
  const LefschetzFunction diff = pow(f, le) - pow(g, le1);
  std::vector<LefschetzFunction::Term> h_terms;
  const CyclotomicRational inv(make_rational(1, le));
  for (const auto& t : diff.terms()) {
    CyclotomicRational c = t.coeff * inv;
    if (!c.has_integral_coordinates())
      throw CertificateFailure("f_N recursion: coefficient " + t.coeff.to_string() + " is not divisible by " +
                               std::to_string(le));
    if (stats) ++stats->exact_divisions;
    h_terms.push_back({c, t.base});
  }
  const LefschetzFunction h(std::move(h_terms));
  return prime_power_transform(g, l, e - 1, stats) + LefschetzFunction::chi(le) * h;
}

}  // namespace

LefschetzFunction f_N_transform(const LefschetzFunction& f, unsigned N, TransformStats* stats) {
  if (N == 0) throw PreconditionError("f_N needs N >= 1");
  if (!f.has_integral_coefficients()) throw PreconditionError("f_N needs coefficients in Z[zeta]");
  LefschetzFunction out = f;
  for (const auto& [prime, exponent] : factorize(N))
    out = prime_power_transform(out, static_cast<unsigned>(prime), exponent, stats);
  return out;
}

LefschetzFunction place_product(const LefschetzFunction& f, const std::vector<unsigned>& degrees,
                                TransformStats* stats) {
  LefschetzFunction out = LefschetzFunction::constant(1L);
  for (unsigned d : degrees) out = out * f_N_transform(f, d, stats);
  return out;
}

FitResult lefschetz_fit(const std::vector<BigRational>& values, const std::vector<CyclotomicRational>& bases) {
  const std::size_t k = bases.size();
  if (values.size() <= k)
    throw PreconditionError("lefschetz_fit needs more values than candidate bases to leave a check point");
  FitResult result;
  // Augmented Vandermonde-type system a[m][i] = b_i^(m+1).
  std::vector<std::vector<CyclotomicRational>> a(k, std::vector<CyclotomicRational>(k + 1));
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < k; ++i) a[m][i] = bases[i].pow(static_cast<long>(m + 1));
    a[m][k] = CyclotomicRational(values[m]);
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && a[piv][col].is_zero()) ++piv;
    if (piv == k) {
      result.diagnostic = "singular system: no pivot for base " + bases[col].to_string() +
                          " (zero or repeated candidate base)";
      return result;
    }
    std::swap(a[piv], a[col]);
    const CyclotomicRational inv = a[col][col].inverse();
    for (std::size_t j = col; j <= k; ++j) a[col][j] = a[col][j] * inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const CyclotomicRational f = a[r][col];
      for (std::size_t j = col; j <= k; ++j) a[r][j] = a[r][j] - f * a[col][j];
    }
  }
  std::vector<LefschetzFunction::Term> terms;
  for (std::size_t i = 0; i < k; ++i) terms.push_back({a[i][k], bases[i]});
  result.function = LefschetzFunction(std::move(terms));
  for (std::size_t m = k; m < values.size(); ++m) {
    if (result.function.evaluate(m + 1) != CyclotomicRational(values[m])) {
      result.diagnostic = "fitted form disagrees with the value at m = " + std::to_string(m + 1);
      return result;
    }
  }
  result.ok = true;
  return result;
}

}  // namespace cuspcount
