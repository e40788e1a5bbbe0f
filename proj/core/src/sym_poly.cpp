#include "cuspcount/sym_poly.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "cuspcount/error.hpp"

namespace cuspcount {
namespace {

Monomial zero_monomial() {
  Monomial m{};
  m.fill(0);
  return m;
}

Monomial add_monomials(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned s = static_cast<unsigned>(a[i]) + b[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw PreconditionError("exponent overflow");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool term_less(const SymPoly::Term& a, const SymPoly::Term& b) { return a.first < b.first; }

// Sort by monomial, merge duplicates, drop zeros.
std::vector<SymPoly::Term> canonicalize(std::vector<SymPoly::Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::vector<SymPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

}  // namespace

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

SymPoly::SymPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) throw PreconditionError("too many polynomial variables");
}

SymPoly SymPoly::constant(std::vector<std::string> vars, const BigInt& c) {
  SymPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace_back(zero_monomial(), c);
  return p;
}

SymPoly SymPoly::variable(std::vector<std::string> vars, const std::string& name) {
  SymPoly p(std::move(vars));
  Monomial m = zero_monomial();
  m[p.index_of(name)] = 1;
  p.terms_.emplace_back(m, BigInt(1));
  return p;
}

SymPoly SymPoly::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
  SymPoly p(std::move(vars));
  for (const auto& t : terms)
    for (std::size_t i = p.vars_.size(); i < kMaxVars; ++i)
      if (t.first[i] != 0) throw PreconditionError("monomial uses an undeclared variable");
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

SymPoly SymPoly::from_univariate(std::vector<std::string> vars, std::size_t var, const IntPoly& u) {
  SymPoly p(std::move(vars));
  if (var >= p.vars_.size()) throw PreconditionError("variable index out of range");
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    if (u.coeffs()[i] == 0) continue;
    Monomial m = zero_monomial();
    m[var] = static_cast<std::uint16_t>(i);
    p.terms_.emplace_back(m, u.coeffs()[i]);
  }
  p.terms_ = canonicalize(std::move(p.terms_));
  return p;
}

std::size_t SymPoly::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  throw PreconditionError("unknown variable '" + name + "'");
}

bool SymPoly::has_variable(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

bool SymPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == zero_monomial());
}

BigInt SymPoly::constant_term() const { return coefficient(zero_monomial()); }

BigInt SymPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, BigInt(0)}, term_less);
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int SymPoly::degree(std::size_t var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first[var]));
  return d;
}

void SymPoly::require_same_vars(const SymPoly& b) const {
  if (vars_ != b.vars_) throw PreconditionError("polynomials over different variable lists");
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& b) {
  require_same_vars(b);
  if (&b == this) {
    *this = BigInt(2) * b;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      BigInt c = i->second + j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& b) {
  SymPoly neg = -b;
  return *this += neg;
}

SymPoly& SymPoly::operator*=(const SymPoly& b) {
  *this = *this * b;
  return *this;
}

SymPoly operator*(const BigInt& c, const SymPoly& a) {
  if (c == 0) return SymPoly(a.vars_);
  SymPoly r = a;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  a.require_same_vars(b);
  if (a.is_zero() || b.is_zero()) return SymPoly(a.vars_);
  if (b.is_constant()) return b.terms_[0].second * a;
  if (a.is_constant()) return a.terms_[0].second * b;
  const SymPoly& big = a.terms_.size() >= b.terms_.size() ? a : b;
  const SymPoly& small = a.terms_.size() >= b.terms_.size() ? b : a;
  if (small.terms_.size() == 1) {
    SymPoly r(a.vars_);
    r.terms_.reserve(big.terms_.size());
    const auto& [m, c] = small.terms_[0];
    // Adding a fixed monomial preserves the lexicographic order.
    for (const auto& t : big.terms_) r.terms_.emplace_back(add_monomials(t.first, m), t.second * c);
    return r;
  }
  std::unordered_map<Monomial, BigInt, MonomialHash> acc;
  acc.reserve(big.terms_.size() * 2);
  BigInt prod;
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) {
      Monomial m = add_monomials(s.first, t.first);
      mpz_mul(prod.get_mpz_t(), s.second.get_mpz_t(), t.second.get_mpz_t());
      auto [it, inserted] = acc.try_emplace(m, prod);
      if (!inserted) it->second += prod;
    }
  }
  SymPoly r(a.vars_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  std::sort(r.terms_.begin(), r.terms_.end(), term_less);
  return r;
}

bool operator==(const SymPoly& a, const SymPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

SymPoly pow(const SymPoly& p, unsigned e) {
  SymPoly result = SymPoly::constant(p.variables(), 1);
  SymPoly base = p;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

SymPoly SymPoly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw PreconditionError("variable index out of range");
  SymPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial n = m;
    --n[var];
    r.terms_.emplace_back(n, c * static_cast<unsigned long>(m[var]));
  }
  r.terms_ = canonicalize(std::move(r.terms_));
  return r;
}

BigRational SymPoly::eval(const std::map<std::string, BigRational>& at) const {
  std::vector<const BigRational*> values(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = at.find(vars_[i]);
    if (it == at.end()) throw PreconditionError("no value assigned to variable '" + vars_[i] + "'");
    values[i] = &it->second;
  }
  std::vector<std::map<unsigned, BigRational>> cache(vars_.size());
  BigRational total = 0;
  for (const auto& [m, c] : terms_) {
    BigRational v = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (m[i] == 0) continue;
      auto [it, inserted] = cache[i].try_emplace(m[i]);
      if (inserted) it->second = rpow(*values[i], m[i]);
      v *= it->second;
    }
    total += v;
  }
  return total;
}

SymPoly SymPoly::substitute(std::size_t var, const BigInt& value) const {
  if (var >= vars_.size()) throw PreconditionError("variable index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::map<unsigned, BigInt> cache;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n[var] = 0;
    auto [it, inserted] = cache.try_emplace(m[var]);
    if (inserted) it->second = ipow(value, m[var]);
    out.emplace_back(n, c * it->second);
  }
  SymPoly r(vars_);
  r.terms_ = canonicalize(std::move(out));
  return r;
}

SymPoly SymPoly::substitute(std::size_t var, const SymPoly& value) const {
  require_same_vars(value);
  auto coeffs = coefficients_in(var);
  SymPoly r(vars_);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * value + *it;
  return r;
}

SymPoly SymPoly::inflate(std::size_t var, unsigned k) const {
  if (k == 0) throw PreconditionError("inflate by 0");
  SymPoly r = *this;
  for (auto& t : r.terms_) {
    const unsigned e = static_cast<unsigned>(t.first[var]) * k;
    if (e > std::numeric_limits<std::uint16_t>::max()) throw PreconditionError("exponent overflow");
    t.first[var] = static_cast<std::uint16_t>(e);
  }
  r.terms_ = canonicalize(std::move(r.terms_));
  return r;
}

SymPoly SymPoly::scale_variable(std::size_t var, const BigInt& c) const {
  SymPoly r = *this;
  for (auto& t : r.terms_) t.second *= ipow(c, t.first[var]);
  r.terms_ = canonicalize(std::move(r.terms_));
  return r;
}

SymPoly SymPoly::swap_variables(std::size_t a, std::size_t b) const {
  SymPoly r = *this;
  for (auto& t : r.terms_) std::swap(t.first[a], t.first[b]);
  r.terms_ = canonicalize(std::move(r.terms_));
  return r;
}

SymPoly SymPoly::with_variables(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> target(vars_.size(), kMaxVars);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) target[i] = static_cast<std::size_t>(it - vars.begin());
  }
  SymPoly r(vars);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial n = zero_monomial();
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (m[i] == 0) continue;
      if (target[i] == kMaxVars) throw PreconditionError("variable '" + vars_[i] + "' missing from target list");
      n[target[i]] = m[i];
    }
    out.emplace_back(n, c);
  }
  r.terms_ = canonicalize(std::move(out));
  return r;
}

BigInt SymPoly::content() const {
  BigInt g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
  return g;
}

SymPoly SymPoly::divide_exact(const BigInt& d) const {
  if (d == 0) throw PreconditionError("division by zero");
  SymPoly r = *this;
  for (auto& t : r.terms_) {
    if (!mpz_divisible_p(t.second.get_mpz_t(), d.get_mpz_t()))
      throw InexactDivision("coefficient " + t.second.get_str() + " not divisible by " + d.get_str());
    mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

bool SymPoly::coefficients_divisible_by(const BigInt& p) const {
  for (const auto& t : terms_)
    if (!mpz_divisible_p(t.second.get_mpz_t(), p.get_mpz_t())) return false;
  return true;
}

SymPoly SymPoly::reduce_mod(const BigInt& p) const {
  SymPoly r(vars_);
  BigInt half = p / 2;
  for (const auto& [m, c] : terms_) {
    BigInt v;
    mpz_fdiv_r(v.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    if (v > half) v -= p;
    if (v != 0) r.terms_.emplace_back(m, v);
  }
  return r;
}

IntPoly SymPoly::to_univariate(std::size_t var) const {
  std::vector<BigInt> v;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (i != var && m[i] != 0) throw PreconditionError("polynomial is not univariate in '" + vars_[var] + "'");
    if (v.size() <= m[var]) v.resize(m[var] + 1U);
    v[m[var]] += c;
  }
  return IntPoly(std::move(v));
}

std::vector<SymPoly> SymPoly::coefficients_in(std::size_t var) const {
  if (var >= vars_.size()) throw PreconditionError("variable index out of range");
  const int d = degree(var);
  std::vector<SymPoly> out(static_cast<std::size_t>(std::max(d + 1, 0)), SymPoly(vars_));
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n[var] = 0;
    out[m[var]].terms_.emplace_back(n, c);
  }
  // Clearing a non-leading exponent can break the order.
  if (var != 0)
    for (auto& p : out) std::sort(p.terms_.begin(), p.terms_.end(), term_less);
  return out;
}

SymPoly SymPoly::from_coefficients(std::vector<std::string> vars, std::size_t var, const std::vector<SymPoly>& coeffs) {
  SymPoly r(std::move(vars));
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k].require_same_vars(r);
    for (const auto& [m, c] : coeffs[k].terms_) {
      if (m[var] != 0) throw PreconditionError("coefficient still involves the main variable");
      Monomial n = m;
      n[var] = static_cast<std::uint16_t>(k);
      out.emplace_back(n, c);
    }
  }
  r.terms_ = canonicalize(std::move(out));
  return r;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

SymDivRem divrem(const SymPoly& a, const SymPoly& b, std::size_t var) {
  if (a.variables() != b.variables()) throw PreconditionError("polynomials over different variable lists");
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const auto& vars = a.variables();
  auto bb = b.coefficients_in(var);
  const std::size_t db = bb.size() - 1;
  if (!bb[db].is_constant()) throw PreconditionError("divisor leading coefficient must be an integer constant");
  const BigInt lc = bb[db].constant_term();
  auto aa = a.coefficients_in(var);
  if (aa.size() <= db) return {SymPoly(vars), a};
  std::vector<SymPoly> q(aa.size() - db, SymPoly(vars));
  for (std::size_t i = aa.size(); i-- > db;) {
    if (aa[i].is_zero()) continue;
    SymPoly f;
    if (lc == 1) {
      f = aa[i];
    } else if (lc == -1) {
      f = -aa[i];
    } else {
      f = aa[i].divide_exact(lc);
    }
    const std::size_t shift = i - db;
    for (std::size_t j = 0; j < db; ++j)
      if (!bb[j].is_zero()) aa[shift + j] -= f * bb[j];
    aa[i] = SymPoly(vars);
    q[shift] = std::move(f);
  }
  aa.resize(db);
  return {SymPoly::from_coefficients(vars, var, q), SymPoly::from_coefficients(vars, var, aa)};
}

SymPoly exact_div(const SymPoly& a, const SymPoly& b, std::size_t var) {
  auto [q, r] = divrem(a, b, var);
  if (!r.is_zero()) throw InexactDivision("multivariate division leaves a remainder");
  return q;
}

}  // namespace cuspcount
