#include "cuspcount/int_poly.hpp"

#include <algorithm>
#include <utility>

#include "cuspcount/error.hpp"

namespace cuspcount {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return monomial(1, 1); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPoly::eval(const BigInt& at) const {
  BigInt r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * at + *it;
  return r;
}

BigRational IntPoly::eval(const BigRational& at) const {
  BigRational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * at + *it;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
  std::vector<BigInt> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::inflate(std::size_t k) const {
  if (k == 0) throw PreconditionError("inflate by 0");
  if (coeffs_.empty()) return {};
  std::vector<BigInt> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scale_argument(const BigInt& c) const {
  std::vector<BigInt> v(coeffs_);
  BigInt p = 1;
  for (auto& a : v) {
    a *= p;
    p *= c;
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
  IntPoly r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * inner + constant(*it);
  return r;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  return divide_exact(c);
}

IntPoly IntPoly::divide_exact(const BigInt& d) const {
  if (d == 0) throw PreconditionError("division by zero");
  std::vector<BigInt> v(coeffs_);
  for (auto& a : v) {
    if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()))
      throw InexactDivision("coefficient " + a.get_str() + " not divisible by " + d.get_str());
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> v(coeffs_);
  for (auto& a : v) a = -a;
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& c, const IntPoly& a) {
  std::vector<BigInt> v(a.coeffs_);
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    if (i >= 1) mono = var;
    if (i >= 2) mono += "^" + std::to_string(i);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

IntDivRem divrem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lc = b.leading();
  if (a.degree() < db) return {IntPoly(), a};
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    BigInt& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
      throw InexactDivision("polynomial division with non-unit leading coefficient is not exact");
    BigInt f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    const std::size_t shift = static_cast<std::size_t>(i - db);
    q[shift] = f;
    for (int j = 0; j <= db; ++j) r[shift + static_cast<std::size_t>(j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InexactDivision("polynomial division leaves remainder " + r.to_string());
  return q;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  int e = a.degree() - b.degree() + 1;
  const BigInt& lc = b.leading();
  IntPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    IntPoly t = IntPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - b.degree()));
    r = lc * r - t * b;
    --e;
  }
  return ipow(lc, static_cast<unsigned long>(e)) * r;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  BigInt c = gcd(a.content(), b.content());
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v);
    u = v;
    v = r.primitive_part();
  }
  return c * u.primitive_part();
}

BigInt resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw PreconditionError("resultant of the zero polynomial");
  IntPoly a = p;
  IntPoly b = q;
  BigInt s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
  }
  if (b.degree() == 0) return s * ipow(b.leading(), static_cast<unsigned long>(a.degree()));
  const BigInt ca = a.content();
  const BigInt cb = b.content();
  a = a.divide_exact(ca);
  b = b.divide_exact(cb);
  const BigInt t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
  BigInt g = 1;
  BigInt h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = b;
    b = r.divide_exact(g * ipow(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta >= 1) {
      BigInt num = ipow(g, static_cast<unsigned long>(delta));
      BigInt den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.is_zero()) return 0;
    if (b.degree() == 0) {
      const int da = a.degree();
      BigInt num = ipow(b.leading(), static_cast<unsigned long>(da));
      BigInt den = ipow(h, static_cast<unsigned long>(da - 1));
      BigInt hh;
      mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * hh;
    }
  }
}

IntPoly root_power_transform(const IntPoly& w_in, unsigned m) {
  if (m == 0) throw PreconditionError("root_power_transform with m = 0");
  if (w_in.is_zero()) throw PreconditionError("root_power_transform of the zero polynomial");
  IntPoly w = w_in;
  if (w.leading() == -1) w = -w;
  if (w.leading() != 1) throw PreconditionError("root_power_transform needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(w.degree());
  if (n == 0 || m == 1) return w;
  // c[i] is the coefficient of x^(n-i)
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = w.coeffs()[n - i];
  const std::size_t top = n * m;
  std::vector<BigInt> p(top + 1);
  for (std::size_t k = 1; k <= top; ++k) {
    BigInt s = 0;
    for (std::size_t i = 1; i < k && i <= n; ++i) s += c[i] * p[k - i];
    if (k <= n) s += static_cast<unsigned long>(k) * c[k];
    p[k] = -s;
  }
  std::vector<BigInt> cc(n + 1);
  cc[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt s = p[k * m];
    for (std::size_t i = 1; i < k; ++i) s += cc[i] * p[(k - i) * m];
    s = -s;
    BigInt kk = static_cast<unsigned long>(k);
    if (!mpz_divisible_p(s.get_mpz_t(), kk.get_mpz_t()))
      throw InexactDivision("Newton identity division is not exact");
    mpz_divexact(cc[k].get_mpz_t(), s.get_mpz_t(), kk.get_mpz_t());
  }
  std::vector<BigInt> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[n - i] = cc[i];
  return IntPoly(std::move(out));
}

}  // namespace cuspcount
