#include "cuspcount/finite_field.hpp"

#include <algorithm>

#include "cuspcount/error.hpp"
#include "cuspcount/number_theory.hpp"

namespace cuspcount::oracle {
namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t a, std::uint32_t p, unsigned k) {
  Digits d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

// Product of two digit vectors modulo the monic modulus, over F_p.
Digits slow_mul(const Digits& a, const Digits& b, const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t k = a.size();
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (std::size_t i = 2 * k - 1; i-- > k;) {
    // x^i = x^(i-k) * x^k and x^k = -(modulus lower part)
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < k; ++j) prod[i - k + j] = (prod[i - k + j] + (p - modulus[j]) * c) % p;
  }
  Digits out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

// Irreducibility over the prime field by trial division (small degrees only).
bool prime_field_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    const std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g = to_digits(static_cast<std::uint32_t>(code), p, d);
      g.push_back(1);
      std::vector<std::int64_t> r(f.begin(), f.end());
      for (std::size_t i = r.size(); i-- > d;) {
        const std::int64_t c = r[i] % p;
        if (c == 0) continue;
        for (unsigned j = 0; j <= d; ++j) r[i - d + j] = ((r[i - d + j] - c * g[j]) % p + p) % p;
      }
      bool zero = true;
      for (unsigned i = 0; i < d; ++i)
        if (r[i] % p != 0) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p) || k == 0) throw PreconditionError("finite field needs a prime characteristic and k >= 1");
  const std::uint64_t q = checked_pow(p, k);
  if (q > 65536) throw BudgetExceeded("finite fields are limited to q <= 2^16");
  q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    const std::uint64_t count = checked_pow(p, k);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> cand = to_digits(static_cast<std::uint32_t>(code), p, k);
      cand.push_back(1);
      if (cand[0] != 0 && prime_field_irreducible(cand, p)) {
        modulus_ = cand;
        break;
      }
    }
  }

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Digits d = to_digits(a, p_, k_);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_[a] = from_digits(d, p_);
  }
  if (p_ != 2 && k_ > 1 && q_ <= 1024) {
    add_table_.resize(std::size_t(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      const Digits da = to_digits(a, p_, k_);
      for (std::uint32_t b = 0; b < q_; ++b) {
        Digits db = to_digits(b, p_, k_);
        for (unsigned i = 0; i < k_; ++i) db[i] = (db[i] + da[i]) % p_;
        add_table_[std::size_t(a) * q_ + b] = from_digits(db, p_);
      }
    }
  }

  // Primitive element: smallest nonzero element of multiplicative order q - 1.
  auto mul_slow = [&](Elem a, Elem b) -> Elem {
    if (k_ == 1) return static_cast<Elem>((std::uint64_t(a) * b) % p_);
    return from_digits(slow_mul(to_digits(a, p_, k_), to_digits(b, p_, k_), modulus_, p_), p_);
  };
  const auto order_factors = factorize(q_ - 1 == 0 ? 1 : q_ - 1);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem g = 1;
  for (Elem cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (auto [r, e] : order_factors)
      if (q_ - 1 > 1 && slow_pow(cand, (q_ - 1) / r) == 1) primitive = false;
    if (primitive) {
      g = cand;
      break;
    }
  }
  exp_.resize(2 * std::size_t(q_));
  log_.assign(q_, 0);
  Elem cur = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = mul_slow(cur, g);
  }
  for (std::uint32_t i = q_ - 1; i < 2 * q_; ++i) exp_[i] = exp_[i - (q_ - 1)];
}

FiniteField FiniteField::of_order(std::uint64_t q) {
  const PrimePower pp = prime_power_decomposition(q);
  if (pp.prime == 0) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
  return FiniteField(static_cast<std::uint32_t>(pp.prime), pp.exponent);
}

Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
  Elem out = 0, scale = 1;
  while (a || b) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem FiniteField::neg(Elem a) const { return neg_[a]; }

Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw PreconditionError("inverse of zero in a finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Elem FiniteField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

void PolyRing::trim(FPoly& a) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FPoly PolyRing::add(const FPoly& a, const FPoly& b) const {
  FPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Elem x = i < a.size() ? a[i] : 0;
    const Elem y = i < b.size() ? b[i] : 0;
    r[i] = f_.add(x, y);
  }
  trim(r);
  return r;
}

FPoly PolyRing::sub(const FPoly& a, const FPoly& b) const {
  FPoly nb = b;
  for (auto& c : nb) c = f_.neg(c);
  return add(a, nb);
}

FPoly PolyRing::mul(const FPoly& a, const FPoly& b) const {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f_.add(r[i + j], f_.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

FPoly PolyRing::divrem(FPoly& a, const FPoly& b) const {
  if (b.empty()) throw PreconditionError("polynomial division by zero");
  trim(a);
  const std::size_t db = b.size() - 1;
  const Elem lc_inv = f_.inv(b.back());
  FPoly q(a.size() >= b.size() ? a.size() - db : 0, 0);
  while (a.size() >= b.size()) {
    const Elem c = f_.mul(a.back(), lc_inv);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = f_.sub(a[shift + j], f_.mul(c, b[j]));
    a.pop_back();
    trim(a);
  }
  return q;
}

FPoly PolyRing::rem(FPoly a, const FPoly& b) const {
  divrem(a, b);
  return a;
}

FPoly PolyRing::make_monic(FPoly a) const {
  trim(a);
  if (a.empty()) return a;
  const Elem inv = f_.inv(a.back());
  for (auto& c : a) c = f_.mul(c, inv);
  return a;
}

FPoly PolyRing::gcd(FPoly a, FPoly b) const {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

FPoly PolyRing::powmod(const FPoly& base, std::uint64_t e, const FPoly& m) const {
  FPoly result{1};
  result = rem(result, m);
  FPoly b = rem(base, m);
  while (e) {
    if (e & 1) result = rem(mul(result, b), m);
    e >>= 1;
    if (e) b = rem(mul(b, b), m);
  }
  return result;
}

FPoly PolyRing::reciprocal(const FPoly& a) const {
  if (a.empty() || a[0] == 0) throw PreconditionError("reciprocal needs a nonzero constant term");
  FPoly r(a.rbegin(), a.rend());
  const Elem inv = f_.inv(a[0]);
  for (auto& c : r) c = f_.mul(c, inv);
  return r;
}

bool PolyRing::is_irreducible(const FPoly& f_in) const {
  const FPoly f = make_monic(f_in);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  if (f[0] == 0) return false;
  const FPoly x{0, 1};
  FPoly h = x;
  for (std::size_t i = 1; 2 * i <= n; ++i) {
    h = powmod(h, f_.order(), f);
    if (gcd(sub(h, x), f).size() > 1) return false;
  }
  return true;
}

Elem PolyRing::eval(const FPoly& a, Elem x) const {
  Elem r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f_.add(f_.mul(r, x), a[i]);
  return r;
}

std::string PolyRing::to_string(const FPoly& a) const {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = a[i] == 1 && i > 0;
    if (!unit) out += "[" + std::to_string(a[i]) + "]";
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

template <class Visit>
void for_each_monic(const FiniteField& f, unsigned d, std::optional<Elem> constant, std::uint64_t budget,
                    Visit&& visit) {
  const std::uint32_t q = f.order();
  const unsigned free = constant ? d - 1 : d;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < free; ++i) {
    total *= q;
    if (total > budget)
      throw BudgetExceeded("enumerating degree-" + std::to_string(d) + " polynomials over F_" + std::to_string(q) +
                           " exceeds the budget; use the closed formula instead");
  }
  FPoly poly(d + 1, 0);
  poly[d] = 1;
  if (constant) poly[0] = *constant;
  const unsigned first = constant ? 1 : 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned i = first; i < d; ++i) {
      poly[i] = static_cast<Elem>(c % q);
      c /= q;
    }
    visit(poly);
  }
}

}  // namespace

std::vector<FPoly> irreducible_monics(const FiniteField& f, unsigned d, std::optional<Elem> constant,
                                      std::uint64_t budget) {
  if (d == 0) throw PreconditionError("irreducible_monics needs d >= 1");
  PolyRing ring(f);
  std::vector<FPoly> out;
  for_each_monic(f, d, constant, budget, [&](const FPoly& p) {
    if (ring.is_irreducible(p)) out.push_back(p);
  });
  return out;
}

std::uint64_t count_irreducible_monics(const FiniteField& f, unsigned d, std::optional<Elem> constant,
                                       std::uint64_t budget) {
  if (d == 0) throw PreconditionError("irreducible_monics needs d >= 1");
  PolyRing ring(f);
  std::uint64_t count = 0;
  for_each_monic(f, d, constant, budget, [&](const FPoly& p) {
    if (ring.is_irreducible(p)) ++count;
  });
  return count;
}

Factorizer::Factorizer(const FiniteField& f, unsigned max_degree) : field_(f), ring_(f) {
  irreducibles_.resize(max_degree / 2 + 1);
  for (unsigned d = 2; d <= max_degree / 2; ++d) irreducibles_[d] = irreducible_monics(f, d);
}

std::vector<Factor> Factorizer::factor(FPoly f) const {
  f = ring_.make_monic(f);
  if (f.empty()) throw PreconditionError("cannot factor the zero polynomial");
  std::vector<Factor> out;
  auto strip = [&](const FPoly& g) {
    unsigned mult = 0;
    while (f.size() >= g.size()) {
      FPoly r = f;
      FPoly q = ring_.divrem(r, g);
      if (!r.empty()) break;
      f = std::move(q);
      ++mult;
    }
    if (mult) out.push_back({g, mult});
  };
  for (Elem a = 0; a < field_.order() && f.size() > 1; ++a)
    if (ring_.eval(f, a) == 0) strip(FPoly{field_.neg(a), 1});
  for (unsigned d = 2; 2 * d <= f.size() - 1; ++d) {
    if (d >= irreducibles_.size()) throw PreconditionError("factorizer degree bound too small");
    for (const auto& g : irreducibles_[d]) {
      if (2 * d > f.size() - 1) break;
      strip(g);
    }
  }
  if (f.size() > 1) out.push_back({f, 1});
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    return a.poly < b.poly;
  });
  return out;
}

}  // namespace cuspcount::oracle
