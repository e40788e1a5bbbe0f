#include "cuspcount/cyclotomic_field.hpp"

#include <algorithm>
#include <numeric>

#include "cuspcount/cyclotomic.hpp"
#include "cuspcount/error.hpp"

namespace cuspcount {
namespace {

using QPoly = std::vector<BigRational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPoly& p) { return QPoly(p.coeffs().begin(), p.coeffs().end()); }

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Returns remainder; quotient optional.
QPoly rem(QPoly a, const QPoly& b, QPoly* quot = nullptr) {
  const std::size_t db = b.size() - 1;
  if (quot) quot->assign(a.size() >= b.size() ? a.size() - db : 0, BigRational(0));
  while (a.size() >= b.size()) {
    BigRational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    if (quot) (*quot)[shift] = f;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

unsigned lcm_conductor(unsigned a, unsigned b) {
  const unsigned long l = std::lcm(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  if (l > kMaxConductor) throw PreconditionError("cyclotomic conductor exceeds " + std::to_string(kMaxConductor));
  return static_cast<unsigned>(l);
}

CyclotomicRational::CyclotomicRational(const BigRational& value) {
  if (value != 0) coeffs_.push_back(value);
}

CyclotomicRational::CyclotomicRational(unsigned conductor, std::vector<BigRational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (conductor_ == 0 || conductor_ > kMaxConductor) throw PreconditionError("invalid cyclotomic conductor");
  normalize();
}

void CyclotomicRational::normalize() {
  trim(coeffs_);
  coeffs_ = rem(std::move(coeffs_), to_q(cyclotomic(conductor_)));
  if (coeffs_.size() <= 1) conductor_ = 1;
}

CyclotomicRational CyclotomicRational::root_of_unity(unsigned n, long k) {
  if (n == 0) throw PreconditionError("root of unity of order 0");
  long e = k % static_cast<long>(n);
  if (e < 0) e += n;
  QPoly v(static_cast<std::size_t>(e) + 1);
  v[static_cast<std::size_t>(e)] = 1;
  return CyclotomicRational(n, std::move(v));
}

CyclotomicRational CyclotomicRational::lift(unsigned conductor) const {
  if (conductor % conductor_ != 0) throw PreconditionError("lift to a conductor that is not a multiple");
  if (conductor == conductor_ || coeffs_.size() <= 1) {
    CyclotomicRational r = *this;
    if (coeffs_.size() > 1) r.conductor_ = conductor;
    return r;
  }
  const std::size_t step = conductor / conductor_;
  QPoly v((coeffs_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * step] = coeffs_[i];
  CyclotomicRational r;
  r.conductor_ = conductor;
  r.coeffs_ = rem(std::move(v), to_q(cyclotomic(conductor)));
  return r;
}

BigRational CyclotomicRational::rational_value() const {
  if (!is_rational()) throw PreconditionError("cyclotomic number is not rational");
  return coeffs_.empty() ? BigRational(0) : coeffs_[0];
}

bool CyclotomicRational::has_integral_coordinates() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c.get_den() == 1; });
}

CyclotomicRational CyclotomicRational::operator-() const {
  CyclotomicRational r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicRational operator+(const CyclotomicRational& a, const CyclotomicRational& b) {
  const unsigned n = lcm_conductor(a.conductor_, b.conductor_);
  CyclotomicRational x = a.lift(n);
  CyclotomicRational y = b.lift(n);
  QPoly v(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) v[i] += x.coeffs_[i];
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) v[i] += y.coeffs_[i];
  return CyclotomicRational(n, std::move(v));
}

CyclotomicRational operator-(const CyclotomicRational& a, const CyclotomicRational& b) { return a + (-b); }

CyclotomicRational operator*(const CyclotomicRational& a, const CyclotomicRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_rational()) {
    CyclotomicRational r = b;
    for (auto& c : r.coeffs_) c *= a.coeffs_[0];
    return r;
  }
  if (b.is_rational()) return b * a;
  const unsigned n = lcm_conductor(a.conductor_, b.conductor_);
  return CyclotomicRational(n, mul(a.lift(n).coeffs_, b.lift(n).coeffs_));
}

CyclotomicRational CyclotomicRational::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  if (is_rational()) return CyclotomicRational(BigRational(1 / coeffs_[0]));
  // Extended Euclid: s * a + t * phi = g, with g a nonzero constant.
  const QPoly phi = to_q(cyclotomic(conductor_));
  QPoly r0 = phi, r1 = coeffs_;
  QPoly s0, s1{BigRational(1)};
  while (!r1.empty()) {
    QPoly q;
    QPoly r2 = rem(r0, r1, &q);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw Error("cyclotomic inverse: element is a zero divisor");
  for (auto& c : s0) c /= r0[0];
  return CyclotomicRational(conductor_, std::move(s0));
}

CyclotomicRational operator/(const CyclotomicRational& a, const CyclotomicRational& b) { return a * b.inverse(); }

bool operator==(const CyclotomicRational& a, const CyclotomicRational& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const unsigned n = lcm_conductor(a.conductor_, b.conductor_);
  return a.lift(n).coeffs_ == b.lift(n).coeffs_;
}

bool less_at_common_conductor(const CyclotomicRational& a, const CyclotomicRational& b) {
  const unsigned n = lcm_conductor(a.conductor_, b.conductor_);
  QPoly x = a.lift(n).coeffs_;
  QPoly y = b.lift(n).coeffs_;
  const std::size_t len = std::max(x.size(), y.size());
  x.resize(len);
  y.resize(len);
  for (std::size_t i = len; i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

CyclotomicRational CyclotomicRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicRational result(1L);
  CyclotomicRational base = *this;
  while (e) {
    if (e & 1L) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string CyclotomicRational::to_string() const {
  if (coeffs_.empty()) return "0";
  const std::string z = "z" + std::to_string(conductor_);
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigRational& c = coeffs_[i];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    if (i >= 1) mono = z;
    if (i >= 2) mono += "^" + std::to_string(i);
    if (mono.empty()) {
      out += cuspcount::to_string(mag);
    } else {
      if (mag != 1) out += cuspcount::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace cuspcount
