#include "cuspcount/number_theory.hpp"

#include <algorithm>
#include <limits>

#include "cuspcount/error.hpp"

namespace cuspcount {

PrimeFactorization factorize(std::uint64_t n) {
  if (n == 0) throw PreconditionError("factorize(0)");
  PrimeFactorization out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

PrimePower prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return {};
  auto f = factorize(q);
  if (f.size() != 1) return {};
  return {f[0].first, f[0].second};
}

bool is_prime_power(std::uint64_t q) { return prime_power_decomposition(q).prime != 0; }

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw PreconditionError("integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace cuspcount
