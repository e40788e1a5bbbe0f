#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cuspcount {

using PrimeFactorization = std::vector<std::pair<std::uint64_t, unsigned>>;

PrimeFactorization factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);  // ascending
int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
};
// Returns {0, 0} when q is not a prime power.
PrimePower prime_power_decomposition(std::uint64_t q);
bool is_prime_power(std::uint64_t q);

// Overflow-checked integer power; throws PreconditionError on overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

}  // namespace cuspcount
