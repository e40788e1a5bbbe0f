#pragma once

#include <gmpxx.h>

#include <string>

namespace cuspcount {

using BigInt = mpz_class;
// mpq_class keeps values in lowest terms with a positive denominator as long
// as every construction goes through make_rational or arithmetic operators.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt ipow(const BigInt& base, unsigned long exponent);
BigRational rpow(const BigRational& base, long exponent);

bool is_integer(const BigRational& value);
BigInt to_integer(const BigRational& value);  // throws InexactDivision

std::string to_string(const BigInt& value);
// "a/b", with the denominator omitted when it is 1.
std::string to_string(const BigRational& value);

BigInt parse_bigint(const std::string& text);
BigRational parse_rational(const std::string& text);

}  // namespace cuspcount
