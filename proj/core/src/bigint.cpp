#include "cuspcount/bigint.hpp"

#include "cuspcount/error.hpp"

namespace cuspcount {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigRational rpow(const BigRational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw PreconditionError("zero raised to a negative power");
    return rpow(1 / base, -exponent);
  }
  BigInt num = ipow(base.get_num(), static_cast<unsigned long>(exponent));
  BigInt den = ipow(base.get_den(), static_cast<unsigned long>(exponent));
  return make_rational(num, den);
}

bool is_integer(const BigRational& value) { return value.get_den() == 1; }

BigInt to_integer(const BigRational& value) {
  if (!is_integer(value)) throw InexactDivision("value " + to_string(value) + " is not an integer");
  return value.get_num();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt parse_bigint(const std::string& text) {
  BigInt r;
  if (text.empty() || r.set_str(text, 10) != 0) throw ParseError("not an integer: '" + text + "'");
  return r;
}

BigRational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_bigint(text));
  return make_rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

}  // namespace cuspcount
