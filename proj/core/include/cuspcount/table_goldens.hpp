#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuspcount/bigint.hpp"
#include "cuspcount/classtypes.hpp"
#include "cuspcount/rational_function.hpp"

namespace cuspcount {

// Parses expressions such as "(q-1)(q-3)/8", "(1-tq)(1-tq^3)" or
// "2(1+x)/((1+x)^2(1+x^2))": single-letter variables, juxtaposition or `*`
// for products, `/`, `^` with integer exponents.
RationalFunction parse_expression(const std::string& text, const std::vector<std::string>& vars);

struct GoldenRow {
  std::string name;        // e.g. "tau'5"
  SpType type;
  std::string count;       // N_tau(q) as printed
  std::string det;         // det(1 - t Fr | M) as printed
  std::string r;           // R_tau(x) as printed in the proof
};

// One row of a derivative table at x = -1: S, S' (and S'' where given), and
// H' = h1 * AB, H'' = h2[0] AB + h2[1] AC + h2[2] AD.
struct DerivativeRow {
  std::string name;
  BigRational s;
  std::optional<BigRational> s1;
  std::optional<BigRational> s2;
  long h1 = 0;
  std::optional<std::vector<long>> h2;
};

struct GoldenTable {
  int number = 0;
  unsigned n = 0;  // Sp_2n
  Parity parity = Parity::Odd;
  std::vector<GoldenRow> rows;
  std::vector<DerivativeRow> derivatives;
  // Rows whose S vanishes to first order at -1 but whose S'' is recorded.
  std::vector<DerivativeRow> second_order_only;
};

const std::vector<GoldenTable>& table_goldens();
const GoldenTable& golden_table(unsigned n, Parity parity);

}  // namespace cuspcount
