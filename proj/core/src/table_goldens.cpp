#include "cuspcount/table_goldens.hpp"

#include <algorithm>
#include <cctype>

#include "cuspcount/error.hpp"

namespace cuspcount {
namespace {

class ExpressionParser {
 public:
  ExpressionParser(const std::string& text, const std::vector<std::string>& vars) : vars_(vars) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  RationalFunction parse() {
    RationalFunction r = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse expression '" + s_ + "' at position " + std::to_string(pos_) + ": " + why);
  }
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool at_factor_start() const {
    return pos_ < s_.size() && (s_[pos_] == '(' || std::isalnum(static_cast<unsigned char>(s_[pos_])));
  }
  RationalFunction constant(const BigInt& c) const { return RationalFunction(SymPoly::constant(vars_, c)); }

  RationalFunction expr() {
    RationalFunction r = constant(0);
    bool negate = false;
    if (at('-') || at('+')) negate = s_[pos_++] == '-';
    r = term();
    if (negate) r = -r;
    while (at('+') || at('-')) {
      const bool minus = s_[pos_++] == '-';
      RationalFunction t = term();
      r = minus ? r - t : r + t;
    }
    return r;
  }

  RationalFunction term() {
    RationalFunction r = factor();
    for (;;) {
      if (at('*')) {
        ++pos_;
        r = r * factor();
      } else if (at('/')) {
        ++pos_;
        r = r / factor();
      } else if (at_factor_start()) {
        r = r * factor();
      } else {
        return r;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction b = base();
    if (at('^')) {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      const unsigned long e = std::stoul(s_.substr(start, pos_ - start));
      RationalFunction r = constant(1);
      for (unsigned long i = 0; i < e; ++i) r = r * b;
      return r;
    }
    return b;
  }

  RationalFunction base() {
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!at(')')) fail("')' expected");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(BigInt(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name(1, c);
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) fail("unknown variable " + name);
      ++pos_;
      return RationalFunction(SymPoly::variable(vars_, name));
    }
    fail("unexpected character");
  }

  std::vector<std::string> vars_;
  std::string s_;
  std::size_t pos_ = 0;
};

using U = std::vector<std::pair<unsigned, unsigned>>;

DerivativeRow drow(const std::string& name, BigRational s, std::optional<BigRational> s1, long h1,
                   std::optional<std::vector<long>> h2 = std::nullopt) {
  DerivativeRow r;
  r.name = name;
  r.s = s;
  r.s1 = s1;
  r.h1 = h1;
  r.h2 = std::move(h2);
  return r;
}

BigRational q(long a, long b = 1) { return make_rational(a, b); }

std::vector<GoldenTable> build() {
  std::vector<GoldenTable> tables;

  GoldenTable t1;
  t1.number = 1;
  t1.n = 2;
  t1.parity = Parity::Odd;
  t1.rows = {
      {"tau1", SpType(2, 0, {}), "2", "(1-tq)(1-tq^3)", "2(1+x+x^2)/((1+x)^2(1+x^2))"},
      {"tau2", SpType(1, 1, {}), "1", "(1-tq)^2", "1/(1+x)^2"},
      {"tau3", SpType(1, 0, U{{1, 1}}), "q-1", "(1-tq)(1+t)", "2(x-1)/(1+x)^2"},
      {"tau4", SpType(0, 0, U{{1, 2}}), "(q-1)/2", "(1+t)(1-tq)", "(x-1)/(1+x)^2"},
      {"tau5", SpType(0, 0, U{{1, 1}, {1, 1}}), "(q-1)(q-3)/8", "(1+t)^2", "(x-1)(x-3)/(2(1+x)^2)"},
      {"tau6", SpType(0, 0, U{{2, 1}}), "(q^2-1)/4", "1+t^2", "(x^2-1)/(2(1+x^2))"},
  };
  t1.derivatives = {drow("tau1", q(1), std::nullopt, -4), drow("tau2", q(1), std::nullopt, -2),
                    drow("tau3", q(-4), std::nullopt, -1), drow("tau4", q(-2), std::nullopt, -1),
                    drow("tau5", q(4), std::nullopt, 0)};
  tables.push_back(t1);

  GoldenTable t2;
  t2.number = 2;
  t2.n = 2;
  t2.parity = Parity::Even;
  t2.rows = {
      {"tau'1", SpType(2, 0, {}), "1", "(1-tq)(1-tq^3)", "(1+x+x^2)/((1+x)^2(1+x^2))"},
      {"tau'3", SpType(1, 0, U{{1, 1}}), "q/2", "(1-tq)(1+t)", "x/(1+x)^2"},
      {"tau'4", SpType(0, 0, U{{1, 2}}), "q/2", "(1+t)(1-tq)", "x/(1+x)^2"},
      {"tau'5", SpType(0, 0, U{{1, 1}, {1, 1}}), "q(q-2)/8", "(1+t)^2", "x(x-2)/(2(1+x)^2)"},
      {"tau'6", SpType(0, 0, U{{2, 1}}), "q^2/4", "1+t^2", "x^2/(2(1+x^2))"},
  };
  t2.derivatives = {drow("tau'1", q(1, 2), std::nullopt, -4), drow("tau'3", q(-1), std::nullopt, -1),
                    drow("tau'4", q(-1), std::nullopt, -1), drow("tau'5", q(3, 2), std::nullopt, 0)};
  tables.push_back(t2);

  GoldenTable t3;
  t3.number = 3;
  t3.n = 3;
  t3.parity = Parity::Odd;
  t3.rows = {
      {"tau1", SpType(3, 0, {}), "2", "(1-tq)(1-tq^3)(1-tq^5)",
       "2(1+x+x^2+x^3+x^4)/((1+x)^3(1+x^2)(1-x+x^2))"},
      {"tau2", SpType(2, 1, {}), "2", "(1-tq)^2(1-tq^3)", "2(1+x+x^2)/((1+x)^3(1+x^2))"},
      {"tau3", SpType(2, 0, U{{1, 1}}), "q-1", "(1+t)(1-tq)(1-tq^3)", "2(x-1)(1+x+x^2)/((1+x)^3(1+x^2))"},
      {"tau4", SpType(1, 1, U{{1, 1}}), "(q-1)/2", "(1+t)(1-tq)^2", "(x-1)/(1+x)^3"},
      {"tau5", SpType(1, 0, U{{1, 2}}), "q-1", "(1+t)(1-tq)^2", "2(x-1)/(1+x)^3"},
      {"tau6", SpType(1, 0, U{{1, 1}, {1, 1}}), "(q-1)(q-3)/4", "(1+t)^2(1-tq)", "(x-1)(x-3)/(1+x)^3"},
      {"tau7", SpType(1, 0, U{{2, 1}}), "(q^2-1)/2", "(1+t^2)(1-tq)", "(x-1)/(1+x^2)"},
      {"tau8", SpType(0, 0, U{{1, 3}}), "(q-1)/2", "(1+t)(1-tq)(1+tq^2)", "(x-1)(1+x^2)/((1+x)^3(1-x+x^2))"},
      {"tau9", SpType(0, 0, U{{1, 2}, {1, 1}}), "(q-1)(q-3)/4", "(1+t)^2(1-tq)", "(x-1)(x-3)/(1+x)^3"},
      {"tau10", SpType(0, 0, U{{1, 1}, {1, 1}, {1, 1}}), "(q-1)(q-3)(q-5)/48", "(1+t)^3",
       "(x-1)(x-3)(x-5)/(6(1+x)^3)"},
      {"tau11", SpType(0, 0, U{{2, 1}, {1, 1}}), "(q-1)(q^2-1)/8", "(1+t)(1+t^2)", "(x-1)^2/(2(1+x^2))"},
      {"tau12", SpType(0, 0, U{{3, 1}}), "(q^3-q)/6", "1+t^3", "x(x-1)/(3(1-x+x^2))"},
  };
  using H2 = std::vector<long>;
  t3.derivatives = {
      drow("tau1", q(1, 3), q(0), -9, H2{26, 46, 81}), drow("tau2", q(1), q(0), -5, H2{6, 14, 25}),
      drow("tau3", q(-2), q(1), -4, H2{6, 6, 16}),     drow("tau4", q(-2), q(1), -2, H2{0, 2, 4}),
      drow("tau5", q(-4), q(2), -2, H2{0, 2, 4}),      drow("tau6", q(8), q(-6), -1, H2{0, 0, 1}),
      drow("tau8", q(-4, 3), q(2, 3), -3, H2{2, 4, 9}), drow("tau9", q(8), q(-6), -1, H2{0, 0, 1}),
      drow("tau10", q(-8), q(22, 3), 0, H2{0, 0, 0}),
  };
  tables.push_back(t3);

  GoldenTable t4;
  t4.number = 4;
  t4.n = 3;
  t4.parity = Parity::Even;
  t4.rows = {
      {"tau'1", SpType(3, 0, {}), "1", "(1-tq)(1-tq^3)(1-tq^5)",
       "(1+x+x^2+x^3+x^4)/((1+x)^3(1+x^2)(1-x+x^2))"},
      {"tau'3", SpType(2, 0, U{{1, 1}}), "q/2", "(1+t)(1-tq)(1-tq^3)", "x(1+x+x^2)/((1+x)^3(1+x^2))"},
      {"tau'5", SpType(1, 0, U{{1, 2}}), "q/2", "(1+t)(1-tq)^2", "x/(1+x)^3"},
      {"tau'6", SpType(1, 0, U{{1, 1}, {1, 1}}), "q(q-2)/8", "(1+t)^2(1-tq)", "x(x-2)/(2(1+x)^3)"},
      {"tau'7", SpType(1, 0, U{{2, 1}}), "q^2/4", "(1+t^2)(1-tq)", "x^2/(2(1+x)(1+x^2))"},
      {"tau'8", SpType(0, 0, U{{1, 3}}), "q/2", "(1+t)(1-tq)(1+tq^2)", "x(1+x^2)/((1+x)^3(1-x+x^2))"},
      {"tau'9", SpType(0, 0, U{{1, 2}, {1, 1}}), "q(q-2)/4", "(1+t)^2(1-tq)", "x(x-2)/(1+x)^3"},
      {"tau'10", SpType(0, 0, U{{1, 1}, {1, 1}, {1, 1}}), "q(q-2)(q-4)/48", "(1+t)^3",
       "x(x-2)(x-4)/(6(1+x)^3)"},
      {"tau'11", SpType(0, 0, U{{2, 1}, {1, 1}}), "q^3/8", "(1+t)(1+t^2)", "x^3/(2(1+x)(1+x^2))"},
      {"tau'12", SpType(0, 0, U{{3, 1}}), "(q^3-q)/6", "1+t^3", "x(x-1)/(3(1-x+x^2))"},
  };
  t4.derivatives = {
      drow("tau'1", q(1, 6), q(0), -9, H2{26, 46, 81}),    drow("tau'3", q(-1, 2), q(1, 2), -4, H2{6, 6, 16}),
      drow("tau'5", q(-1), q(1), -2, H2{0, 2, 4}),          drow("tau'6", q(3, 2), q(-2), -1, H2{0, 0, 1}),
      drow("tau'8", q(-2, 3), q(2, 3), -3, H2{2, 4, 9}),    drow("tau'9", q(3), q(-4), -1, H2{0, 0, 1}),
      drow("tau'10", q(-5, 2), q(23, 6), 0, H2{0, 0, 0}),
  };
  DerivativeRow s7 = drow("tau'7", q(0), q(0), 0);
  s7.s2 = q(1, 2);
  DerivativeRow s11 = drow("tau'11", q(0), q(0), 0);
  s11.s2 = q(-1, 2);
  t4.second_order_only = {s7, s11};
  tables.push_back(t4);
  return tables;
}

}  // namespace

RationalFunction parse_expression(const std::string& text, const std::vector<std::string>& vars) {
  return ExpressionParser(text, vars).parse();
}

const std::vector<GoldenTable>& table_goldens() {
  static const std::vector<GoldenTable> tables = build();
  return tables;
}

const GoldenTable& golden_table(unsigned n, Parity parity) {
  for (const auto& t : table_goldens())
    if (t.n == n && t.parity == parity) return t;
  throw PreconditionError("no golden table for Sp_" + std::to_string(2 * n) + ", q " + to_string(parity));
}

}  // namespace cuspcount
