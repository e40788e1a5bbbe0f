#include "cuspcount/motive.hpp"

#include <algorithm>
#include <map>

#include "cuspcount/cyclotomic.hpp"
#include "cuspcount/error.hpp"

namespace cuspcount {
namespace {

const std::vector<std::string>& tq_vars() {
  static const std::vector<std::string> vars{"t", "q"};
  return vars;
}

IntPoly one_minus_u() { return IntPoly{1, -1}; }
IntPoly one_plus_u() { return IntPoly{1, 1}; }

ArtinTateMotive uniform(unsigned from, unsigned to, unsigned step, const IntPoly& c) {
  std::vector<GradedPiece> pieces;
  for (unsigned d = from; d <= to; d += step) pieces.push_back({d, c});
  return ArtinTateMotive(std::move(pieces));
}

}  // namespace

ArtinTateMotive::ArtinTateMotive(std::vector<GradedPiece> pieces) {
  std::map<unsigned, IntPoly> merged;
  for (auto& p : pieces) {
    if (p.weight == 0) throw PreconditionError("motive weight index must be positive");
    if (p.charpoly.coeff(0) != 1) throw PreconditionError("Artin characteristic polynomial must satisfy c(0) = 1");
    auto [it, inserted] = merged.try_emplace(p.weight, p.charpoly);
    if (!inserted) it->second = it->second * p.charpoly;
  }
  for (auto& [w, c] : merged)
    if (!c.is_one()) pieces_.push_back({w, std::move(c)});
}

IntPoly ArtinTateMotive::charpoly(unsigned weight) const {
  for (const auto& p : pieces_)
    if (p.weight == weight) return p.charpoly;
  return IntPoly::constant(1);
}

GroupSpec GroupSpec::gl(unsigned n) { return {Kind::GL, n, {}}; }
GroupSpec GroupSpec::sl(unsigned n) { return {Kind::SL, n, {}}; }
GroupSpec GroupSpec::unitary(unsigned n) { return {Kind::U, n, {}}; }
GroupSpec GroupSpec::sp(unsigned two_n) { return {Kind::Sp, two_n, {}}; }
GroupSpec GroupSpec::so(unsigned two_n_plus_one) { return {Kind::SO, two_n_plus_one, {}}; }
GroupSpec GroupSpec::res(unsigned degree, GroupSpec inner) { return {Kind::Res, degree, {std::move(inner)}}; }
GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) { return {Kind::Product, 0, std::move(factors)}; }

void GroupSpec::validate() const {
  switch (kind) {
    case Kind::GL:
    case Kind::SL:
    case Kind::U:
      if (param < 1) throw PreconditionError("group rank must be positive");
      break;
    case Kind::Sp:
      if (param < 2 || param % 2 != 0) throw PreconditionError("Sp needs an even positive dimension");
      break;
    case Kind::SO:
      if (param < 3 || param % 2 != 1) throw PreconditionError("SO needs an odd dimension >= 3");
      break;
    case Kind::Res:
      if (param < 1) throw PreconditionError("Res degree must be positive");
      if (children.size() != 1) throw PreconditionError("Res takes exactly one group");
      children[0].validate();
      break;
    case Kind::Product:
      for (const auto& c : children) c.validate();
      break;
  }
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::GL: return "GL(" + std::to_string(param) + ")";
    case Kind::SL: return "SL(" + std::to_string(param) + ")";
    case Kind::U: return "U(" + std::to_string(param) + ")";
    case Kind::Sp: return "Sp(" + std::to_string(param) + ")";
    case Kind::SO: return "SO(" + std::to_string(param) + ")";
    case Kind::Res: return "Res(" + std::to_string(param) + ", " + children.at(0).to_string() + ")";
    case Kind::Product: {
      std::string s = "Product(";
      for (std::size_t i = 0; i < children.size(); ++i) s += (i ? ", " : "") + children[i].to_string();
      return s + ")";
    }
  }
  return "?";
}

ArtinTateMotive motive_of(const GroupSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case GroupSpec::Kind::GL: return uniform(1, spec.param, 1, one_minus_u());
    case GroupSpec::Kind::SL: return uniform(2, spec.param, 1, one_minus_u());
    case GroupSpec::Kind::U: {
      std::vector<GradedPiece> pieces;
      for (unsigned d = 1; d <= spec.param; ++d) pieces.push_back({d, d % 2 ? one_plus_u() : one_minus_u()});
      return ArtinTateMotive(std::move(pieces));
    }
    case GroupSpec::Kind::Sp: return uniform(2, spec.param, 2, one_minus_u());
    case GroupSpec::Kind::SO: return uniform(2, spec.param - 1, 2, one_minus_u());
    case GroupSpec::Kind::Res: return induce(motive_of(spec.children[0]), spec.param);
    case GroupSpec::Kind::Product: {
      ArtinTateMotive m;
      for (const auto& c : spec.children) m = direct_sum(m, motive_of(c));
      return m;
    }
  }
  return {};
}

ArtinTateMotive direct_sum(const ArtinTateMotive& a, const ArtinTateMotive& b) {
  std::vector<GradedPiece> pieces = a.pieces();
  pieces.insert(pieces.end(), b.pieces().begin(), b.pieces().end());
  return ArtinTateMotive(std::move(pieces));
}

ArtinTateMotive induce(const ArtinTateMotive& m, unsigned degree) {
  if (degree == 0) throw PreconditionError("induction degree must be positive");
  std::vector<GradedPiece> pieces;
  for (const auto& p : m.pieces()) pieces.push_back({p.weight, p.charpoly.inflate(degree)});
  return ArtinTateMotive(std::move(pieces));
}

ArtinTateMotive quotient_trivial(const ArtinTateMotive& m) {
  std::vector<GradedPiece> pieces = m.pieces();
  for (auto& p : pieces) {
    if (p.weight != 1) continue;
    auto [q, r] = divrem(p.charpoly, one_minus_u());
    if (!r.is_zero()) throw PreconditionError("weight-1 piece has no trivial summand");
    p.charpoly = q;
    return ArtinTateMotive(std::move(pieces));
  }
  throw PreconditionError("motive has no weight-1 piece");
}

IntPoly charpoly_power(const IntPoly& c, unsigned k) {
  if (k == 1 || c.degree() <= 0) return c;
  // c(u) = prod (1 - lambda u); its reversal is monic with roots lambda.
  IntPoly rev = c.reversed();
  const BigInt lc = rev.leading();
  if (abs(lc) != 1) throw PreconditionError("Artin characteristic polynomial must have unit leading coefficient");
  IntPoly powered = root_power_transform(rev, k);
  IntPoly out = powered.reversed();
  // keep c(0) = 1 after normalizing the monic reversal
  if (out.coeff(0) != 1) out = -out;
  return out;
}

ArtinTateMotive base_change(const ArtinTateMotive& m, unsigned k) {
  if (k == 0) throw PreconditionError("base change degree must be positive");
  std::vector<GradedPiece> pieces;
  for (const auto& p : m.pieces()) pieces.push_back({p.weight, charpoly_power(p.charpoly, k)});
  return ArtinTateMotive(std::move(pieces));
}

SymPoly frobenius_det(const ArtinTateMotive& m) {
  const auto& vars = tq_vars();
  SymPoly out = SymPoly::constant(vars, 1);
  for (const auto& p : m.pieces()) {
    std::vector<SymPoly::Term> terms;
    for (std::size_t i = 0; i < p.charpoly.coeffs().size(); ++i) {
      if (p.charpoly.coeffs()[i] == 0) continue;
      Monomial mono{};
      mono[0] = static_cast<std::uint16_t>(i);
      mono[1] = static_cast<std::uint16_t>(i * (p.weight - 1));
      terms.emplace_back(mono, p.charpoly.coeffs()[i]);
    }
    out = out * SymPoly::from_terms(vars, std::move(terms));
  }
  return out;
}

IntPoly frobenius_det_at(const ArtinTateMotive& m, const BigInt& q) {
  IntPoly out = IntPoly::constant(1);
  for (const auto& p : m.pieces()) out = out * p.charpoly.scale_argument(ipow(q, p.weight - 1));
  return out;
}

std::string format_frobenius_det(const ArtinTateMotive& m) {
  std::vector<std::pair<std::string, unsigned>> factors;
  auto add = [&](const std::string& s) {
    for (auto& f : factors)
      if (f.first == s) {
        ++f.second;
        return;
      }
    factors.emplace_back(s, 1);
  };
  for (const auto& p : m.pieces()) {
    IntPoly rest = p.charpoly;
    std::vector<IntPoly> found;
    // Peel binomials 1 -+ u^k, largest k first.
    for (int k = rest.degree(); k >= 1 && rest.degree() > 0; --k) {
      for (int sign : {-1, 1}) {
        IntPoly b = IntPoly::constant(1) + IntPoly::monomial(sign, static_cast<std::size_t>(k));
        for (;;) {
          if (rest.degree() < k) break;
          IntDivRem qr;
          try {
            qr = divrem(rest, b);
          } catch (const InexactDivision&) {
            break;
          }
          if (!qr.remainder.is_zero()) break;
          rest = qr.quotient;
          found.push_back(b);
        }
      }
    }
    if (rest.degree() > 0) found.push_back(rest);
    std::sort(found.begin(), found.end(), [](const IntPoly& a, const IntPoly& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a.coeffs() < b.coeffs();
    });
    for (const auto& f : found) add("(" + frobenius_det(ArtinTateMotive({{p.weight, f}})).to_string() + ")");
    if (rest.degree() == 0 && rest.coeff(0) == -1) add("(-1)");
  }
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [s, k] : factors) out += k == 1 ? s : s + "^" + std::to_string(k);
  return out;
}

bool has_cyclotomic_charpolys(const ArtinTateMotive& m) {
  for (const auto& p : m.pieces()) {
    const unsigned deg = static_cast<unsigned>(std::max(p.charpoly.degree(), 1));
    if (!is_cyclotomic_product(p.charpoly.reversed(), 2 * deg * deg)) return false;
  }
  return true;
}

}  // namespace cuspcount
