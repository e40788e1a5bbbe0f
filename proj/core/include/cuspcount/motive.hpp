#pragma once

#include <string>
#include <vector>

#include "cuspcount/int_poly.hpp"
#include "cuspcount/sym_poly.hpp"

namespace cuspcount {

// V_d(1-d) recorded through c_d(u) = det(1 - u F | V_d).
struct GradedPiece {
  unsigned weight = 1;
  IntPoly charpoly;

  friend bool operator==(const GradedPiece& a, const GradedPiece& b) {
    return a.weight == b.weight && a.charpoly == b.charpoly;
  }
};

class ArtinTateMotive {
 public:
  ArtinTateMotive() = default;
  // Pieces of equal weight are multiplied together; trivial pieces dropped.
  explicit ArtinTateMotive(std::vector<GradedPiece> pieces);

  const std::vector<GradedPiece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  // Returns 1 when there is no piece of that weight.
  IntPoly charpoly(unsigned weight) const;

  friend bool operator==(const ArtinTateMotive& a, const ArtinTateMotive& b) { return a.pieces_ == b.pieces_; }
  friend bool operator!=(const ArtinTateMotive& a, const ArtinTateMotive& b) { return !(a == b); }

 private:
  std::vector<GradedPiece> pieces_;
};

struct GroupSpec {
  enum class Kind { GL, SL, U, Sp, SO, Res, Product };

  Kind kind = Kind::Product;
  // GL/SL/U: n. Sp: 2n. SO: 2n+1. Res: extension degree.
  unsigned param = 0;
  std::vector<GroupSpec> children;

  static GroupSpec gl(unsigned n);
  static GroupSpec sl(unsigned n);
  static GroupSpec unitary(unsigned n);
  static GroupSpec sp(unsigned two_n);
  static GroupSpec so(unsigned two_n_plus_one);
  static GroupSpec res(unsigned degree, GroupSpec inner);
  static GroupSpec product(std::vector<GroupSpec> factors);

  void validate() const;  // throws PreconditionError
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.kind == b.kind && a.param == b.param && a.children == b.children;
  }
};

ArtinTateMotive motive_of(const GroupSpec& spec);
ArtinTateMotive direct_sum(const ArtinTateMotive& a, const ArtinTateMotive& b);
ArtinTateMotive induce(const ArtinTateMotive& m, unsigned degree);
// Divides the weight-1 piece by 1 - u; PreconditionError if impossible.
ArtinTateMotive quotient_trivial(const ArtinTateMotive& m);
// Motive over F_{q^k}: every Frobenius eigenvalue raised to the k-th power.
ArtinTateMotive base_change(const ArtinTateMotive& m, unsigned k);

// c(u) -> polynomial with the k-th powers of the inverse roots.
IntPoly charpoly_power(const IntPoly& c, unsigned k);

// prod_d c_d(t q^(d-1)) over the variables {"t", "q"}.
SymPoly frobenius_det(const ArtinTateMotive& m);
// Same with q specialized, as a polynomial in t.
IntPoly frobenius_det_at(const ArtinTateMotive& m, const BigInt& q);
// Factored form such as "(1 - t*q)(1 - t*q^3)"; "1" for the empty motive.
std::string format_frobenius_det(const ArtinTateMotive& m);

// Every charpoly factors into cyclotomic polynomials.
bool has_cyclotomic_charpolys(const ArtinTateMotive& m);

}  // namespace cuspcount
