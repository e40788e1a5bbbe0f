#include "cuspcount/census.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "cuspcount/error.hpp"
#include "cuspcount/number_theory.hpp"

namespace cuspcount::oracle {
namespace {

std::uint64_t bounded_power(std::uint64_t q, unsigned e, std::uint64_t budget, const std::string& what) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < e; ++i) {
    total *= q;
    if (total > budget) throw BudgetExceeded(what + " exceeds the enumeration budget of " + std::to_string(budget));
  }
  return total;
}

template <class Visit>
void for_each_sl_poly(unsigned n, const FiniteField& f, std::uint64_t budget, Visit&& visit) {
  const std::uint64_t total = bounded_power(f.order(), n - 1, budget, "SL_" + std::to_string(n) + " census");
  FPoly p(n + 1, 0);
  p[n] = 1;
  p[0] = n % 2 == 0 ? f.one() : f.neg(f.one());
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 1; i < n; ++i) {
      p[i] = static_cast<Elem>(c % f.order());
      c /= f.order();
    }
    visit(p);
  }
}

template <class Visit>
void for_each_palindrome(unsigned n, const FiniteField& f, std::uint64_t budget, Visit&& visit) {
  const std::uint64_t total = bounded_power(f.order(), n, budget, "palindromic degree-" + std::to_string(2 * n));
  FPoly p(2 * n + 1, 0);
  p[0] = p[2 * n] = 1;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 1; i <= n; ++i) {
      p[i] = p[2 * n - i] = static_cast<Elem>(c % f.order());
      c /= f.order();
    }
    visit(p);
  }
}

// Classifies a palindromic polynomial; returns false when the multiplicity
// at x - 1 or x + 1 is odd.
bool classify_sp(const std::vector<Factor>& factors, const PolyRing& ring, SpType& out) {
  const FiniteField& f = ring.field();
  const FPoly x_minus_one{f.neg(f.one()), f.one()};
  const FPoly x_plus_one{f.one(), f.one()};
  unsigned plus = 0, minus = 0;
  std::vector<std::pair<unsigned, unsigned>> unitary, gl;
  for (const auto& [poly, mult] : factors) {
    if (poly == x_minus_one) {
      plus = mult;
      continue;
    }
    if (poly == x_plus_one) {
      minus = mult;
      continue;
    }
    const FPoly star = ring.reciprocal(poly);
    if (star == poly) {
      const unsigned deg = static_cast<unsigned>(poly.size() - 1);
      if (deg % 2 != 0) throw Error("self-reciprocal irreducible of odd degree " + std::to_string(deg));
      unitary.emplace_back(deg / 2, mult);
      continue;
    }
    const auto partner = std::find_if(factors.begin(), factors.end(), [&](const Factor& g) { return g.poly == star; });
    if (partner == factors.end() || partner->multiplicity != mult)
      throw Error("palindromic polynomial without matching reciprocal factor");
    if (poly < star) gl.emplace_back(static_cast<unsigned>(poly.size() - 1), mult);
  }
  if (plus % 2 != 0 || minus % 2 != 0) return false;
  out = SpType(plus / 2, minus / 2, std::move(unitary), std::move(gl));
  return true;
}

std::vector<FPoly> sl_polys(unsigned n, const FiniteField& f, std::uint64_t budget) {
  std::vector<FPoly> out;
  for_each_sl_poly(n, f, budget, [&](const FPoly& p) { out.push_back(p); });
  return out;
}

std::vector<FPoly> sp_polys(unsigned n, const FiniteField& f, std::uint64_t budget) {
  PolyRing ring(f);
  Factorizer fac(f, 2 * n);
  std::vector<FPoly> out;
  for_each_palindrome(n, f, budget, [&](const FPoly& p) {
    SpType t;
    if (classify_sp(fac.factor(p), ring, t)) out.push_back(p);
  });
  return out;
}

}  // namespace

std::map<SLType, std::uint64_t> sl_census(unsigned n, const FiniteField& f, std::uint64_t budget) {
  if (n == 0) throw PreconditionError("sl_census needs n >= 1");
  Factorizer fac(f, n);
  std::map<SLType, std::uint64_t> out;
  for_each_sl_poly(n, f, budget, [&](const FPoly& p) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (const auto& [poly, mult] : fac.factor(p)) pairs.emplace_back(static_cast<unsigned>(poly.size() - 1), mult);
    ++out[SLType(std::move(pairs))];
  });
  return out;
}

std::map<SpType, std::uint64_t> sp_census(unsigned n, const FiniteField& f, std::uint64_t budget) {
  if (n == 0) throw PreconditionError("sp_census needs n >= 1");
  PolyRing ring(f);
  Factorizer fac(f, 2 * n);
  std::map<SpType, std::uint64_t> out;
  for_each_palindrome(n, f, budget, [&](const FPoly& p) {
    SpType t;
    if (classify_sp(fac.factor(p), ring, t)) ++out[t];
  });
  return out;
}

std::uint64_t self_reciprocal_irreducible_census(const FiniteField& f, unsigned two_n, std::uint64_t budget) {
  if (two_n < 2 || two_n % 2 != 0) throw PreconditionError("self-reciprocal census needs an even degree >= 2");
  PolyRing ring(f);
  std::uint64_t count = 0;
  for_each_palindrome(two_n / 2, f, budget, [&](const FPoly& p) {
    if (ring.is_irreducible(p)) ++count;
  });
  return count;
}

namespace {

using Matrix = std::vector<Elem>;  // row-major n x n

struct MatrixOps {
  const FiniteField& f;
  unsigned n;

  Matrix identity() const {
    Matrix m(n * n, 0);
    for (unsigned i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
  }
  Matrix mul(const Matrix& a, const Matrix& b) const {
    Matrix c(n * n, 0);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned k = 0; k < n; ++k) {
        const Elem x = a[i * n + k];
        if (x == 0) continue;
        for (unsigned j = 0; j < n; ++j) c[i * n + j] = f.add(c[i * n + j], f.mul(x, b[k * n + j]));
      }
    return c;
  }
  Matrix transpose(const Matrix& a) const {
    Matrix t(n * n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
    return t;
  }
  Matrix inverse(const Matrix& a) const {
    Matrix m = a, inv = identity();
    for (unsigned col = 0; col < n; ++col) {
      unsigned piv = col;
      while (piv < n && m[piv * n + col] == 0) ++piv;
      if (piv == n) throw Error("singular matrix in group enumeration");
      for (unsigned j = 0; j < n; ++j) {
        std::swap(m[piv * n + j], m[col * n + j]);
        std::swap(inv[piv * n + j], inv[col * n + j]);
      }
      const Elem s = f.inv(m[col * n + col]);
      for (unsigned j = 0; j < n; ++j) {
        m[col * n + j] = f.mul(m[col * n + j], s);
        inv[col * n + j] = f.mul(inv[col * n + j], s);
      }
      for (unsigned r = 0; r < n; ++r) {
        if (r == col || m[r * n + col] == 0) continue;
        const Elem factor = m[r * n + col];
        for (unsigned j = 0; j < n; ++j) {
          m[r * n + j] = f.sub(m[r * n + j], f.mul(factor, m[col * n + j]));
          inv[r * n + j] = f.sub(inv[r * n + j], f.mul(factor, inv[col * n + j]));
        }
      }
    }
    return inv;
  }
  // det(x I - a) by cofactor expansion over polynomial entries.
  FPoly charpoly(const Matrix& a) const {
    PolyRing ring(f);
    std::vector<std::vector<FPoly>> m(n, std::vector<FPoly>(n));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        FPoly e{f.neg(a[i * n + j])};
        if (i == j) e.push_back(1);
        ring.trim(e);
        m[i][j] = e;
      }
    auto det = [&](auto&& self, std::vector<unsigned> rows, std::vector<unsigned> cols) -> FPoly {
      if (rows.size() == 1) return m[rows[0]][cols[0]];
      FPoly total;
      const unsigned r = rows[0];
      std::vector<unsigned> sub_rows(rows.begin() + 1, rows.end());
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (m[r][cols[k]].empty()) continue;
        std::vector<unsigned> sub_cols = cols;
        sub_cols.erase(sub_cols.begin() + static_cast<long>(k));
        FPoly term = ring.mul(m[r][cols[k]], self(self, sub_rows, sub_cols));
        total = k % 2 == 0 ? ring.add(total, term) : ring.sub(total, term);
      }
      return total;
    };
    std::vector<unsigned> idx(n);
    for (unsigned i = 0; i < n; ++i) idx[i] = i;
    return det(det, idx, idx);
  }
};

}  // namespace

MatrixCensus matrix_census_tiny(const GroupSpec& group, const FiniteField& f, std::uint64_t budget) {
  unsigned n = 0;
  bool symplectic = false;
  if ((group.kind == GroupSpec::Kind::SL && group.param == 2) || (group.kind == GroupSpec::Kind::Sp && group.param == 2)) {
    n = 2;
  } else if (group.kind == GroupSpec::Kind::Sp && group.param == 4) {
    n = 4;
    symplectic = true;
  } else {
    throw PreconditionError("matrix census supports SL_2, Sp_2 and Sp_4 only");
  }
  const std::uint64_t q = f.order();
  const std::uint64_t candidates = bounded_power(q, n * n, 10'000'000, "matrix enumeration");
  MatrixOps ops{f, n};

  Matrix j_form(n * n, 0);
  for (unsigned i = 0; i < n / 2; ++i) {
    j_form[i * n + (n / 2 + i)] = 1;
    j_form[(n / 2 + i) * n + i] = f.neg(1);
  }

  std::vector<Matrix> elements;
  std::unordered_map<std::uint64_t, std::size_t> index;
  auto key = [q](const Matrix& m) {
    std::uint64_t k = 0;
    for (auto it = m.rbegin(); it != m.rend(); ++it) k = k * q + *it;
    return k;
  };
  Matrix m(n * n);
  for (std::uint64_t code = 0; code < candidates; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < n * n; ++i) {
      m[i] = static_cast<Elem>(c % q);
      c /= q;
    }
    bool member;
    if (n == 2) {
      member = f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2])) == 1;
    } else {
      member = ops.mul(ops.mul(ops.transpose(m), j_form), m) == j_form;
    }
    if (!member) continue;
    if (elements.size() >= budget) throw BudgetExceeded("group order exceeds the matrix census budget");
    index.emplace(code, elements.size());
    elements.push_back(m);
  }
  (void)symplectic;

  MatrixCensus out;
  out.group_order = elements.size();
  std::vector<Matrix> inverses;
  inverses.reserve(elements.size());
  for (const auto& g : elements) inverses.push_back(ops.inverse(g));

  const Matrix id = ops.identity();
  const std::uint64_t p = f.characteristic();
  std::vector<char> seen(elements.size(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t order = 1;
    for (Matrix pw = elements[i]; pw != id; pw = ops.mul(pw, elements[i])) ++order;
    if (order % p == 0) continue;  // not semisimple
    for (std::size_t g = 0; g < elements.size(); ++g) {
      const Matrix conj = ops.mul(ops.mul(elements[g], elements[i]), inverses[g]);
      seen[index.at(key(conj))] = 1;
    }
    ++out.semisimple_classes;
    ++out.classes_per_charpoly[ops.charpoly(elements[i])];
  }

  const std::vector<FPoly> admissible = n == 2 && !symplectic ? sl_polys(2, f, kCensusBudget) : sp_polys(n / 2, f, 1'000'000);
  out.polynomial_classes = admissible.size();
  std::set<FPoly> expected(admissible.begin(), admissible.end());
  std::set<FPoly> found;
  bool single = true;
  for (const auto& [poly, count] : out.classes_per_charpoly) {
    found.insert(poly);
    if (count != 1) single = false;
  }
  out.bijection = single && found == expected;
  return out;
}

}  // namespace cuspcount::oracle
