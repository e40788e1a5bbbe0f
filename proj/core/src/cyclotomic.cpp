#include "cuspcount/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "cuspcount/error.hpp"
#include "cuspcount/number_theory.hpp"

namespace cuspcount {
namespace {

std::shared_mutex g_mutex;
// unique_ptr keeps returned references stable while the map grows.
std::map<unsigned, std::unique_ptr<IntPoly>> g_memo;

IntPoly compute(unsigned n) {
  IntPoly p = IntPoly::monomial(1, n) - IntPoly::constant(1);
  for (auto d : divisors(n))
    if (d < n) p = exact_div(p, cyclotomic(static_cast<unsigned>(d)));
  return p;
}

}  // namespace

const IntPoly& cyclotomic(unsigned n) {
  if (n == 0) throw PreconditionError("cyclotomic(0)");
  {
    std::shared_lock lock(g_mutex);
    auto it = g_memo.find(n);
    if (it != g_memo.end()) return *it->second;
  }
  auto value = std::make_unique<IntPoly>(compute(n));
  std::unique_lock lock(g_mutex);
  auto [it, inserted] = g_memo.emplace(n, std::move(value));
  return *it->second;
}

unsigned cyclotomic_multiplicity(const IntPoly& p, unsigned n) {
  if (p.is_zero()) throw PreconditionError("multiplicity in the zero polynomial");
  const IntPoly& phi = cyclotomic(n);
  IntPoly r = p;
  unsigned k = 0;
  for (;;) {
    auto [q, rem] = divrem(r, phi);
    if (!rem.is_zero()) return k;
    r = q;
    ++k;
  }
}

bool is_cyclotomic_product(const IntPoly& p, unsigned max_order) {
  if (p.is_zero()) return false;
  IntPoly r = p;
  for (unsigned k = 1; k <= max_order && r.degree() > 0; ++k) {
    const IntPoly& phi = cyclotomic(k);
    for (;;) {
      auto [q, rem] = divrem(r, phi);
      if (!rem.is_zero()) break;
      r = q;
    }
  }
  return r.degree() == 0 && abs(r.leading()) == 1;
}

}  // namespace cuspcount
