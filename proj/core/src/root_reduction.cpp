#include "cuspcount/root_reduction.hpp"

#include "cuspcount/error.hpp"

namespace cuspcount {
namespace {

SymPoly reduce_group(const SymPoly& p, const RootGroup& group) {
  const std::size_t r = group.variables.size();
  IntPoly f = group.roots_of;
  if (!f.is_zero() && f.leading() == -1) f = -f;
  if (f.is_zero() || f.leading() != 1) throw PreconditionError("root group polynomial must be monic");
  if (static_cast<std::size_t>(f.degree()) != r)
    throw PreconditionError("root group has " + std::to_string(r) + " variables but degree " + std::to_string(f.degree()));
  if (r == 0) return p;
  const auto& vars = p.variables();
  std::vector<std::size_t> idx;
  for (const auto& name : group.variables) idx.push_back(p.index_of(name));

  std::vector<SymPoly> modules;
  modules.push_back(SymPoly::from_univariate(vars, idx[0], f));
  for (std::size_t k = 1; k < r; ++k) {
    const SymPoly& prev = modules.back();
    SymPoly shifted = prev.swap_variables(idx[k - 1], idx[k]);
    SymPoly diff = SymPoly::variable(vars, vars[idx[k]]) - SymPoly::variable(vars, vars[idx[k - 1]]);
    modules.push_back(exact_div(shifted - prev, diff, idx[k]));
  }
  SymPoly out = p;
  for (std::size_t k = r; k-- > 0;) out = divrem(out, modules[k], idx[k]).remainder;
  for (auto i : idx)
    if (out.degree(i) > 0) throw PreconditionError("polynomial is not symmetric in the root group");
  return out;
}

}  // namespace

SymPoly reduce_at_roots(const SymPoly& p, const std::vector<RootGroup>& groups) {
  SymPoly out = p;
  for (const auto& g : groups) out = reduce_group(out, g);
  return out;
}

BigRational eval_at_roots(const SymPoly& p, const std::vector<RootGroup>& groups,
                          const std::map<std::string, BigRational>& others) {
  SymPoly reduced = reduce_at_roots(p, groups);
  std::map<std::string, BigRational> at = others;
  for (const auto& g : groups)
    for (const auto& v : g.variables) at.emplace(v, BigRational(0));
  return reduced.eval(at);
}

std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace cuspcount
