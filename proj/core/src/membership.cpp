#include "cca/membership.hpp"

#include "cca/errors.hpp"

namespace cca {

namespace {

// Depth-first search over generator multisets with non-decreasing generator
// index, so each multiset is visited once. All generators have positive total
// degree, hence the remaining degree strictly drops and the search is finite.
bool search(const std::vector<std::uint32_t>& remaining,
            const std::vector<Monomial>& gens, std::size_t first,
            std::vector<std::uint32_t>& mults) {
  bool all_zero = true;
  for (std::uint32_t e : remaining) {
    if (e != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return true;
  for (std::size_t g = first; g < gens.size(); ++g) {
    const auto& exps = gens[g].exponents();
    bool fits = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > remaining[i]) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    std::vector<std::uint32_t> next(remaining);
    for (std::size_t i = 0; i < exps.size(); ++i) next[i] -= exps[i];
    ++mults[g];
    if (search(next, gens, g, mults)) return true;
    --mults[g];
  }
  return false;
}

}  // namespace

MembershipResult monomial_subalgebra_membership(
    const Monomial& target, const std::vector<Monomial>& gens) {
  for (const auto& g : gens) {
    if (g.size() != target.size()) throw Error("monomial sizes differ");
    if (g.is_one()) throw Error("degenerate subalgebra generator (degree 0)");
  }
  MembershipResult result;
  result.multiplicities.assign(gens.size(), 0);
  result.member = search(target.exponents(), gens, 0, result.multiplicities);
  if (!result.member) result.multiplicities.assign(gens.size(), 0);
  return result;
}

bool check_membership_certificate(const Monomial& target,
                                  const std::vector<Monomial>& gens,
                                  const std::vector<std::uint32_t>& mults) {
  if (mults.size() != gens.size()) return false;
  std::vector<std::uint64_t> sum(target.size(), 0);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t i = 0; i < target.size(); ++i) {
      sum[i] += std::uint64_t(mults[g]) * gens[g].exponent(i);
    }
  }
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (sum[i] != target.exponent(i)) return false;
  }
  return true;
}

}  // namespace cca
