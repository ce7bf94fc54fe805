#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cca/monomial.hpp"

namespace cca {

// Decision for monomial membership in the subalgebra generated by `gens`:
// a multiplicity per generator whose exponent vectors sum to the target, or
// nullopt after exhausting the finite search space.
struct MembershipResult {
  bool member = false;
  std::vector<std::uint32_t> multiplicities;
};

MembershipResult monomial_subalgebra_membership(
    const Monomial& target, const std::vector<Monomial>& gens);

// Re-sums the claimed combination; certificates must verify.
bool check_membership_certificate(const Monomial& target,
                                  const std::vector<Monomial>& gens,
                                  const std::vector<std::uint32_t>& mults);

}  // namespace cca
