#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cca/ideal.hpp"
#include "cca/monomial.hpp"
#include "cca/order.hpp"
#include "cca/polynomial.hpp"

namespace cca {

// Invariants: members are monic and sorted descending by leading monomial;
// when `reduced`, leading monomials are pairwise non-dividing and no trailing
// term of any member is divisible by any leading monomial.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> members;
  bool reduced = false;

  const RingPtr& ring() const { return order.ring(); }
};

// Division remainder: no monomial of the result is divisible by any basis
// leading monomial. Deterministic: reduces the order-largest reducible
// monomial first, trying divisors in basis order.
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

// Buchberger with the normal pair-selection strategy and the coprime
// criterion; returns the unique reduced basis.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);

// Minimal monomial generators of the initial ideal, sorted descending.
std::vector<Monomial> initial_ideal(const Ideal& ideal,
                                    const MonomialOrder& order);
std::vector<Monomial> initial_ideal(const GroebnerBasis& basis);

struct GroebnerCheck {
  bool is_basis = true;
  // Witness on failure: indices of the failing S-pair and its remainder.
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<Polynomial> remainder;
};

GroebnerCheck is_groebner_basis(const std::vector<Polynomial>& gens,
                                const MonomialOrder& order);

// Drops generators whose monomial divides another's; deduplicates. Input must
// be monomials (single-term polynomials are not accepted here).
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> monomials);

}  // namespace cca
