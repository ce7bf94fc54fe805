#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cca/groebner.hpp"
#include "cca/order.hpp"
#include "cca/polynomial.hpp"
#include "cca/ring.hpp"

namespace cca {

using WeightVector = std::vector<std::uint64_t>;

// Finds w ∈ ℕⁿ whose w-degree strictly separates each member's leading
// monomial from its other monomials: (lead − other)·w ≥ 1. Solved by rational
// linear-inequality elimination, denominators cleared, and the certificate
// re-verified before return. Existence is guaranteed for a reduced basis.
WeightVector find_weight_vector(const GroebnerBasis& basis);

// True iff w strictly separates every member's leading monomial.
bool check_weight_certificate(const GroebnerBasis& basis,
                              const WeightVector& w);

// Weight order with w and the lex order's priority as tie-break.
MonomialOrder weight_order_with_tiebreak(const MonomialOrder& lex_order,
                                         const WeightVector& w);

// Ring extended by a fresh homogenizing variable of weight 1; stores the
// grading (w..., 1) on the result.
RingPtr extend_ring(const RingPtr& ring, const WeightVector& w,
                    const std::string& fresh_name = "Z");

// Multiplies each term by the power of the fresh variable that lifts it to
// the maximal w-degree. Setting the fresh variable to 1 recovers f; setting
// it to 0 leaves the w-initial form.
Polynomial homogenize_w(const Polynomial& f, const WeightVector& w,
                        const RingPtr& extended);
Polynomial homogenize_w(const Polynomial& f, const WeightVector& w,
                        const std::string& fresh_name = "Z");

// Substitutes 0 or 1 for the named variable; the result lives in the ring
// without it.
Polynomial specialize(const Polynomial& f, const std::string& var, int value);

}  // namespace cca
