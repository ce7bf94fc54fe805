#pragma once

#include <string>
#include <vector>

#include "cca/homology.hpp"
#include "cca/monomial.hpp"
#include "cca/order.hpp"
#include "cca/polynomial.hpp"
#include "cca/ring.hpp"
#include "report.hpp"

namespace cca::workbench {

std::vector<std::string> monomial_strings(const std::vector<Monomial>& list,
                                          const RingPtr& ring);
std::vector<std::string> polynomial_strings(const std::vector<Polynomial>& list,
                                            const MonomialOrder& order);
std::string joined(const std::vector<std::string>& parts);

// Object keyed by homological dimension, "-1" upward.
Json betti_json(const BettiVector& betti);

// Monomials in exactly one of the two lists, rendered.
std::vector<std::string> symmetric_difference_strings(
    const std::vector<Monomial>& left, const std::vector<Monomial>& right,
    const RingPtr& ring);

}  // namespace cca::workbench
