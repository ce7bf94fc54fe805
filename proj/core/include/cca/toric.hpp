#pragma once

#include <cstdint>
#include <vector>

#include "cca/monomial.hpp"
#include "cca/ring.hpp"

namespace cca {

// Monomial subalgebra of the ambient ring, given by its generators.
struct MonomialSubalgebra {
  RingPtr ring;
  std::vector<Monomial> generators;
};

// Subalgebra generated by the degree-d monomials divisible by at least one of
// the named variables: k[(vars)_d].
MonomialSubalgebra ideal_power_slice(const RingPtr& ring,
                                     const std::vector<std::string>& vars,
                                     std::uint32_t d);

// Rank over the rationals of the span of integer vectors.
std::size_t lattice_rank(const std::vector<std::vector<std::int64_t>>& vectors);

// Dimension of R modulo the sum of the contraction primes (x)∩R over the
// killed variables: the lattice rank of the exponent vectors of generators
// divisible by no killed variable. height(sum) = dim R − this value.
std::size_t face_prime_quotient_dim(const MonomialSubalgebra& algebra,
                                    const std::vector<std::string>& killed);

std::size_t subalgebra_dim(const MonomialSubalgebra& algebra);

}  // namespace cca
