#pragma once

#include <cstdint>
#include <vector>

#include "cca/field.hpp"
#include "cca/groebner.hpp"
#include "cca/monomial.hpp"
#include "cca/order.hpp"
#include "cca/polynomial.hpp"
#include "cca/ring.hpp"

namespace cca {

// Rings and orders for the Segre product of k[Y0..Ya] and k[Z0..Zb]: the
// target ring k[X_ij] declares variables row major (x_index below) but its
// order is column-major lex X00 > X10 > ... > Xa0 > X01 > ... > Xab, the
// order under which the square-free initial ideals here arise.
struct SegreContext {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  RingPtr ring_a;
  RingPtr ring_b;
  RingPtr ring_p;
  MonomialOrder order_a;
  MonomialOrder order_b;
  MonomialOrder order_p;

  std::size_t x_index(std::uint32_t i, std::uint32_t j) const {
    return std::size_t(i) * (b + 1) + j;
  }
};

SegreContext segre_ring(std::uint32_t a, std::uint32_t b,
                        Field field = Field::rationals());

// Generators of the Segre ideal I#J inside ring_p: the 2-minors of (X_ij)
// plus one pullback per product of an I-generator with a degree-matching
// monomial of B (and symmetrically for J). Pullback terms are rewritten by
// the pairing rule: row indices and column indices each listed weakly
// increasing, then zipped. Generators must be homogeneous.
std::vector<Polynomial> segre_ideal_generators(
    const SegreContext& ctx, const std::vector<Polynomial>& i_gens,
    const std::vector<Polynomial>& j_gens);

std::vector<Polynomial> segre_two_minors(const SegreContext& ctx);

// The square-free generator families of the initial ideal of I#J for
// square-free U = gens of in(I), V = gens of in(J): substitutions of U over
// weakly decreasing column sequences, substitutions of V over weakly
// decreasing row sequences, and the products X_ij*X_hk (i<h, j<k).
// Deduplicated, minimalized, sorted descending under order_p.
std::vector<Monomial> segre_initial_generators(const SegreContext& ctx,
                                               const std::vector<Monomial>& u,
                                               const std::vector<Monomial>& v);

// The claimed Groebner basis of I#J for monomial I=(U), J=(V): both
// substitution families as polynomials together with the 2-minors.
std::vector<Polynomial> segre_groebner_candidates(
    const SegreContext& ctx, const std::vector<Monomial>& u,
    const std::vector<Monomial>& v);

struct SegreVerification {
  std::vector<Monomial> family_generators;
  std::vector<Monomial> oracle_generators;
  bool generators_match = false;
  GroebnerCheck basis_check;
  bool pass() const { return generators_match && basis_check.is_basis; }
};

// Checks the square-free initial-ideal claim for monomial ideals (U), (V):
// family generators against the Buchberger oracle's minimal generators, and
// the Groebner property of the candidate basis.
SegreVerification verify_segre_proposition(const SegreContext& ctx,
                                           const std::vector<Monomial>& u,
                                           const std::vector<Monomial>& v);

}  // namespace cca
