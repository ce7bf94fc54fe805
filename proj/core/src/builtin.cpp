#include "cca/builtin.hpp"

#include <algorithm>

#include "cca/parser.hpp"
#include "cca/ring.hpp"

namespace cca::builtin {

SegreContext cubic_segre_context(Field field) {
  return segre_ring(1, 2, field);
}

Polynomial cubic_segre_relation(const SegreContext& ctx) {
  return parse_polynomial("Z0*Z1*Z2 + Z1^3 + Z2^3", ctx.ring_b);
}

Ideal cubic_segre_ideal(const SegreContext& ctx) {
  return Ideal(ctx.ring_p,
               segre_ideal_generators(ctx, {}, {cubic_segre_relation(ctx)}));
}

std::vector<Monomial> cubic_segre_initial_monomials(const SegreContext& ctx) {
  const char* const texts[] = {"X10*X11*X12", "X10*X11*X02", "X10*X01*X02",
                               "X00*X01*X02", "X00*X11",     "X00*X12",
                               "X01*X12"};
  std::vector<Monomial> result;
  for (const char* text : texts) {
    Polynomial p = parse_polynomial(text, ctx.ring_p);
    result.push_back(p.terms().begin()->first);
  }
  std::sort(result.begin(), result.end(),
            [&](const Monomial& lhs, const Monomial& rhs) {
              return ctx.order_p.greater(lhs, rhs);
            });
  return result;
}

std::vector<std::vector<std::string>> cubic_segre_facets() {
  return {{"X00", "X01", "X10"}, {"X00", "X02", "X10"}, {"X01", "X02", "X11"},
          {"X01", "X10", "X11"}, {"X02", "X10", "X12"}, {"X02", "X11", "X12"}};
}

SimplicialComplex hollow_triangle() {
  return SimplicialComplex::make({"a", "b", "c"},
                                 {{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

SimplicialComplex projective_plane() {
  return SimplicialComplex::make(
      {"1", "2", "3", "4", "5", "6"},
      {{"1", "2", "3"},
       {"1", "3", "4"},
       {"1", "4", "5"},
       {"1", "2", "6"},
       {"1", "5", "6"},
       {"2", "3", "5"},
       {"2", "4", "5"},
       {"2", "4", "6"},
       {"3", "4", "6"},
       {"3", "5", "6"}});
}

MonomialSubalgebra veronese_slice(Field field) {
  RingPtr ring = PolynomialRing::make({"X", "Y", "Z", "W"}, field);
  return ideal_power_slice(ring, {"X", "Y", "Z"}, 3);
}

}  // namespace cca::builtin
