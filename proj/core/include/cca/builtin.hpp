#pragma once

#include <string>
#include <vector>

#include "cca/field.hpp"
#include "cca/ideal.hpp"
#include "cca/monomial.hpp"
#include "cca/polynomial.hpp"
#include "cca/segre.hpp"
#include "cca/simplicial.hpp"
#include "cca/toric.hpp"

namespace cca::builtin {

// Segre product of k[Y0,Y1] with k[Z0,Z1,Z2]/(Z0Z1Z2 + Z1^3 + Z2^3). The
// ideal has three 2-minors and four pullback cubics; its initial ideal under
// the row-major lex order has the seven listed square-free generators, and
// the complex of that initial ideal has the six listed triangle facets.
SegreContext cubic_segre_context(Field field = Field::rationals());
Polynomial cubic_segre_relation(const SegreContext& ctx);
Ideal cubic_segre_ideal(const SegreContext& ctx);
// Sorted descending under ctx.order_p, matching initial_ideal output.
std::vector<Monomial> cubic_segre_initial_monomials(const SegreContext& ctx);
// Facet labels in canonical order.
std::vector<std::vector<std::string>> cubic_segre_facets();

// Boundary of a triangle: three vertices, three edges, no 2-face.
SimplicialComplex hollow_triangle();

// Six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane();

// k[(X,Y,Z)_3] inside k[X,Y,Z,W]: every degree-3 monomial except W^3.
MonomialSubalgebra veronese_slice(Field field = Field::rationals());

}  // namespace cca::builtin
