#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "cca/builtin.hpp"
#include "cca/errors.hpp"
#include "cca/groebner.hpp"
#include "cca/ideal.hpp"
#include "cca/parser.hpp"
#include "cca/segre.hpp"
#include "cca/weights.hpp"

using namespace cca;

namespace {

// x + y + z, xy + yz + zx, xyz - 1. Reduced lex basis is known in closed
// form, which makes it a good golden value.
struct Cyclic3 {
  RingPtr ring = PolynomialRing::make({"x", "y", "z"}, Field::rationals());
  MonomialOrder order = MonomialOrder::lex(ring);
  std::vector<Polynomial> gens = {
      parse_polynomial("x + y + z", ring),
      parse_polynomial("x*y + y*z + z*x", ring),
      parse_polynomial("x*y*z - 1", ring),
  };
};

std::vector<std::string> member_strings(const GroebnerBasis& basis) {
  std::vector<std::string> out;
  for (const auto& member : basis.members) {
    out.push_back(member.to_string(basis.order));
  }
  return out;
}

}  // namespace

TEST_CASE("s-polynomial cancels leading terms") {
  RingPtr ring = PolynomialRing::make({"x", "y", "z"}, Field::rationals());
  MonomialOrder order = MonomialOrder::lex(ring);
  Polynomial f = parse_polynomial("x^2 - y", ring);
  Polynomial g = parse_polynomial("x^3 - z", ring);
  CHECK(s_polynomial(f, g, order) == parse_polynomial("z - x*y", ring));
}

TEST_CASE("normal form and divisibility") {
  Cyclic3 c;
  GroebnerBasis basis = buchberger(Ideal(c.ring, c.gens), c.order);
  CHECK(normal_form(parse_polynomial("x^2", c.ring), basis) ==
        parse_polynomial("y*z", c.ring));
  CHECK(normal_form(parse_polynomial("x*y*z - 1", c.ring), basis).is_zero());
  CHECK(normal_form(parse_polynomial("z^2", c.ring), basis) ==
        parse_polynomial("z^2", c.ring));
}

TEST_CASE("reduced basis of the cyclic ideal") {
  Cyclic3 c;
  GroebnerBasis basis = buchberger(Ideal(c.ring, c.gens), c.order);
  CHECK(basis.reduced);
  CHECK(member_strings(basis) ==
        std::vector<std::string>{"x + y + z", "y^2 + y*z + z^2", "z^3 - 1"});
  auto leads = initial_ideal(basis);
  REQUIRE(leads.size() == 3);
  CHECK(leads[0] == Monomial{{1, 0, 0}});
  CHECK(leads[1] == Monomial{{0, 2, 0}});
  CHECK(leads[2] == Monomial{{0, 0, 3}});
  CHECK(is_groebner_basis(basis.members, c.order).is_basis);
}

TEST_CASE("reduced basis is generator-order independent") {
  Cyclic3 c;
  GroebnerBasis reference = buchberger(Ideal(c.ring, c.gens), c.order);
  std::vector<Polynomial> permuted = {c.gens[2], c.gens[0], c.gens[1]};
  GroebnerBasis shuffled = buchberger(Ideal(c.ring, permuted), c.order);
  CHECK(member_strings(reference) == member_strings(shuffled));
}

TEST_CASE("elimination order on a monomial curve") {
  RingPtr ring = PolynomialRing::make({"x", "y", "z"}, Field::rationals());
  MonomialOrder order = MonomialOrder::lex(ring, {"z", "y", "x"});
  Ideal ideal(ring, {parse_polynomial("y - x^2", ring),
                     parse_polynomial("z - x^3", ring)});
  GroebnerBasis basis = buchberger(ideal, order);
  CHECK(member_strings(basis) ==
        std::vector<std::string>{"z - x^3", "y - x^2"});
  CHECK(normal_form(parse_polynomial("z^2 - x^6", ring), basis).is_zero());
  CHECK(normal_form(parse_polynomial("y^3 - z^2", ring), basis).is_zero());
}

TEST_CASE("groebner check reports a failing pair") {
  RingPtr ring = PolynomialRing::make({"x", "y", "z"}, Field::rationals());
  MonomialOrder order = MonomialOrder::lex(ring);
  std::vector<Polynomial> not_basis = {parse_polynomial("x^2 - y", ring),
                                       parse_polynomial("x^3 - z", ring)};
  GroebnerCheck check = is_groebner_basis(not_basis, order);
  CHECK_FALSE(check.is_basis);
  REQUIRE(check.remainder.has_value());
  CHECK_FALSE(check.remainder->is_zero());
  CHECK(check.first < check.second);
}

TEST_CASE("minimal monomial generators") {
  std::vector<Monomial> input = {Monomial{{1, 0, 0}}, Monomial{{1, 1, 0}},
                                 Monomial{{0, 2, 0}}, Monomial{{0, 2, 1}},
                                 Monomial{{1, 0, 0}}};
  auto minimal = minimalize_monomials(input);
  REQUIRE(minimal.size() == 2);
  CHECK(std::count(minimal.begin(), minimal.end(), Monomial{{1, 0, 0}}) == 1);
  CHECK(std::count(minimal.begin(), minimal.end(), Monomial{{0, 2, 0}}) == 1);
}

TEST_CASE("weight vector certifies the initial ideal") {
  Cyclic3 c;
  GroebnerBasis basis = buchberger(Ideal(c.ring, c.gens), c.order);
  WeightVector w = find_weight_vector(basis);
  CHECK(check_weight_certificate(basis, w));
  MonomialOrder weighted = weight_order_with_tiebreak(c.order, w);
  for (const auto& member : basis.members) {
    CHECK(member.leading_monomial(weighted) == member.leading_monomial(c.order));
  }
}

TEST_CASE("homogenization against a weight certificate") {
  Cyclic3 c;
  GroebnerBasis basis = buchberger(Ideal(c.ring, c.gens), c.order);
  WeightVector w = find_weight_vector(basis);
  RingPtr extended = extend_ring(c.ring, w, "T");
  REQUIRE(extended->has_weights());
  for (const auto& member : basis.members) {
    Polynomial lifted = homogenize_w(member, w, extended);
    // Every term shares one weighted degree in the extended grading.
    const auto& weights = extended->weights();
    std::uint64_t degree = 0;
    bool first = true;
    for (const auto& [mono, coeff] : lifted.terms()) {
      std::uint64_t d = 0;
      for (std::size_t i = 0; i < mono.size(); ++i) {
        d += weights[i] * mono.exponent(i);
      }
      if (first) {
        degree = d;
        first = false;
      }
      CHECK(d == degree);
    }
    // The specialized ring keeps the grading, so compare printed forms.
    CHECK(specialize(lifted, "T", 1).to_string() == member.to_string());
    Polynomial initial_form = specialize(lifted, "T", 0);
    REQUIRE(initial_form.is_monomial());
    CHECK(initial_form.terms().begin()->first ==
          member.leading_monomial(c.order));
  }
}

TEST_CASE("segre ring layout") {
  SegreContext ctx = segre_ring(1, 2);
  CHECK(ctx.ring_p->variables() ==
        std::vector<std::string>{"X00", "X01", "X02", "X10", "X11", "X12"});
  CHECK(ctx.x_index(1, 2) == 5);
  CHECK(ctx.x_index(0, 2) == 2);
  // Order priority runs down each column: X00 X10 X01 X11 X02 X12.
  CHECK(ctx.order_p.priority() ==
        std::vector<std::size_t>{0, 3, 1, 4, 2, 5});
  CHECK(segre_two_minors(ctx).size() == 3);
  for (const auto& minor : segre_two_minors(ctx)) {
    // Leads are the diagonal products X_ij * X_hk with i < h, j < k.
    Monomial lead = minor.leading_monomial(ctx.order_p);
    auto support = lead.support();
    REQUIRE(support.size() == 2);
    std::size_t low = support[0], high = support[1];
    CHECK(low / 3 < high / 3);
    CHECK(low % 3 < high % 3);
  }
}

TEST_CASE("pullbacks pair row and column words") {
  SegreContext ctx = builtin::cubic_segre_context();
  Ideal ideal = builtin::cubic_segre_ideal(ctx);
  REQUIRE(ideal.num_generators() == 7);
  const char* expected[] = {
      "X00*X11 - X01*X10",
      "X00*X12 - X02*X10",
      "X01*X12 - X02*X11",
      "X00*X01*X02 + X01^3 + X02^3",
      "X00*X01*X12 + X01^2*X11 + X02^2*X12",
      "X00*X11*X12 + X01*X11^2 + X02*X12^2",
      "X10*X11*X12 + X11^3 + X12^3",
  };
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(ideal.generators()[i] ==
          parse_polynomial(expected[i], ctx.ring_p));
  }
}

TEST_CASE("segre generators reject inhomogeneous input") {
  SegreContext ctx = segre_ring(1, 1);
  Polynomial bad = parse_polynomial("Z0^2 + Z1", ctx.ring_b);
  CHECK_THROWS_AS(segre_ideal_generators(ctx, {}, {bad}), Error);
}

TEST_CASE("substitution families for a monomial quotient") {
  SegreContext ctx = segre_ring(1, 1);
  std::vector<Monomial> u = {Monomial{{1, 1}}};  // Y0*Y1
  auto family = segre_initial_generators(ctx, u, {});
  auto text = [&](const Monomial& m) { return m.to_string(*ctx.ring_p); };
  REQUIRE(family.size() == 4);
  CHECK(text(family[0]) == "X00*X10");
  CHECK(text(family[1]) == "X00*X11");
  CHECK(text(family[2]) == "X01*X10");
  CHECK(text(family[3]) == "X01*X11");
  SegreVerification result = verify_segre_proposition(ctx, u, {});
  CHECK(result.generators_match);
  CHECK(result.basis_check.is_basis);
}

TEST_CASE("square-free hypothesis is enforced") {
  SegreContext ctx = segre_ring(1, 1);
  std::vector<Monomial> bad = {Monomial{{2, 0}}};
  CHECK_THROWS_AS(segre_initial_generators(ctx, bad, {}), Error);
}

TEST_CASE("two-sided families cover both factors") {
  SegreContext ctx = segre_ring(2, 2);
  std::vector<Monomial> u = {Monomial{{1, 1, 0}}};        // Y0*Y1
  std::vector<Monomial> v = {Monomial{{0, 1, 1}}};        // Z1*Z2
  SegreVerification result = verify_segre_proposition(ctx, u, v);
  CHECK(result.generators_match);
  CHECK(result.basis_check.is_basis);
  CHECK(result.family_generators == result.oracle_generators);
}
