#include "doctest.h"

#include <sstream>
#include <vector>

#include "cca/errors.hpp"
#include "cca/field.hpp"
#include "cca/ideal_io.hpp"
#include "cca/linalg.hpp"
#include "cca/monomial.hpp"
#include "cca/order.hpp"
#include "cca/parser.hpp"
#include "cca/polynomial.hpp"
#include "cca/ring.hpp"

using namespace cca;

namespace {

IdealFile parse_ideal(const std::string& text) {
  std::istringstream in(text);
  return read_ideal_file(in);
}

}  // namespace

TEST_CASE("rational scalars") {
  Field q = Field::rationals();
  Scalar half = Scalar::from_fraction(q, 1, 2);
  Scalar third = Scalar::from_fraction(q, 1, 3);
  CHECK((half + third).to_string() == "5/6");
  CHECK((half * third).to_string() == "1/6");
  CHECK((half - half).is_zero());
  CHECK(half.inverse().to_string() == "2");
}

TEST_CASE("prime field scalars") {
  Field f7 = Field::prime(7);
  Scalar three = Scalar::from_int(f7, 3);
  CHECK((three.inverse() * three).is_one());
  CHECK(Scalar::from_int(f7, 10) == three);
  CHECK(Scalar::from_int(f7, -1) == Scalar::from_int(f7, 6));
  CHECK_THROWS_AS(Field::prime(6), Error);
}

TEST_CASE("field parsing") {
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK(Field::parse("F7") == Field::prime(7));
  CHECK(Field::parse("Fp=32003") == Field::prime(32003));
  CHECK_THROWS_AS(Field::parse("R"), Error);
}

TEST_CASE("monomial arithmetic") {
  Monomial a{{2, 1, 0}};
  Monomial b{{1, 1, 1}};
  CHECK(a.total_degree() == 3);
  CHECK_FALSE(a.is_squarefree());
  CHECK(b.is_squarefree());
  CHECK(a.times(b) == Monomial{{3, 2, 1}});
  CHECK(b.divides(a.times(b)));
  CHECK_FALSE(b.divides(a));
  CHECK(a.lcm_with(b) == Monomial{{2, 1, 1}});
  CHECK(b.divide_into(a.times(b)) == a);
  CHECK(a.support() == std::vector<std::size_t>{0, 1});
  CHECK(Monomial{{2, 0, 0}}.coprime_with(Monomial{{0, 0, 3}}));
}

TEST_CASE("monomials of a fixed degree") {
  RingPtr ring = PolynomialRing::make({"x", "y", "z"}, Field::rationals());
  auto degree_two = monomials_of_degree(3, 2);
  CHECK(degree_two.size() == 6);
  MonomialOrder lex = MonomialOrder::lex(ring);
  for (std::size_t i = 0; i + 1 < degree_two.size(); ++i) {
    CHECK(lex.greater(degree_two[i], degree_two[i + 1]));
  }
  CHECK(degree_two.front() == Monomial{{2, 0, 0}});
  CHECK(degree_two.back() == Monomial{{0, 0, 2}});
}

TEST_CASE("lex order with custom priority") {
  RingPtr ring = PolynomialRing::make({"x", "y", "z"}, Field::rationals());
  MonomialOrder declared = MonomialOrder::lex(ring);
  MonomialOrder flipped = MonomialOrder::lex(ring, {"z", "y", "x"});
  Monomial x = Monomial::variable(3, 0);
  Monomial z = Monomial::variable(3, 2);
  CHECK(declared.greater(x, z));
  CHECK(flipped.greater(z, x));
  CHECK(declared.compare(x, x) == Cmp::equal);
  CHECK_THROWS_AS(MonomialOrder::lex(ring, {"x", "y"}), Error);
  CHECK_THROWS_AS(MonomialOrder::lex(ring, {"x", "y", "y"}), Error);
}

TEST_CASE("weight order ties break by lex") {
  RingPtr ring = PolynomialRing::make({"x", "y"}, Field::rationals());
  MonomialOrder order = MonomialOrder::weight(ring, {1, 2}, {"x", "y"});
  // x^2 and y share weight 2, so lex decides.
  CHECK(order.greater(Monomial{{2, 0}}, Monomial{{0, 1}}));
  CHECK(order.greater(Monomial{{0, 2}}, Monomial{{3, 0}}));
}

TEST_CASE("polynomial parsing and printing") {
  RingPtr ring = PolynomialRing::make({"x", "y", "z"}, Field::rationals());
  MonomialOrder lex = MonomialOrder::lex(ring);
  Polynomial f = parse_polynomial("x^2*y - 2*z + 1/3", ring);
  CHECK(f.to_string(lex) == "x^2*y - 2*z + 1/3");
  CHECK(parse_polynomial(f.to_string(lex), ring) == f);
  CHECK(parse_polynomial("x - x", ring).is_zero());
  CHECK(parse_polynomial("2*x + 3*x", ring) == parse_polynomial("5*x", ring));
  CHECK_THROWS_AS(parse_polynomial("w + 1", ring), Error);
  CHECK_THROWS_AS(parse_polynomial("x +", ring), Error);
}

TEST_CASE("polynomial arithmetic") {
  RingPtr ring = PolynomialRing::make({"x", "y"}, Field::rationals());
  MonomialOrder lex = MonomialOrder::lex(ring);
  Polynomial x = Polynomial::variable(ring, 0);
  Polynomial y = Polynomial::variable(ring, 1);
  Polynomial square = (x + y) * (x - y);
  CHECK(square == x * x - y * y);
  CHECK(square.leading_monomial(lex) == Monomial{{2, 0}});
  CHECK(square.monic(lex) == square);
  Polynomial doubled = square + square;
  CHECK(doubled.leading_term(lex).coefficient ==
        Scalar::from_int(ring->field(), 2));
  CHECK(doubled.monic(lex) == square);
  CHECK(x.pow(3) == x * x * x);
}

TEST_CASE("substituting a constant for one variable") {
  RingPtr ring = PolynomialRing::make({"x", "y"}, Field::rationals());
  Polynomial f = parse_polynomial("x^2 + x*y + y", ring);
  Polynomial at_one = f.substitute(0, Scalar::one(ring->field()));
  CHECK(at_one == parse_polynomial("2*y + 1", ring));
  Polynomial at_zero = f.substitute(0, Scalar::zero(ring->field()));
  CHECK(at_zero == parse_polynomial("y", ring));
}

TEST_CASE("exact rank over different fields") {
  // Integer matrix with determinant 2: full rank over Q, singular mod 2.
  auto fill = [](Matrix& m) {
    const long long values[3][3] = {{1, 0, 0}, {0, 1, 1}, {0, 1, 3}};
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        m.at(r, c) = Scalar::from_int(m.field(), values[r][c]);
      }
    }
  };
  Matrix over_q(3, 3, Field::rationals());
  fill(over_q);
  CHECK(rank_exact(over_q) == 3);
  Matrix over_f2(3, 3, Field::prime(2));
  fill(over_f2);
  CHECK(rank_exact(over_f2) == 2);
}

TEST_CASE("matrix multiply") {
  Field q = Field::rationals();
  Matrix a(2, 3, q);
  Matrix b(3, 2, q);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      a.at(r, c) = Scalar::from_int(q, (long long)(r + c));
      b.at(c, r) = Scalar::from_int(q, c == r ? 1 : 0);
    }
  }
  Matrix product = multiply(a, b);
  CHECK(product.rows() == 2);
  CHECK(product.cols() == 2);
  CHECK(product.at(0, 0) == Scalar::zero(q));
  CHECK(product.at(0, 1) == Scalar::one(q));
  CHECK(product.at(1, 0) == Scalar::one(q));
  CHECK(product.at(1, 1) == Scalar::from_int(q, 2));
}

TEST_CASE("ideal file round trip") {
  IdealFile file = parse_ideal(
      "# comment\n"
      "ring x y z over Q\n"
      "order lex z > y > x\n"
      "\n"
      "gen x*y - z^2\n"
      "gen x + y + z\n");
  CHECK(file.ring->variables() == std::vector<std::string>{"x", "y", "z"});
  CHECK(file.generators.size() == 2);
  CHECK(file.order.priority() == std::vector<std::size_t>{2, 1, 0});
  Monomial z2{{0, 0, 2}};
  CHECK(file.generators[0].leading_monomial(file.order) == z2);
}

TEST_CASE("ideal file rejects malformed input") {
  CHECK_THROWS_AS(parse_ideal("gen x\n"), Error);
  CHECK_THROWS_AS(parse_ideal("ring x x over Q\norder lex x > x\n"), Error);
  CHECK_THROWS_AS(parse_ideal("ring x y over Q\norder lex x > y\ngen x + w\n"),
                  Error);
  CHECK_THROWS_AS(parse_ideal("ring x y over Q\norder lex x\ngen x\n"), Error);
}

TEST_CASE("ideal files over a prime field") {
  IdealFile file = parse_ideal(
      "ring x y over Fp=7\n"
      "order lex x > y\n"
      "gen 8*x + y\n");
  CHECK(file.ring->field() == Field::prime(7));
  CHECK(file.generators[0] ==
        parse_polynomial("x + y", file.ring));
}

TEST_CASE("weight ideal files carry a weight order") {
  IdealFile file = parse_ideal(
      "ring x y over Q\n"
      "order weight 3,1 lex x > y\n"
      "gen x + y^2\n"
      "gen y^4 + x\n");
  CHECK(file.order.is_weight_order());
  CHECK(file.order.weights() == std::vector<std::int64_t>{3, 1});
  // y^4 has weight 4, x weight 3.
  CHECK(file.generators[1].leading_monomial(file.order) == Monomial{{0, 4}});
  CHECK(file.generators[0].leading_monomial(file.order) == Monomial{{1, 0}});
}
