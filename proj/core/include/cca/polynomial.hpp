#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cca/field.hpp"
#include "cca/monomial.hpp"
#include "cca/order.hpp"
#include "cca/ring.hpp"

namespace cca {

// Storage key order for terms: plain lexicographic on exponent vectors. This
// is independent of any MonomialOrder; it only canonicalizes the term map.
struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.exponents() < b.exponents();
  }
};

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

// Canonical polynomial: no zero coefficients, immutable ring reference.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, MonomialKeyLess>;

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, Scalar value);
  static Polynomial from_term(RingPtr ring, Monomial monomial, Scalar coeff);
  static Polynomial from_monomial(RingPtr ring, Monomial monomial);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint64_t total_degree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Scalar& scalar) const;
  Polynomial times_term(const Monomial& monomial, const Scalar& coeff) const;
  Polynomial pow(std::uint32_t exponent) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Term leading_term(const MonomialOrder& order) const;
  const Monomial& leading_monomial(const MonomialOrder& order) const;
  Polynomial monic(const MonomialOrder& order) const;

  // Terms sorted descending under the given order.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;

  // Substitute variable `index` by a constant; result stays in the same ring.
  Polynomial substitute(std::size_t index, const Scalar& value) const;

  std::string to_string(const MonomialOrder& order) const;
  std::string to_string() const;

 private:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  void add_term(const Monomial& monomial, const Scalar& coeff);

  RingPtr ring_;
  TermMap terms_;
};

}  // namespace cca
