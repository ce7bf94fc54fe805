#include "cca/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "cca/errors.hpp"

namespace cca {

Polynomial Polynomial::zero(RingPtr ring) {
  if (!ring) throw Error("null ring");
  return Polynomial(std::move(ring));
}

Polynomial Polynomial::constant(RingPtr ring, Scalar value) {
  if (!ring) throw Error("null ring");
  if (value.field() != ring->field()) {
    throw Error("scalar field does not match ring field");
  }
  Polynomial out(std::move(ring));
  out.add_term(Monomial(out.ring_->size()), value);
  return out;
}

Polynomial Polynomial::from_term(RingPtr ring, Monomial monomial,
                                 Scalar coeff) {
  if (!ring) throw Error("null ring");
  if (monomial.size() != ring->size()) throw Error("monomial does not fit ring");
  if (coeff.field() != ring->field()) {
    throw Error("scalar field does not match ring field");
  }
  Polynomial out(std::move(ring));
  out.add_term(monomial, coeff);
  return out;
}

Polynomial Polynomial::from_monomial(RingPtr ring, Monomial monomial) {
  Scalar one = Scalar::one(ring->field());
  return from_term(std::move(ring), std::move(monomial), one);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (!ring) throw Error("null ring");
  return from_monomial(ring, Monomial::variable(ring->size(), index));
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t best = 0;
  for (const auto& [mono, coeff] : terms_) {
    best = std::max(best, mono.total_degree());
  }
  return best;
}

void Polynomial::add_term(const Monomial& monomial, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(monomial);
  if (it == terms_.end()) {
    terms_.emplace(monomial, coeff);
    return;
  }
  Scalar sum = it->second + coeff;
  if (sum.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = sum;
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  for (const auto& [mono, coeff] : terms_) {
    out.terms_.emplace(mono, -coeff);
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  Polynomial out = *this;
  for (const auto& [mono, coeff] : other.terms_) {
    out.add_term(mono, coeff);
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  Polynomial out = *this;
  for (const auto& [mono, coeff] : other.terms_) {
    out.add_term(mono, -coeff);
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  Polynomial out(ring_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(ma.times(mb), ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Scalar& scalar) const {
  if (scalar.field() != ring_->field()) {
    throw Error("scalar field does not match ring field");
  }
  Polynomial out(ring_);
  if (scalar.is_zero()) return out;
  for (const auto& [mono, coeff] : terms_) {
    out.terms_.emplace(mono, coeff * scalar);
  }
  return out;
}

Polynomial Polynomial::times_term(const Monomial& monomial,
                                  const Scalar& coeff) const {
  if (monomial.size() != ring_->size()) {
    throw Error("monomial does not fit ring");
  }
  if (coeff.field() != ring_->field()) {
    throw Error("scalar field does not match ring field");
  }
  Polynomial out(ring_);
  if (coeff.is_zero()) return out;
  for (const auto& [mono, c] : terms_) {
    out.terms_.emplace(mono.times(monomial), c * coeff);
  }
  return out;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
  Polynomial out = constant(ring_, Scalar::one(ring_->field()));
  for (std::uint32_t i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  return terms_ == other.terms_;
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  require_same_ring(ring_, order.ring());
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (order.greater(it->first, best->first)) best = it;
  }
  return Term{best->first, best->second};
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
  require_same_ring(ring_, order.ring());
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (order.greater(it->first, best->first)) best = it;
  }
  return best->first;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  Scalar lead = leading_term(order).coefficient;
  return *this * lead.inverse();
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  require_same_ring(ring_, order.ring());
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, coeff] : terms_) out.push_back(Term{mono, coeff});
  std::sort(out.begin(), out.end(), [&order](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  return out;
}

Polynomial Polynomial::substitute(std::size_t index,
                                  const Scalar& value) const {
  if (index >= ring_->size()) throw Error("variable index out of range");
  if (value.field() != ring_->field()) {
    throw Error("scalar field does not match ring field");
  }
  Polynomial out(ring_);
  for (const auto& [mono, coeff] : terms_) {
    std::uint32_t e = mono.exponent(index);
    Scalar factor = Scalar::one(ring_->field());
    for (std::uint32_t i = 0; i < e; ++i) factor = factor * value;
    std::vector<std::uint32_t> exps = mono.exponents();
    exps[index] = 0;
    out.add_term(Monomial(std::move(exps)), coeff * factor);
  }
  return out;
}

namespace {

// Prints one term without sign; the caller has already folded the sign into
// the separator. `coeff` is the absolute value on the rational path.
std::string term_body(const PolynomialRing& ring, const Monomial& mono,
                      const Scalar& coeff) {
  if (mono.is_one()) return coeff.to_string();
  if (coeff.is_one()) return mono.to_string(ring);
  return coeff.to_string() + "*" + mono.to_string(ring);
}

}  // namespace

std::string Polynomial::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  const bool rational = ring_->field().is_rationals();
  std::ostringstream out;
  bool first = true;
  for (const Term& t : sorted_terms(order)) {
    Scalar coeff = t.coefficient;
    bool negative = false;
    if (rational && coeff.rational_value() < 0) {
      negative = true;
      coeff = -coeff;
    }
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    out << term_body(*ring_, t.monomial, coeff);
  }
  return out.str();
}

std::string Polynomial::to_string() const {
  return to_string(MonomialOrder::lex(ring_));
}

}  // namespace cca
