#include "cca/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cca/errors.hpp"

namespace cca {

Monomial Monomial::variable(std::size_t num_variables, std::size_t index) {
  if (index >= num_variables) throw Error("variable index out of range");
  Monomial m(num_variables);
  m.exponents_[index] = 1;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t sum = 0;
  for (std::uint32_t e : exponents_) sum += e;
  return sum;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](std::uint32_t e) { return e <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) vars.push_back(i);
  }
  return vars;
}

Monomial Monomial::times(const Monomial& other) const {
  if (size() != other.size()) throw Error("monomial sizes differ");
  Monomial out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    std::uint64_t sum =
        std::uint64_t(exponents_[i]) + std::uint64_t(other.exponents_[i]);
    if (sum > std::numeric_limits<std::uint32_t>::max()) {
      throw Error("exponent overflow in monomial product");
    }
    out.exponents_[i] = static_cast<std::uint32_t>(sum);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (size() != other.size()) throw Error("monomial sizes differ");
  for (std::size_t i = 0; i < size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::divide_into(const Monomial& other) const {
  if (!divides(other)) throw Error("monomial does not divide");
  Monomial out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.exponents_[i] = other.exponents_[i] - exponents_[i];
  }
  return out;
}

Monomial Monomial::lcm_with(const Monomial& other) const {
  if (size() != other.size()) throw Error("monomial sizes differ");
  Monomial out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
  }
  return out;
}

bool Monomial::coprime_with(const Monomial& other) const {
  if (size() != other.size()) throw Error("monomial sizes differ");
  for (std::size_t i = 0; i < size(); ++i) {
    if (exponents_[i] > 0 && other.exponents_[i] > 0) return false;
  }
  return true;
}

namespace {

void enumerate_degree(std::size_t var, std::uint32_t remaining,
                      std::vector<std::uint32_t>& current,
                      std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.emplace_back(current);
    current[var] = 0;
    return;
  }
  for (std::uint32_t e = remaining; e != 0; --e) {
    current[var] = e;
    enumerate_degree(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
  enumerate_degree(var + 1, remaining, current, out);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_variables,
                                          std::uint32_t degree) {
  if (num_variables == 0) throw Error("need at least one variable");
  std::vector<Monomial> out;
  std::vector<std::uint32_t> current(num_variables, 0);
  enumerate_degree(0, degree, current, out);
  return out;
}

std::string Monomial::to_string(const PolynomialRing& ring) const {
  if (ring.size() != size()) throw Error("monomial does not fit ring");
  if (is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << ring.variable(i);
    if (exponents_[i] > 1) out << "^" << exponents_[i];
  }
  return out.str();
}

}  // namespace cca
