#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cca/ring.hpp"

namespace cca {

// Exponent vector of fixed length ring->size(). Monomials carry no intrinsic
// order; comparisons go through MonomialOrder.
class Monomial {
 public:
  explicit Monomial(std::size_t num_variables)
      : exponents_(num_variables, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : exponents_(std::move(exponents)) {}

  static Monomial variable(std::size_t num_variables, std::size_t index);

  std::size_t size() const { return exponents_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exponents_.at(i); }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }

  std::uint64_t total_degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  std::vector<std::size_t> support() const;

  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divides(other) on the caller's side; throws otherwise.
  Monomial divide_into(const Monomial& other) const;
  Monomial lcm_with(const Monomial& other) const;
  bool coprime_with(const Monomial& other) const;

  bool operator==(const Monomial& other) const {
    return exponents_ == other.exponents_;
  }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  std::string to_string(const PolynomialRing& ring) const;

 private:
  std::vector<std::uint32_t> exponents_;
};

// All monomials of the given total degree, in descending plain-lex order on
// exponent vectors.
std::vector<Monomial> monomials_of_degree(std::size_t num_variables,
                                          std::uint32_t degree);

}  // namespace cca
