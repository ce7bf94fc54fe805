#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cca/field.hpp"

namespace cca {

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

// A named polynomial ring over a Field. The optional weight vector records a
// grading deg(var_i) = w_i; it does not affect arithmetic.
class PolynomialRing {
 public:
  static RingPtr make(std::vector<std::string> variables, Field field);
  static RingPtr make(std::vector<std::string> variables, Field field,
                      std::vector<std::uint64_t> weights);

  std::size_t size() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(std::size_t i) const { return variables_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const Field& field() const { return field_; }
  bool has_weights() const { return weights_.has_value(); }
  const std::vector<std::uint64_t>& weights() const;

  bool operator==(const PolynomialRing& other) const;
  bool operator!=(const PolynomialRing& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  PolynomialRing(std::vector<std::string> variables, Field field,
                 std::optional<std::vector<std::uint64_t>> weights);
  static RingPtr make_impl(std::vector<std::string> variables, Field field,
                           std::optional<std::vector<std::uint64_t>> weights);

  std::vector<std::string> variables_;
  Field field_;
  std::optional<std::vector<std::uint64_t>> weights_;
};

// True for [A-Za-z][A-Za-z0-9_]*, the only names the expression grammar can
// print and re-read.
bool is_valid_variable_name(const std::string& name);

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace cca
