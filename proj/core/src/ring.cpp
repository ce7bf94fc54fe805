#include "cca/ring.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

#include "cca/errors.hpp"

namespace cca {

bool is_valid_variable_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

PolynomialRing::PolynomialRing(std::vector<std::string> variables, Field field,
                               std::optional<std::vector<std::uint64_t>> weights)
    : variables_(std::move(variables)),
      field_(field),
      weights_(std::move(weights)) {}

RingPtr PolynomialRing::make_impl(
    std::vector<std::string> variables, Field field,
    std::optional<std::vector<std::uint64_t>> weights) {
  if (variables.empty()) throw Error("ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& name : variables) {
    if (!is_valid_variable_name(name)) {
      throw Error("invalid variable name: " + name);
    }
    if (!seen.insert(name).second) {
      throw Error("duplicate variable name: " + name);
    }
  }
  if (weights && weights->size() != variables.size()) {
    throw Error("weight vector length does not match variable count");
  }
  return RingPtr(
      new PolynomialRing(std::move(variables), field, std::move(weights)));
}

RingPtr PolynomialRing::make(std::vector<std::string> variables, Field field) {
  return make_impl(std::move(variables), field, std::nullopt);
}

RingPtr PolynomialRing::make(std::vector<std::string> variables, Field field,
                             std::vector<std::uint64_t> weights) {
  return make_impl(std::move(variables), field, std::move(weights));
}

std::optional<std::size_t> PolynomialRing::index_of(
    const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

const std::vector<std::uint64_t>& PolynomialRing::weights() const {
  if (!weights_) throw Error("ring has no weight vector");
  return *weights_;
}

bool PolynomialRing::operator==(const PolynomialRing& other) const {
  return variables_ == other.variables_ && field_ == other.field_ &&
         weights_ == other.weights_;
}

std::string PolynomialRing::to_string() const {
  std::ostringstream out;
  out << field_.to_string() << "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i > 0) out << ",";
    out << variables_[i];
  }
  out << "]";
  return out.str();
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) throw Error("null ring");
  if (a.get() == b.get()) return;
  if (*a != *b) throw Error("operands live in different rings");
}

}  // namespace cca
