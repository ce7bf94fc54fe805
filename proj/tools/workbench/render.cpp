#include "render.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace cca::workbench {

std::vector<std::string> monomial_strings(const std::vector<Monomial>& list,
                                          const RingPtr& ring) {
  std::vector<std::string> out;
  out.reserve(list.size());
  for (const Monomial& m : list) out.push_back(m.to_string(*ring));
  return out;
}

std::vector<std::string> polynomial_strings(const std::vector<Polynomial>& list,
                                            const MonomialOrder& order) {
  std::vector<std::string> out;
  out.reserve(list.size());
  for (const Polynomial& p : list) out.push_back(p.to_string(order));
  return out;
}

std::string joined(const std::vector<std::string>& parts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out << ", ";
    out << parts[i];
  }
  return out.str();
}

Json betti_json(const BettiVector& betti) {
  Json out = Json::object();
  for (std::size_t i = 0; i < betti.entries.size(); ++i) {
    out[std::to_string(std::int64_t(i) - 1)] = betti.entries[i];
  }
  return out;
}

std::vector<std::string> symmetric_difference_strings(
    const std::vector<Monomial>& left, const std::vector<Monomial>& right,
    const RingPtr& ring) {
  std::vector<std::string> out;
  for (const Monomial& m : left) {
    if (std::find(right.begin(), right.end(), m) == right.end()) {
      out.push_back(m.to_string(*ring));
    }
  }
  for (const Monomial& m : right) {
    if (std::find(left.begin(), left.end(), m) == left.end()) {
      out.push_back(m.to_string(*ring));
    }
  }
  return out;
}

}  // namespace cca::workbench
