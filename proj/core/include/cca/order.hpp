#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cca/monomial.hpp"
#include "cca/ring.hpp"

namespace cca {

enum class Cmp { less, equal, greater };

// Total multiplicative monomial order: lexicographic on a variable priority
// list, or weight-vector compare with a mandatory lex tie-break.
class MonomialOrder {
 public:
  // Lex with the given priority (largest variable first). Every ring variable
  // must appear exactly once.
  static MonomialOrder lex(RingPtr ring, std::vector<std::string> priority);
  // Lex in declared ring order.
  static MonomialOrder lex(RingPtr ring);
  static MonomialOrder weight(RingPtr ring, std::vector<std::int64_t> weights,
                              std::vector<std::string> lex_priority);
  static MonomialOrder weight(RingPtr ring, std::vector<std::int64_t> weights);

  const RingPtr& ring() const { return ring_; }
  bool is_weight_order() const { return !weights_.empty(); }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  // Variable indices, highest priority first.
  const std::vector<std::size_t>& priority() const { return priority_; }

  Cmp compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Cmp::less;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Cmp::greater;
  }

  std::string to_string() const;

 private:
  MonomialOrder(RingPtr ring, std::vector<std::int64_t> weights,
                std::vector<std::size_t> priority);

  RingPtr ring_;
  std::vector<std::int64_t> weights_;  // empty for pure lex
  std::vector<std::size_t> priority_;
};

}  // namespace cca
