#pragma once

#include <vector>

#include "cca/polynomial.hpp"
#include "cca/ring.hpp"

namespace cca {

// Finitely generated ideal given by a list of nonzero generators.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.size(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

}  // namespace cca
