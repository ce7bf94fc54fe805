#include "cca/ideal.hpp"

#include "cca/errors.hpp"

namespace cca {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  if (!ring_) throw Error("null ring");
  for (const auto& g : generators_) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) throw Error("ideal generators must be nonzero");
  }
}

}  // namespace cca
