#include "cca/toric.hpp"

#include <vector>

#include "cca/errors.hpp"
#include "cca/field.hpp"
#include "cca/linalg.hpp"

namespace cca {

MonomialSubalgebra ideal_power_slice(const RingPtr& ring,
                                     const std::vector<std::string>& vars,
                                     std::uint32_t d) {
  if (!ring) throw Error("null ring");
  if (vars.empty()) throw Error("empty variable set");
  if (d == 0) throw Error("power must be at least 1");
  std::vector<std::size_t> indices;
  for (const auto& name : vars) {
    auto idx = ring->index_of(name);
    if (!idx) throw Error("unknown variable: " + name);
    indices.push_back(*idx);
  }
  MonomialSubalgebra algebra{ring, {}};
  for (const Monomial& m : monomials_of_degree(ring->size(), d)) {
    for (std::size_t idx : indices) {
      if (m.exponent(idx) > 0) {
        algebra.generators.push_back(m);
        break;
      }
    }
  }
  return algebra;
}

std::size_t lattice_rank(
    const std::vector<std::vector<std::int64_t>>& vectors) {
  if (vectors.empty()) return 0;
  std::size_t len = vectors[0].size();
  for (const auto& v : vectors) {
    if (v.size() != len) throw Error("vector lengths differ");
  }
  Matrix m(vectors.size(), len, Field::rationals());
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    for (std::size_t c = 0; c < len; ++c) {
      m.at(r, c) = Scalar::from_int(Field::rationals(), vectors[r][c]);
    }
  }
  return rank_exact(m);
}

std::size_t face_prime_quotient_dim(const MonomialSubalgebra& algebra,
                                    const std::vector<std::string>& killed) {
  if (!algebra.ring) throw Error("null ring");
  std::vector<std::size_t> killed_indices;
  for (const auto& name : killed) {
    auto idx = algebra.ring->index_of(name);
    if (!idx) throw Error("unknown variable: " + name);
    killed_indices.push_back(*idx);
  }
  std::vector<std::vector<std::int64_t>> surviving;
  for (const auto& m : algebra.generators) {
    bool survives = true;
    for (std::size_t idx : killed_indices) {
      if (m.exponent(idx) > 0) {
        survives = false;
        break;
      }
    }
    if (!survives) continue;
    std::vector<std::int64_t> exps;
    exps.reserve(m.size());
    for (std::uint32_t e : m.exponents()) exps.push_back(e);
    surviving.push_back(std::move(exps));
  }
  return lattice_rank(surviving);
}

std::size_t subalgebra_dim(const MonomialSubalgebra& algebra) {
  return face_prime_quotient_dim(algebra, {});
}

}  // namespace cca
