#pragma once

#include <cstdint>
#include <vector>

#include "cca/field.hpp"
#include "cca/linalg.hpp"
#include "cca/simplicial.hpp"

namespace cca {

// Augmented simplicial chain complex. faces[d+1] lists the d-faces
// (d = -1 .. dim), each ascending, sorted lexicographically on sorted vertex
// labels; boundaries[i] is the matrix of ∂_i : C_i -> C_{i-1} for
// i = 0 .. dim, with the augmentation to the empty face at i = 0.
struct ChainBoundary {
  Field field;
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  std::vector<Matrix> boundaries;
};

ChainBoundary boundary_matrices(const SimplicialComplex& complex, Field field);

// Reduced Betti numbers; entry i holds dim H̃_{i-1}, so index 0 is H̃_{-1}.
struct BettiVector {
  Field field;
  std::vector<std::size_t> entries;

  // H̃_i for i >= -1; dimensions beyond the stored range are zero.
  std::size_t reduced(std::int64_t i) const {
    std::int64_t idx = i + 1;
    if (idx < 0 || idx >= std::int64_t(entries.size())) return 0;
    return entries[std::size_t(idx)];
  }
  bool all_zero() const {
    for (std::size_t e : entries) {
      if (e != 0) return false;
    }
    return true;
  }
};

BettiVector reduced_betti(const SimplicialComplex& complex, Field field);

// Hochster-formula depth of the Stanley-Reisner ring: the minimum of
// j + |σ| + 1 over faces σ (including ∅) and j with H̃_j(link σ) ≠ 0.
std::size_t depth_sr(const SimplicialComplex& complex, Field field);

// depth = dim + 1, cross-checked against Reisner's criterion.
bool is_cohen_macaulay(const SimplicialComplex& complex, Field field);

}  // namespace cca
