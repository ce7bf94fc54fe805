#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cca/simplicial.hpp"

// Homology reference independent of the library's chain-complex code: faces
// are re-enumerated from the facet bitmasks, boundary matrices are rebuilt
// over the integers, and ranks come from separate integer and modular
// eliminations. Shared deterministic sampling helpers live here too.
namespace testsupport {

using BigInt = boost::multiprecision::cpp_int;

// Uniform-ish draw from [lo, hi] that does not depend on distribution
// internals, so sequences are stable across standard libraries.
inline std::uint64_t bounded(std::mt19937_64& engine, std::uint64_t lo,
                             std::uint64_t hi) {
  return lo + engine() % (hi - lo + 1);
}

struct IntegerChain {
  // faces[d + 1] holds the d-faces as vertex bitmasks, ascending.
  std::vector<std::vector<std::uint32_t>> faces;
  // matrices[d + 1] is the integer matrix of the boundary map out of the
  // d-faces, rows indexed by the (d - 1)-faces. The d = 0 entry is the
  // augmentation row.
  std::vector<std::vector<std::vector<BigInt>>> matrices;
};

inline IntegerChain integer_chain(const cca::SimplicialComplex& complex) {
  IntegerChain chain;
  if (complex.is_void()) return chain;
  const std::size_t n = complex.num_vertices();
  std::vector<std::uint32_t> facet_masks;
  for (const auto& facet : complex.facets()) {
    std::uint32_t mask = 0;
    for (std::size_t v : facet) mask |= std::uint32_t(1) << v;
    facet_masks.push_back(mask);
  }
  std::size_t top = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    bool inside = false;
    for (std::uint32_t fm : facet_masks) {
      if ((mask & fm) == mask) {
        inside = true;
        break;
      }
    }
    if (!inside) continue;
    std::size_t size = std::size_t(__builtin_popcount(mask));
    if (chain.faces.size() < size + 1) chain.faces.resize(size + 1);
    chain.faces[size].push_back(mask);
    top = std::max(top, size);
  }
  for (auto& level : chain.faces) std::sort(level.begin(), level.end());

  chain.matrices.resize(chain.faces.size());
  for (std::size_t size = 1; size < chain.faces.size(); ++size) {
    const auto& rows_faces = chain.faces[size - 1];
    const auto& cols_faces = chain.faces[size];
    std::vector<std::vector<BigInt>> matrix(
        rows_faces.size(), std::vector<BigInt>(cols_faces.size(), 0));
    for (std::size_t c = 0; c < cols_faces.size(); ++c) {
      std::uint32_t mask = cols_faces[c];
      int sign = 1;
      for (std::uint32_t bit = 0; bit < n; ++bit) {
        if (!(mask & (std::uint32_t(1) << bit))) continue;
        std::uint32_t sub = mask & ~(std::uint32_t(1) << bit);
        auto row = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
        matrix[std::size_t(row - rows_faces.begin())][c] = sign;
        sign = -sign;
      }
    }
    chain.matrices[size] = std::move(matrix);
  }
  return chain;
}

// Rank over Q by fraction-free integer elimination.
inline std::size_t integer_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      BigInt factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        m[r][c] = m[r][c] * m[rank][col] - factor * m[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

// Rank over F_p by modular elimination; p must be an odd-or-2 prime < 2^31.
inline std::size_t modular_rank(const std::vector<std::vector<BigInt>>& input,
                                std::uint64_t p) {
  if (input.empty() || input[0].empty()) return 0;
  const std::size_t rows = input.size(), cols = input[0].size();
  std::vector<std::vector<std::int64_t>> m(rows,
                                           std::vector<std::int64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      BigInt residue = input[r][c] % BigInt(p);
      if (residue < 0) residue += p;
      m[r][c] = residue.convert_to<std::int64_t>();
    }
  }
  auto power = [p](std::int64_t base, std::uint64_t exp) {
    std::int64_t out = 1;
    while (exp) {
      if (exp & 1) out = out * base % std::int64_t(p);
      base = base * base % std::int64_t(p);
      exp >>= 1;
    }
    return out;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    std::int64_t inverse = power(m[rank][col], p - 2);
    for (std::size_t c = col; c < cols; ++c) {
      m[rank][c] = m[rank][c] * inverse % std::int64_t(p);
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      std::int64_t factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        m[r][c] = (m[r][c] - factor * m[rank][c] % std::int64_t(p) +
                   std::int64_t(p)) %
                  std::int64_t(p);
      }
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers; entry i holds dim H~_{i-1}, matching BettiVector.
// p = 0 computes over Q, otherwise over F_p.
inline std::vector<std::size_t> oracle_reduced_betti(
    const cca::SimplicialComplex& complex, std::uint64_t p) {
  IntegerChain chain = integer_chain(complex);
  std::vector<std::size_t> entries;
  if (chain.faces.empty()) return entries;
  std::vector<std::size_t> ranks(chain.faces.size() + 1, 0);
  for (std::size_t size = 1; size < chain.faces.size(); ++size) {
    ranks[size] = p == 0 ? integer_rank(chain.matrices[size])
                         : modular_rank(chain.matrices[size], p);
  }
  for (std::size_t size = 0; size < chain.faces.size(); ++size) {
    std::size_t dim_c = chain.faces[size].size();
    entries.push_back(dim_c - ranks[size] - ranks[size + 1]);
  }
  return entries;
}

// Random complex on up to seven vertices with at least one nonempty facet.
inline cca::SimplicialComplex random_complex(std::mt19937_64& engine) {
  static const std::vector<std::string> pool = {"a", "b", "c", "d",
                                               "e", "f", "g"};
  std::size_t n = std::size_t(bounded(engine, 1, 7));
  std::vector<std::string> vertices(pool.begin(), pool.begin() + n);
  std::size_t count = std::size_t(bounded(engine, 1, 5));
  std::vector<std::vector<std::size_t>> facets;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t mask =
        std::uint32_t(bounded(engine, 1, (std::uint64_t(1) << n) - 1));
    std::vector<std::size_t> facet;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask & (std::uint32_t(1) << v)) facet.push_back(v);
    }
    facets.push_back(std::move(facet));
  }
  return cca::SimplicialComplex::make_by_index(std::move(vertices),
                                               std::move(facets));
}

}  // namespace testsupport
