#include "cca/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cca/errors.hpp"

namespace cca {

namespace {

std::vector<std::vector<std::size_t>> faces_sorted_by_labels(
    const SimplicialComplex& complex, std::int64_t d) {
  std::vector<std::vector<std::size_t>> faces = complex.faces_of_dimension(d);
  std::sort(faces.begin(), faces.end(),
            [&complex](const std::vector<std::size_t>& a,
                       const std::vector<std::size_t>& b) {
              std::vector<std::string> la;
              for (std::size_t v : a) la.push_back(complex.vertices()[v]);
              std::vector<std::string> lb;
              for (std::size_t v : b) lb.push_back(complex.vertices()[v]);
              std::sort(la.begin(), la.end());
              std::sort(lb.begin(), lb.end());
              return la < lb;
            });
  return faces;
}

}  // namespace

ChainBoundary boundary_matrices(const SimplicialComplex& complex,
                                Field field) {
  if (complex.is_void()) throw Error("void complex has no chain complex");
  std::int64_t dim = complex.dimension();

  ChainBoundary chain{field, {}, {}};
  for (std::int64_t d = -1; d <= dim; ++d) {
    chain.faces.push_back(faces_sorted_by_labels(complex, d));
  }

  Scalar one = Scalar::one(field);
  for (std::int64_t i = 0; i <= dim; ++i) {
    const auto& domain = chain.faces[std::size_t(i + 1)];
    const auto& codomain = chain.faces[std::size_t(i)];
    std::map<std::vector<std::size_t>, std::size_t> codomain_index;
    for (std::size_t r = 0; r < codomain.size(); ++r) {
      codomain_index[codomain[r]] = r;
    }
    Matrix boundary(codomain.size(), domain.size(), field);
    for (std::size_t c = 0; c < domain.size(); ++c) {
      const auto& face = domain[c];
      Scalar sign = one;
      for (std::size_t k = 0; k < face.size(); ++k) {
        std::vector<std::size_t> sub;
        sub.reserve(face.size() - 1);
        for (std::size_t t = 0; t < face.size(); ++t) {
          if (t != k) sub.push_back(face[t]);
        }
        boundary.at(codomain_index.at(sub), c) = sign;
        sign = -sign;
      }
    }
    chain.boundaries.push_back(std::move(boundary));
  }

  // Boundary identity; violation is an internal bug, not an input problem.
  for (std::size_t i = 1; i < chain.boundaries.size(); ++i) {
    if (!multiply(chain.boundaries[i - 1], chain.boundaries[i]).is_zero()) {
      throw std::logic_error("boundary of boundary is nonzero");
    }
  }
  return chain;
}

BettiVector reduced_betti(const SimplicialComplex& complex, Field field) {
  if (complex.is_void()) throw Error("void complex has no homology");
  ChainBoundary chain = boundary_matrices(complex, field);
  std::int64_t dim = complex.dimension();

  // ranks[i] = rank ∂_i for i = 0..dim, with rank 0 beyond the top.
  std::vector<std::size_t> ranks;
  for (const auto& boundary : chain.boundaries) {
    ranks.push_back(rank_exact(boundary));
  }
  auto rank_of = [&ranks](std::int64_t i) {
    if (i < 0 || i >= std::int64_t(ranks.size())) return std::size_t(0);
    return ranks[std::size_t(i)];
  };

  BettiVector betti{field, {}};
  for (std::int64_t i = -1; i <= dim; ++i) {
    std::size_t n_i = chain.faces[std::size_t(i + 1)].size();
    std::size_t cycles = n_i - rank_of(i);
    betti.entries.push_back(cycles - rank_of(i + 1));
  }

  // Euler cross-check: alternating Betti sum = reduced Euler characteristic.
  std::int64_t betti_sum = 0;
  std::int64_t chi = 0;
  for (std::int64_t i = -1; i <= dim; ++i) {
    std::int64_t sign = ((i % 2) == 0) ? 1 : -1;
    betti_sum += sign * std::int64_t(betti.entries[std::size_t(i + 1)]);
    chi += sign * std::int64_t(chain.faces[std::size_t(i + 1)].size());
  }
  if (betti_sum != chi) {
    throw std::logic_error("Betti alternating sum disagrees with Euler characteristic");
  }
  return betti;
}

std::size_t depth_sr(const SimplicialComplex& complex, Field field) {
  if (complex.is_void()) throw Error("void complex has no depth");
  std::size_t best = std::size_t(-1);
  for (const auto& sigma : complex.all_faces()) {
    SimplicialComplex lk = link(complex, sigma);
    BettiVector betti = reduced_betti(lk, field);
    for (std::int64_t j = -1; j < std::int64_t(betti.entries.size()) - 1;
         ++j) {
      if (betti.reduced(j) == 0) continue;
      std::size_t candidate = std::size_t(j + std::int64_t(sigma.size()) + 1);
      best = std::min(best, candidate);
    }
  }
  if (best == std::size_t(-1)) {
    throw std::logic_error("no homology contribution found for depth");
  }
  return best;
}

bool is_cohen_macaulay(const SimplicialComplex& complex, Field field) {
  if (complex.is_void()) throw Error("void complex has no depth");
  std::size_t depth = depth_sr(complex, field);
  bool by_depth =
      std::int64_t(depth) == complex.dimension() + 1;

  // Reisner: every link (including of ∅) has vanishing H̃_j below its own
  // dimension.
  bool by_reisner = true;
  for (const auto& sigma : complex.all_faces()) {
    SimplicialComplex lk = link(complex, sigma);
    BettiVector betti = reduced_betti(lk, field);
    std::int64_t lk_dim = lk.dimension();
    for (std::int64_t j = -1; j < lk_dim; ++j) {
      if (betti.reduced(j) != 0) {
        by_reisner = false;
        break;
      }
    }
    if (!by_reisner) break;
  }
  if (by_depth != by_reisner) {
    throw std::logic_error("depth and Reisner criteria disagree");
  }
  return by_depth;
}

}  // namespace cca
