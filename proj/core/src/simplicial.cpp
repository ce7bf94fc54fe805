#include "cca/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cca/errors.hpp"
#include "cca/groebner.hpp"

namespace cca {

namespace {

constexpr std::size_t kMaxEnumerableVertices = 20;

bool subset_of(const std::vector<std::size_t>& a,
               const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::make_by_index(
    std::vector<std::string> vertices,
    std::vector<std::vector<std::size_t>> facets, bool* dropped_nonmaximal) {
  std::unordered_set<std::string> seen;
  for (const auto& label : vertices) {
    if (label.empty()) throw Error("empty vertex label");
    if (!seen.insert(label).second) {
      throw Error("duplicate vertex label: " + label);
    }
  }
  for (auto& facet : facets) {
    for (std::size_t v : facet) {
      if (v >= vertices.size()) throw Error("facet vertex out of range");
    }
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
  }

  // Keep only inclusion-maximal facets; drop duplicates.
  std::vector<std::vector<std::size_t>> maximal;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i == j) continue;
      if (subset_of(facets[i], facets[j]) &&
          (facets[i] != facets[j] || j < i)) {
        keep = false;
        break;
      }
    }
    if (keep) maximal.push_back(facets[i]);
  }
  if (dropped_nonmaximal) {
    *dropped_nonmaximal = maximal.size() != facets.size();
  }

  // Canonical facet order: lexicographic on sorted label sequences.
  std::sort(maximal.begin(), maximal.end(),
            [&vertices](const std::vector<std::size_t>& a,
                        const std::vector<std::size_t>& b) {
              std::vector<std::string> la;
              for (std::size_t v : a) la.push_back(vertices[v]);
              std::vector<std::string> lb;
              for (std::size_t v : b) lb.push_back(vertices[v]);
              std::sort(la.begin(), la.end());
              std::sort(lb.begin(), lb.end());
              return la < lb;
            });

  SimplicialComplex complex;
  complex.vertices_ = std::move(vertices);
  complex.facets_ = std::move(maximal);
  return complex;
}

SimplicialComplex SimplicialComplex::make(
    std::vector<std::string> vertices,
    std::vector<std::vector<std::string>> facets, bool* dropped_nonmaximal) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
  std::vector<std::vector<std::size_t>> by_index;
  by_index.reserve(facets.size());
  for (const auto& facet : facets) {
    std::vector<std::size_t> converted;
    converted.reserve(facet.size());
    for (const auto& label : facet) {
      auto it = index.find(label);
      if (it == index.end()) {
        throw Error("facet vertex not in vertex list: " + label);
      }
      converted.push_back(it->second);
    }
    by_index.push_back(std::move(converted));
  }
  return make_by_index(std::move(vertices), std::move(by_index),
                       dropped_nonmaximal);
}

SimplicialComplex SimplicialComplex::void_complex(
    std::vector<std::string> vertices) {
  return make_by_index(std::move(vertices), {});
}

SimplicialComplex SimplicialComplex::empty_complex(
    std::vector<std::string> vertices) {
  return make_by_index(std::move(vertices), {{}});
}

SimplicialComplex SimplicialComplex::full_simplex(
    std::vector<std::string> vertices) {
  std::vector<std::size_t> all(vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return make_by_index(std::move(vertices), {all});
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_labels() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(facets_.size());
  for (const auto& facet : facets_) {
    std::vector<std::string> labels;
    labels.reserve(facet.size());
    for (std::size_t v : facet) labels.push_back(vertices_[v]);
    out.push_back(std::move(labels));
  }
  return out;
}

std::int64_t SimplicialComplex::dimension() const {
  if (is_void()) throw Error("void complex has no dimension");
  std::size_t best = 0;
  for (const auto& facet : facets_) best = std::max(best, facet.size());
  return static_cast<std::int64_t>(best) - 1;
}

bool SimplicialComplex::has_face(const std::vector<std::size_t>& face) const {
  std::vector<std::size_t> sorted = face;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& facet : facets_) {
    if (subset_of(sorted, facet)) return true;
  }
  return false;
}

std::vector<std::vector<std::size_t>> SimplicialComplex::faces_of_dimension(
    std::int64_t d) const {
  if (d < -1) throw Error("dimension below -1");
  std::set<std::vector<std::size_t>> faces;
  std::size_t size = static_cast<std::size_t>(d + 1);
  for (const auto& facet : facets_) {
    if (facet.size() < size) continue;
    // Enumerate size-subsets of the facet.
    std::vector<std::size_t> pick(size);
    auto recurse = [&](auto&& self, std::size_t start,
                       std::size_t chosen) -> void {
      if (chosen == size) {
        faces.insert(pick);
        return;
      }
      for (std::size_t k = start; k < facet.size(); ++k) {
        pick[chosen] = facet[k];
        self(self, k + 1, chosen + 1);
      }
    };
    recurse(recurse, 0, 0);
  }
  return std::vector<std::vector<std::size_t>>(faces.begin(), faces.end());
}

std::vector<std::vector<std::size_t>> SimplicialComplex::all_faces() const {
  std::vector<std::vector<std::size_t>> out;
  if (is_void()) return out;
  for (std::int64_t d = -1; d <= dimension(); ++d) {
    for (auto& face : faces_of_dimension(d)) out.push_back(std::move(face));
  }
  return out;
}

SimplicialComplex from_stanley_reisner(const std::vector<Monomial>& gens,
                                       const RingPtr& ring) {
  if (!ring) throw Error("null ring");
  std::size_t n = ring->size();
  if (n > kMaxEnumerableVertices) {
    throw Error("too many variables for face enumeration");
  }
  std::vector<std::uint32_t> supports;
  for (const auto& m : gens) {
    if (m.size() != n) throw Error("monomial does not fit ring");
    if (!m.is_squarefree()) throw Error("generator is not square-free");
    if (m.is_one()) throw Error("unit generator");
  }
  std::vector<Monomial> minimal = minimalize_monomials(gens);
  std::vector<std::uint32_t> masks;
  for (const auto& m : minimal) {
    std::uint32_t mask = 0;
    for (std::size_t i : m.support()) mask |= std::uint32_t(1) << i;
    masks.push_back(mask);
  }

  // A subset is a face iff it contains no generator's support; facets are
  // the maximal faces.
  std::uint32_t full = (std::uint32_t(1) << n) - 1;
  std::vector<bool> is_face(std::size_t(full) + 1, false);
  for (std::uint32_t s = 0; s <= full; ++s) {
    bool face = true;
    for (std::uint32_t mask : masks) {
      if ((s & mask) == mask) {
        face = false;
        break;
      }
    }
    is_face[s] = face;
  }
  std::vector<std::vector<std::size_t>> facets;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (!is_face[s]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t bit = std::uint32_t(1) << i;
      if (!(s & bit) && is_face[s | bit]) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      std::vector<std::size_t> facet;
      for (std::size_t i = 0; i < n; ++i) {
        if (s & (std::uint32_t(1) << i)) facet.push_back(i);
      }
      facets.push_back(std::move(facet));
    }
  }
  return SimplicialComplex::make_by_index(ring->variables(),
                                          std::move(facets));
}

std::vector<Monomial> to_stanley_reisner(const SimplicialComplex& complex,
                                         const RingPtr& ring) {
  if (!ring) throw Error("null ring");
  if (complex.is_void()) {
    throw Error("void complex has no Stanley-Reisner ideal");
  }
  if (complex.vertices() != ring->variables()) {
    throw Error("vertex labels do not match ring variables");
  }
  std::size_t n = ring->size();
  if (n > kMaxEnumerableVertices) {
    throw Error("too many variables for face enumeration");
  }

  std::vector<std::uint32_t> facet_masks;
  for (const auto& facet : complex.facets()) {
    std::uint32_t mask = 0;
    for (std::size_t v : facet) mask |= std::uint32_t(1) << v;
    facet_masks.push_back(mask);
  }
  auto is_face = [&facet_masks](std::uint32_t s) {
    for (std::uint32_t f : facet_masks) {
      if ((s & f) == s) return true;
    }
    return false;
  };

  // Minimal non-faces: every proper subset obtained by removing one vertex
  // is a face.
  std::vector<Monomial> gens;
  std::uint32_t full = (std::uint32_t(1) << n) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (is_face(s)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      std::uint32_t bit = std::uint32_t(1) << i;
      if ((s & bit) && !is_face(s & ~bit)) minimal = false;
    }
    if (!minimal) continue;
    std::vector<std::uint32_t> exps(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (s & (std::uint32_t(1) << i)) exps[i] = 1;
    }
    gens.emplace_back(std::move(exps));
  }
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              return b.exponents() < a.exponents();
            });
  return gens;
}

std::vector<MonomialPrime> minimal_primes_sr(
    const SimplicialComplex& complex) {
  if (complex.is_void()) throw Error("void complex has no minimal primes");
  std::vector<MonomialPrime> primes;
  for (const auto& facet : complex.facets()) {
    MonomialPrime prime;
    std::unordered_set<std::size_t> in_facet(facet.begin(), facet.end());
    for (std::size_t v = 0; v < complex.num_vertices(); ++v) {
      if (!in_facet.count(v)) prime.variables.push_back(complex.vertices()[v]);
    }
    std::sort(prime.variables.begin(), prime.variables.end());
    primes.push_back(std::move(prime));
  }
  return primes;
}

SimplicialComplex nerve(const std::vector<std::vector<std::string>>& cover) {
  std::vector<std::vector<std::string>> members;
  for (const auto& member : cover) {
    if (member.empty()) throw Error("empty cover member");
    std::vector<std::string> sorted = member;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    members.push_back(std::move(sorted));
  }
  std::sort(members.begin(), members.end());

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    labels.push_back(std::to_string(i));
  }

  // A set of members has common intersection iff some element lies in all of
  // them, so the nerve's facets are the maximal sets A_v = {i : v ∈ member_i}.
  std::map<std::string, std::vector<std::size_t>> containing;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& v : members[i]) containing[v].push_back(i);
  }
  std::vector<std::vector<std::size_t>> facets;
  for (auto& [v, indices] : containing) facets.push_back(indices);
  return SimplicialComplex::make_by_index(std::move(labels),
                                          std::move(facets));
}

SimplicialComplex lyubeznik_complex_sr(const std::vector<Monomial>& gens,
                                       const RingPtr& ring) {
  SimplicialComplex delta = from_stanley_reisner(gens, ring);
  std::vector<MonomialPrime> primes = minimal_primes_sr(delta);
  if (primes.size() >= 31) {
    throw Error("too many minimal primes for subset enumeration");
  }
  std::sort(primes.begin(), primes.end(),
            [](const MonomialPrime& a, const MonomialPrime& b) {
              return a.variables < b.variables;
            });

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    labels.push_back(std::to_string(i));
  }

  // Face iff the union of the primes' variables misses some ring variable.
  std::vector<std::uint32_t> prime_masks;
  for (const auto& prime : primes) {
    std::uint32_t mask = 0;
    for (const auto& name : prime.variables) {
      mask |= std::uint32_t(1) << *ring->index_of(name);
    }
    prime_masks.push_back(mask);
  }
  std::uint32_t full = (std::uint32_t(1) << ring->size()) - 1;
  std::size_t s = primes.size();
  std::vector<std::vector<std::size_t>> faces;
  faces.push_back({});
  for (std::uint32_t subset = 1; subset < (std::uint32_t(1) << s); ++subset) {
    std::uint32_t union_mask = 0;
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < s; ++i) {
      if (subset & (std::uint32_t(1) << i)) {
        union_mask |= prime_masks[i];
        face.push_back(i);
      }
    }
    if (union_mask != full) faces.push_back(std::move(face));
  }
  return SimplicialComplex::make_by_index(std::move(labels),
                                          std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& complex,
                       const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  if (!complex.has_face(sorted)) throw Error("not a face of the complex");
  if (sorted.empty()) return complex;

  std::vector<std::vector<std::size_t>> link_facets;
  std::set<std::size_t> used;
  for (const auto& facet : complex.facets()) {
    if (!subset_of(sorted, facet)) continue;
    std::vector<std::size_t> rest;
    for (std::size_t v : facet) {
      if (!std::binary_search(sorted.begin(), sorted.end(), v)) {
        rest.push_back(v);
        used.insert(v);
      }
    }
    link_facets.push_back(std::move(rest));
  }

  // Induced vertex list, renumbered.
  std::vector<std::string> labels;
  std::unordered_map<std::size_t, std::size_t> renumber;
  for (std::size_t v : used) {
    renumber[v] = labels.size();
    labels.push_back(complex.vertices()[v]);
  }
  for (auto& facet : link_facets) {
    for (auto& v : facet) v = renumber[v];
  }
  return SimplicialComplex::make_by_index(std::move(labels),
                                          std::move(link_facets));
}

std::vector<HeightTableEntry> heights_of_sums(
    const std::vector<MonomialPrime>& primes, const RingPtr& ring) {
  if (!ring) throw Error("null ring");
  if (primes.size() >= 31 || ring->size() > 32) {
    throw Error("too many primes or variables for subset enumeration");
  }
  std::vector<std::uint32_t> masks;
  for (const auto& prime : primes) {
    std::uint32_t mask = 0;
    for (const auto& name : prime.variables) {
      auto idx = ring->index_of(name);
      if (!idx) throw Error("unknown variable: " + name);
      mask |= std::uint32_t(1) << *idx;
    }
    masks.push_back(mask);
  }
  std::vector<HeightTableEntry> table;
  std::size_t s = primes.size();
  for (std::uint32_t subset = 1; subset < (std::uint32_t(1) << s); ++subset) {
    HeightTableEntry entry;
    std::uint32_t union_mask = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (subset & (std::uint32_t(1) << i)) {
        union_mask |= masks[i];
        entry.subset.push_back(i);
      }
    }
    entry.height = static_cast<std::size_t>(__builtin_popcount(union_mask));
    table.push_back(std::move(entry));
  }
  return table;
}

LyubeznikShapeVerdict lyubeznik_shape(std::size_t count,
                                      const std::vector<std::size_t>& pairwise,
                                      std::size_t total) {
  LyubeznikShapeVerdict verdict;
  if (count != 3) {
    verdict.failing_clause = "count";
    return verdict;
  }
  for (std::size_t h : pairwise) {
    if (h != 2) {
      verdict.failing_clause = "pairwise";
      return verdict;
    }
  }
  if (total != 4) {
    verdict.failing_clause = "total";
    return verdict;
  }
  verdict.pass = true;
  return verdict;
}

LyubeznikShapeVerdict lyubeznik_problem_check(
    const std::vector<MonomialPrime>& primes, const RingPtr& ring) {
  std::vector<std::size_t> pairwise;
  std::size_t total = 0;
  for (const auto& entry : heights_of_sums(primes, ring)) {
    if (entry.subset.size() == 2) pairwise.push_back(entry.height);
    if (entry.subset.size() == primes.size()) total = entry.height;
  }
  return lyubeznik_shape(primes.size(), pairwise, total);
}

}  // namespace cca
