#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cca/monomial.hpp"
#include "cca/ring.hpp"

namespace cca {

// Facets are stored as ascending vertex-index vectors, listed in canonical
// order (lexicographic on the facets' sorted label sequences). The void
// complex (no faces) and the empty complex {∅} (one empty facet) are
// distinct values.
class SimplicialComplex {
 public:
  static SimplicialComplex make(std::vector<std::string> vertices,
                                std::vector<std::vector<std::string>> facets,
                                bool* dropped_nonmaximal = nullptr);
  static SimplicialComplex make_by_index(
      std::vector<std::string> vertices,
      std::vector<std::vector<std::size_t>> facets,
      bool* dropped_nonmaximal = nullptr);
  static SimplicialComplex void_complex(std::vector<std::string> vertices);
  static SimplicialComplex empty_complex(std::vector<std::string> vertices);
  static SimplicialComplex full_simplex(std::vector<std::string> vertices);

  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<std::vector<std::size_t>>& facets() const {
    return facets_;
  }
  std::vector<std::vector<std::string>> facet_labels() const;

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const {
    return facets_.size() == 1 && facets_[0].empty();
  }
  // Max facet size minus one; the empty complex has dimension -1.
  std::int64_t dimension() const;

  bool has_face(const std::vector<std::size_t>& face) const;
  // All faces with d+1 vertices (d = -1 gives {∅}), each ascending, in
  // lexicographic order.
  std::vector<std::vector<std::size_t>> faces_of_dimension(
      std::int64_t d) const;
  std::vector<std::vector<std::size_t>> all_faces() const;

  bool operator==(const SimplicialComplex& other) const {
    return vertices_ == other.vertices_ && facets_ == other.facets_;
  }
  bool operator!=(const SimplicialComplex& other) const {
    return !(*this == other);
  }

  // Default is the void complex on no vertices.
  SimplicialComplex() = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<std::size_t>> facets_;
};

// Ideal of a face complement.
struct MonomialPrime {
  std::vector<std::string> variables;  // sorted lexicographically

  std::size_t height() const { return variables.size(); }
  bool operator==(const MonomialPrime& other) const {
    return variables == other.variables;
  }
};

// Complex whose faces are the subsets containing no generator's support.
// Generators must be square-free non-units; they are minimalized first.
SimplicialComplex from_stanley_reisner(const std::vector<Monomial>& gens,
                                       const RingPtr& ring);

// Minimal non-faces as square-free monomials; inverse of
// from_stanley_reisner. Vertex labels must equal the ring's variables.
std::vector<Monomial> to_stanley_reisner(const SimplicialComplex& complex,
                                         const RingPtr& ring);

// One prime per facet: the complement of the facet in the vertex list.
std::vector<MonomialPrime> minimal_primes_sr(const SimplicialComplex& complex);

// Nerve of a cover: one vertex per member (labeled "0".."s-1" in canonical
// sort, lexicographic on sorted member labels); a face wherever the members
// intersect.
SimplicialComplex nerve(const std::vector<std::vector<std::string>>& cover);

// Lyubeznik complex of a square-free monomial ideal: vertices are the
// minimal primes (canonically sorted); a face iff the union of the primes'
// variables misses some ring variable (sums of monomial primes are radical,
// so the radical-versus-maximal test is a union test).
SimplicialComplex lyubeznik_complex_sr(const std::vector<Monomial>& gens,
                                       const RingPtr& ring);

// {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ} with induced vertex list; σ must be a face.
SimplicialComplex link(const SimplicialComplex& complex,
                       const std::vector<std::size_t>& sigma);

struct HeightTableEntry {
  std::vector<std::size_t> subset;  // indices into the prime list, ascending
  std::size_t height;               // cardinality of the union
};

// Heights of all nonempty subset sums, in subset mask order.
std::vector<HeightTableEntry> heights_of_sums(
    const std::vector<MonomialPrime>& primes, const RingPtr& ring);

struct LyubeznikShapeVerdict {
  bool pass = false;
  std::string failing_clause;  // "count", "pairwise", or "total"
};

// The height pattern of Lyubeznik's problem: exactly 3 primes, every
// pairwise sum of height 2, total sum of height 4.
LyubeznikShapeVerdict lyubeznik_shape(std::size_t count,
                                      const std::vector<std::size_t>& pairwise,
                                      std::size_t total);
LyubeznikShapeVerdict lyubeznik_problem_check(
    const std::vector<MonomialPrime>& primes, const RingPtr& ring);

}  // namespace cca
