#pragma once

#include <cstdint>

#include "cca/field.hpp"
#include "report.hpp"

namespace cca::workbench {

struct ExMainOptions {
  // Coefficient field for the homology steps; the ideal itself lives over Q.
  Field field = Field::rationals();
  // Negative-control hook: flips a sign in one generator before the run.
  bool tamper = false;
};

// Eight-step reproduction: generators, reduced basis, initial ideal, facets,
// homology, depth, weight homogenization, nerve and Lyubeznik complex.
Report cmd_verify_ex_main(const ExMainOptions& options = {});

struct SegreOptions {
  std::uint64_t seed = 42;
  std::uint32_t trials = 25;
  std::uint32_t max_a = 2;
  std::uint32_t max_b = 2;
};

// Randomized check of the square-free initial-ideal description of Segre
// ideals of monomial quotients against the Buchberger oracle.
Report cmd_verify_segre(const SegreOptions& options = {});

// Height pattern of the degree-3 power slice k[(X,Y,Z)_3]: generator count,
// membership certificates, dimension, pairwise and total face-prime heights.
Report cmd_quasi_check();

}  // namespace cca::workbench
