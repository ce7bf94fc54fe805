#pragma once

#include <iosfwd>
#include <string>

#include "cca/simplicial.hpp"

namespace cca {

struct LoadedComplex {
  SimplicialComplex complex;
  // True when non-maximal or duplicate facets were dropped on load; callers
  // surface this as a warning.
  bool minimalized = false;
};

// JSON object {"vertices": [labels...], "facets": [[labels...]...]}.
LoadedComplex read_complex_json(std::istream& in);
LoadedComplex read_complex_json_from_path(const std::string& path);

std::string write_complex_json(const SimplicialComplex& complex);

}  // namespace cca
