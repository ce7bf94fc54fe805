#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cca/order.hpp"
#include "cca/polynomial.hpp"
#include "cca/ring.hpp"

namespace cca {

// Parsed ideal file: ring and order header plus generator expressions.
// Format: `ring <v1> <v2> ... over Q|Fp=<p>`, then `order lex <v>><v>>...`
// or `order weight <w1>,<w2>,... lex <...>`, then `gen <expression>` lines.
// Blank lines and `#` comments are ignored.
struct IdealFile {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> generators;
};

IdealFile read_ideal_file(std::istream& in);
IdealFile read_ideal_file_from_path(const std::string& path);

}  // namespace cca
