#include "cca/complex_io.hpp"

#include <fstream>
#include <istream>

#include "json.hpp"

#include "cca/errors.hpp"

namespace cca {

LoadedComplex read_complex_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc.contains("facets")) {
    throw Error("complex JSON needs \"vertices\" and \"facets\"");
  }
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw Error("vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::vector<std::string>> facets;
  if (!doc["facets"].is_array()) throw Error("\"facets\" must be an array");
  for (const auto& facet : doc["facets"]) {
    if (!facet.is_array()) throw Error("each facet must be an array");
    std::vector<std::string> labels;
    for (const auto& v : facet) {
      if (!v.is_string()) throw Error("vertex labels must be strings");
      labels.push_back(v.get<std::string>());
    }
    facets.push_back(std::move(labels));
  }
  LoadedComplex loaded;
  loaded.complex = SimplicialComplex::make(std::move(vertices),
                                           std::move(facets),
                                           &loaded.minimalized);
  return loaded;
}

LoadedComplex read_complex_json_from_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  return read_complex_json(in);
}

std::string write_complex_json(const SimplicialComplex& complex) {
  nlohmann::json doc;
  doc["vertices"] = complex.vertices();
  doc["facets"] = complex.facet_labels();
  return doc.dump(2);
}

}  // namespace cca
