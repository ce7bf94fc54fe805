#include "commands.hpp"

#include <algorithm>
#include <vector>

#include "cca/complex_io.hpp"
#include "cca/errors.hpp"
#include "cca/groebner.hpp"
#include "cca/homology.hpp"
#include "cca/ideal_io.hpp"
#include "cca/simplicial.hpp"
#include "cca/weights.hpp"
#include "render.hpp"

namespace cca::workbench {

namespace {

LoadedComplex load_complex(Report& report, const std::string& path) {
  LoadedComplex loaded = read_complex_json_from_path(path);
  if (loaded.minimalized) {
    report.payload["warnings"] = Json::array(
        {"non-maximal or duplicate facets were dropped from the input"});
  }
  return loaded;
}

}  // namespace

Report cmd_homology(const std::string& path, Field field) {
  Report report;
  report.command = "homology";
  report.inputs["file"] = path;
  report.inputs["field"] = field.to_string();
  LoadedComplex loaded = load_complex(report, path);
  BettiVector betti = reduced_betti(loaded.complex, field);
  report.payload["vertices"] = loaded.complex.vertices();
  report.payload["dimension"] = loaded.complex.dimension();
  report.payload["betti"] = betti_json(betti);
  return report;
}

Report cmd_depth(const std::string& path, Field field) {
  Report report;
  report.command = "depth";
  report.inputs["file"] = path;
  report.inputs["field"] = field.to_string();
  LoadedComplex loaded = load_complex(report, path);
  report.payload["depth"] = depth_sr(loaded.complex, field);
  report.payload["krull_dimension"] = loaded.complex.dimension() + 1;
  report.payload["cohen_macaulay"] = is_cohen_macaulay(loaded.complex, field);
  return report;
}

Report cmd_nerve(const std::string& path) {
  Report report;
  report.command = "nerve";
  report.inputs["file"] = path;
  LoadedComplex loaded = load_complex(report, path);
  SimplicialComplex result = nerve(loaded.complex.facet_labels());
  report.payload["members"] = loaded.complex.facet_labels();
  report.payload["nerve"] = Json::parse(write_complex_json(result));
  return report;
}

Report cmd_lyubeznik(const std::string& path, Field field) {
  Report report;
  report.command = "lyubeznik";
  report.inputs["file"] = path;
  report.inputs["field"] = field.to_string();
  IdealFile file = read_ideal_file_from_path(path);
  std::vector<Monomial> gens;
  for (const Polynomial& p : file.generators) {
    if (!p.is_monomial()) {
      throw Error("generator is not a monomial: " + p.to_string(file.order));
    }
    gens.push_back(p.terms().begin()->first);
  }
  SimplicialComplex lyub = lyubeznik_complex_sr(gens, file.ring);
  std::vector<MonomialPrime> primes =
      minimal_primes_sr(from_stanley_reisner(gens, file.ring));
  std::sort(primes.begin(), primes.end(),
            [](const MonomialPrime& lhs, const MonomialPrime& rhs) {
              return lhs.variables < rhs.variables;
            });
  Json prime_lists = Json::array();
  for (const MonomialPrime& prime : primes) prime_lists.push_back(prime.variables);
  report.payload["primes"] = prime_lists;
  report.payload["complex"] = Json::parse(write_complex_json(lyub));
  report.payload["betti"] = betti_json(reduced_betti(lyub, field));
  return report;
}

Report cmd_groebner(const std::string& path) {
  Report report;
  report.command = "groebner";
  report.inputs["file"] = path;
  IdealFile file = read_ideal_file_from_path(path);
  GroebnerBasis basis = buchberger(Ideal(file.ring, file.generators), file.order);
  report.payload["ring"] = file.ring->to_string();
  report.payload["order"] = file.order.to_string();
  report.payload["members"] = polynomial_strings(basis.members, file.order);
  return report;
}

Report cmd_initial(const std::string& path) {
  Report report;
  report.command = "initial";
  report.inputs["file"] = path;
  IdealFile file = read_ideal_file_from_path(path);
  std::vector<Monomial> gens =
      initial_ideal(Ideal(file.ring, file.generators), file.order);
  report.payload["order"] = file.order.to_string();
  report.payload["generators"] = monomial_strings(gens, file.ring);
  return report;
}

Report cmd_weight(const std::string& path) {
  Report report;
  report.command = "weight";
  report.inputs["file"] = path;
  IdealFile file = read_ideal_file_from_path(path);
  GroebnerBasis basis = buchberger(Ideal(file.ring, file.generators), file.order);
  WeightVector w = find_weight_vector(basis);
  report.payload["variables"] = file.ring->variables();
  report.payload["weights"] = w;
  report.payload["certified"] = check_weight_certificate(basis, w);
  return report;
}

Report cmd_homogenize(const std::string& path, const std::string& fresh_name) {
  Report report;
  report.command = "homogenize";
  report.inputs["file"] = path;
  report.inputs["fresh_variable"] = fresh_name;
  IdealFile file = read_ideal_file_from_path(path);
  GroebnerBasis basis = buchberger(Ideal(file.ring, file.generators), file.order);
  WeightVector w = find_weight_vector(basis);
  RingPtr extended = extend_ring(file.ring, w, fresh_name);
  MonomialOrder extended_order = MonomialOrder::lex(extended);
  std::vector<std::string> members;
  std::vector<std::string> at_zero;
  for (const Polynomial& member : basis.members) {
    Polynomial hom = homogenize_w(member, w, extended);
    members.push_back(hom.to_string(extended_order));
    Polynomial zero = specialize(hom, fresh_name, 0);
    at_zero.push_back(zero.to_string(MonomialOrder::lex(zero.ring())));
  }
  report.payload["weights"] = w;
  report.payload["extended_ring"] = extended->to_string();
  report.payload["members"] = members;
  report.payload["specialized_at_zero"] = at_zero;
  return report;
}

}  // namespace cca::workbench
