#include "pipelines.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cca/builtin.hpp"
#include "cca/errors.hpp"
#include "cca/groebner.hpp"
#include "cca/homology.hpp"
#include "cca/membership.hpp"
#include "cca/parser.hpp"
#include "cca/segre.hpp"
#include "cca/simplicial.hpp"
#include "cca/toric.hpp"
#include "cca/weights.hpp"
#include "render.hpp"

namespace cca::workbench {

Report cmd_verify_ex_main(const ExMainOptions& options) {
  Report report;
  report.command = "verify ex-main";
  report.inputs["field"] = options.field.to_string();
  if (options.tamper) report.inputs["tamper"] = true;
  report.verdict = Verdict::pass;
  Json steps = Json::array();
  auto fail_step = [&](int number, const std::string& name,
                       const std::string& witness) {
    Json entry = Json::object();
    entry["step"] = number;
    entry["name"] = name;
    entry["ok"] = false;
    entry["witness"] = witness;
    steps.push_back(entry);
    std::ostringstream text;
    text << "step " << number << " (" << name << "): " << witness;
    report.fail_with(text.str());
    report.payload["steps"] = steps;
  };

  // Step 1: the three 2-minors and four pullback cubics.
  SegreContext ctx = builtin::cubic_segre_context();
  std::vector<Polynomial> gens = builtin::cubic_segre_ideal(ctx).generators();
  if (options.tamper) {
    gens[0] = parse_polynomial("X00*X11 + X01*X10", ctx.ring_p);
  }
  {
    Json entry = Json::object();
    entry["step"] = 1;
    entry["name"] = "generators";
    entry["ok"] = true;
    entry["generators"] = polynomial_strings(gens, ctx.order_p);
    steps.push_back(entry);
  }

  // Step 2: reduced basis under the row-major lex order.
  GroebnerBasis basis = buchberger(Ideal(ctx.ring_p, gens), ctx.order_p);
  {
    Json entry = Json::object();
    entry["step"] = 2;
    entry["name"] = "reduced basis";
    entry["ok"] = true;
    entry["order"] = ctx.order_p.to_string();
    entry["members"] = polynomial_strings(basis.members, ctx.order_p);
    steps.push_back(entry);
  }

  // Step 3: initial ideal equals the seven listed monomials.
  std::vector<Monomial> computed = initial_ideal(basis);
  std::vector<Monomial> expected = builtin::cubic_segre_initial_monomials(ctx);
  if (computed != expected) {
    fail_step(3, "initial ideal",
              "mismatched generators: " +
                  joined(symmetric_difference_strings(computed, expected,
                                                      ctx.ring_p)));
    return report;
  }
  {
    Json entry = Json::object();
    entry["step"] = 3;
    entry["name"] = "initial ideal";
    entry["ok"] = true;
    entry["generators"] = monomial_strings(computed, ctx.ring_p);
    steps.push_back(entry);
  }

  // Step 4: the face complex of the initial ideal has the six triangles.
  SimplicialComplex delta = from_stanley_reisner(computed, ctx.ring_p);
  std::vector<std::vector<std::string>> facets = delta.facet_labels();
  if (facets != builtin::cubic_segre_facets()) {
    Json got = facets;
    fail_step(4, "facets", "unexpected facet list: " + got.dump());
    return report;
  }
  {
    Json entry = Json::object();
    entry["step"] = 4;
    entry["name"] = "facets";
    entry["ok"] = true;
    entry["facets"] = facets;
    steps.push_back(entry);
  }

  // Step 5: reduced homology of the complex.
  BettiVector betti = reduced_betti(delta, options.field);
  if (betti.reduced(1) != 1 || betti.reduced(0) != 0) {
    fail_step(5, "homology",
              "expected H~0 = 0 and H~1 = 1, got " + betti_json(betti).dump());
    return report;
  }
  {
    Json entry = Json::object();
    entry["step"] = 5;
    entry["name"] = "homology";
    entry["ok"] = true;
    entry["field"] = options.field.to_string();
    entry["betti"] = betti_json(betti);
    steps.push_back(entry);
  }

  // Step 6: depth 2 against Krull dimension 3.
  std::size_t depth = depth_sr(delta, options.field);
  std::size_t krull = std::size_t(delta.dimension() + 1);
  bool cm = is_cohen_macaulay(delta, options.field);
  if (depth != 2 || krull != 3 || cm) {
    std::ostringstream text;
    text << "expected depth 2, dimension 3, not Cohen-Macaulay; got depth "
         << depth << ", dimension " << krull << ", "
         << (cm ? "Cohen-Macaulay" : "not Cohen-Macaulay");
    fail_step(6, "depth", text.str());
    return report;
  }
  {
    Json entry = Json::object();
    entry["step"] = 6;
    entry["name"] = "depth";
    entry["ok"] = true;
    entry["depth"] = depth;
    entry["krull_dimension"] = krull;
    entry["cohen_macaulay"] = cm;
    steps.push_back(entry);
  }

  // Step 7: weight certificate, homogenize, specialize the fresh variable to
  // zero, and recover exactly the initial ideal's generators.
  WeightVector w = find_weight_vector(basis);
  if (!check_weight_certificate(basis, w)) {
    fail_step(7, "homogenization", "weight certificate failed");
    return report;
  }
  RingPtr extended = extend_ring(ctx.ring_p, w, "Z");
  std::vector<Monomial> specialized;
  for (const Polynomial& member : basis.members) {
    Polynomial hom = homogenize_w(member, w, extended);
    Polynomial at_zero = specialize(hom, "Z", 0);
    if (!at_zero.is_monomial()) {
      fail_step(7, "homogenization",
                "specialization is not a monomial: " + at_zero.to_string());
      return report;
    }
    specialized.push_back(at_zero.terms().begin()->first);
  }
  specialized = minimalize_monomials(std::move(specialized));
  std::sort(specialized.begin(), specialized.end(),
            [&](const Monomial& lhs, const Monomial& rhs) {
              return ctx.order_p.greater(lhs, rhs);
            });
  if (specialized != expected) {
    fail_step(7, "homogenization",
              "specialized basis generates the wrong monomial ideal: " +
                  joined(symmetric_difference_strings(specialized, expected,
                                                      ctx.ring_p)));
    return report;
  }
  {
    Json entry = Json::object();
    entry["step"] = 7;
    entry["name"] = "homogenization";
    entry["ok"] = true;
    entry["weights"] = w;
    entry["specialized"] = monomial_strings(specialized, ctx.ring_p);
    steps.push_back(entry);
  }

  // Step 8: the Lyubeznik complex agrees with the nerve of the facet cover up
  // to homology and has one-dimensional first homology.
  SimplicialComplex lyub = lyubeznik_complex_sr(computed, ctx.ring_p);
  SimplicialComplex cover_nerve = nerve(delta.facet_labels());
  BettiVector lyub_betti = reduced_betti(lyub, options.field);
  BettiVector nerve_betti = reduced_betti(cover_nerve, options.field);
  if (lyub_betti.entries != nerve_betti.entries) {
    fail_step(8, "nerve",
              "Lyubeznik complex and facet nerve disagree: " +
                  betti_json(lyub_betti).dump() + " vs " +
                  betti_json(nerve_betti).dump());
    return report;
  }
  if (lyub_betti.reduced(1) != 1) {
    fail_step(8, "nerve",
              "expected H~1 = 1 on the Lyubeznik complex, got " +
                  betti_json(lyub_betti).dump());
    return report;
  }
  {
    Json entry = Json::object();
    entry["step"] = 8;
    entry["name"] = "nerve";
    entry["ok"] = true;
    entry["lyubeznik_facets"] = lyub.facet_labels();
    entry["betti"] = betti_json(lyub_betti);
    steps.push_back(entry);
  }

  report.payload["steps"] = steps;
  return report;
}

namespace {

// Closed-range sample from the engine; bias is irrelevant at these sizes.
std::uint64_t bounded(std::mt19937_64& engine, std::uint64_t lo,
                      std::uint64_t hi) {
  return lo + engine() % (hi - lo + 1);
}

std::vector<Monomial> random_squarefree_generators(std::mt19937_64& engine,
                                                   std::size_t num_variables) {
  std::size_t count = std::size_t(bounded(engine, 0, 3));
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t mask =
        bounded(engine, 1, (std::uint64_t(1) << num_variables) - 1);
    std::vector<std::uint32_t> exponents(num_variables, 0);
    for (std::size_t v = 0; v < num_variables; ++v) {
      if ((mask >> v) & 1) exponents[v] = 1;
    }
    gens.push_back(Monomial(std::move(exponents)));
  }
  return minimalize_monomials(std::move(gens));
}

}  // namespace

Report cmd_verify_segre(const SegreOptions& options) {
  if (options.trials < 1) throw Error("trials must be at least 1");
  if (options.max_a < 1 || options.max_a > 3) {
    throw Error("max_a must lie in 1..3");
  }
  if (options.max_b < 1 || options.max_b > 3) {
    throw Error("max_b must lie in 1..3");
  }

  Report report;
  report.command = "verify segre";
  report.seed = options.seed;
  report.inputs["seed"] = options.seed;
  report.inputs["trials"] = options.trials;
  report.inputs["max_a"] = options.max_a;
  report.inputs["max_b"] = options.max_b;
  report.verdict = Verdict::pass;

  std::mt19937_64 engine(options.seed);
  Json trials = Json::array();
  for (std::uint32_t t = 0; t < options.trials; ++t) {
    std::uint32_t a = std::uint32_t(bounded(engine, 1, options.max_a));
    std::uint32_t b = std::uint32_t(bounded(engine, 1, options.max_b));
    SegreContext ctx = segre_ring(a, b);
    std::vector<Monomial> u = random_squarefree_generators(engine, a + 1);
    std::vector<Monomial> v = random_squarefree_generators(engine, b + 1);
    SegreVerification check = verify_segre_proposition(ctx, u, v);

    Json entry = Json::object();
    entry["trial"] = t;
    entry["a"] = a;
    entry["b"] = b;
    entry["u"] = monomial_strings(u, ctx.ring_a);
    entry["v"] = monomial_strings(v, ctx.ring_b);
    entry["family"] = monomial_strings(check.family_generators, ctx.ring_p);
    entry["oracle"] = monomial_strings(check.oracle_generators, ctx.ring_p);
    entry["generators_match"] = check.generators_match;
    entry["groebner"] = check.basis_check.is_basis;
    trials.push_back(entry);

    if (!check.generators_match) {
      std::ostringstream text;
      text << "trial " << t << ": family generators differ from the oracle: "
           << joined(symmetric_difference_strings(check.family_generators,
                                                  check.oracle_generators,
                                                  ctx.ring_p));
      report.fail_with(text.str());
    }
    if (!check.basis_check.is_basis) {
      std::ostringstream text;
      text << "trial " << t << ": candidate basis fails at pair ("
           << check.basis_check.first << ", " << check.basis_check.second
           << ") with remainder "
           << check.basis_check.remainder->to_string(ctx.order_p);
      report.fail_with(text.str());
    }
  }
  report.payload["trials"] = trials;
  return report;
}

Report cmd_quasi_check() {
  Report report;
  report.command = "quasi-check";
  report.verdict = Verdict::pass;

  MonomialSubalgebra algebra = builtin::veronese_slice();
  const RingPtr& ring = algebra.ring;
  report.inputs["algebra"] = "k[(X,Y,Z)_3] in k[X,Y,Z,W]";
  report.payload["generators"] =
      monomial_strings(algebra.generators, ring);
  if (algebra.generators.size() != 19) {
    std::ostringstream text;
    text << "expected 19 generators, got " << algebra.generators.size();
    report.fail_with(text.str());
  }

  struct Probe {
    std::vector<std::uint32_t> exponents;
    bool expect_member;
  };
  const Probe probes[] = {
      {{1, 1, 1, 0}, true},
      {{1, 1, 1, 3}, true},
      {{1, 1, 1, 6}, true},
      {{0, 0, 0, 3}, false},
  };
  Json memberships = Json::array();
  for (const Probe& probe : probes) {
    Monomial target{probe.exponents};
    MembershipResult result =
        monomial_subalgebra_membership(target, algebra.generators);
    Json entry = Json::object();
    entry["target"] = target.to_string(*ring);
    entry["member"] = result.member;
    if (result.member) {
      entry["multiplicities"] = result.multiplicities;
      if (!check_membership_certificate(target, algebra.generators,
                                        result.multiplicities)) {
        report.fail_with("membership certificate fails for " +
                         target.to_string(*ring));
      }
    }
    memberships.push_back(entry);
    if (result.member != probe.expect_member) {
      std::ostringstream text;
      text << target.to_string(*ring) << " should"
           << (probe.expect_member ? "" : " not") << " be a member";
      report.fail_with(text.str());
    }
  }
  report.payload["memberships"] = memberships;

  std::size_t dim = subalgebra_dim(algebra);
  report.payload["dimension"] = dim;
  if (dim != 4) {
    std::ostringstream text;
    text << "expected dimension 4, got " << dim;
    report.fail_with(text.str());
  }

  const std::vector<std::vector<std::string>> pairs = {
      {"X", "Y"}, {"X", "Z"}, {"Y", "Z"}};
  std::vector<std::size_t> pairwise;
  Json heights = Json::object();
  for (const std::vector<std::string>& pair : pairs) {
    std::size_t height = dim - face_prime_quotient_dim(algebra, pair);
    pairwise.push_back(height);
    heights[pair[0] + "+" + pair[1]] = height;
    if (height != 2) {
      std::ostringstream text;
      text << "height of the " << pair[0] << "," << pair[1]
           << " prime sum is " << height << ", expected 2";
      report.fail_with(text.str());
    }
  }
  std::size_t total = dim - face_prime_quotient_dim(algebra, {"X", "Y", "Z"});
  heights["X+Y+Z"] = total;
  report.payload["heights"] = heights;
  if (total != 4) {
    std::ostringstream text;
    text << "height of the total prime sum is " << total << ", expected 4";
    report.fail_with(text.str());
  }

  LyubeznikShapeVerdict shape = lyubeznik_shape(3, pairwise, total);
  report.payload["height_pattern"] = shape.pass;
  if (!shape.pass) {
    report.fail_with("height pattern violated in clause: " +
                     shape.failing_clause);
  }
  return report;
}

}  // namespace cca::workbench
