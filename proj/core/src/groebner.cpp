#include "cca/groebner.hpp"

#include <algorithm>
#include <utility>

#include "cca/errors.hpp"

namespace cca {

namespace {

void require_basis_rings(const std::vector<Polynomial>& basis,
                         const MonomialOrder& order) {
  for (const auto& g : basis) {
    require_same_ring(g.ring(), order.ring());
    if (g.is_zero()) throw Error("basis members must be nonzero");
  }
}

}  // namespace

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  require_same_ring(f.ring(), order.ring());
  require_basis_rings(basis, order);
  std::vector<Term> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(g.leading_term(order));

  Polynomial r = f;
  while (!r.is_zero()) {
    bool reduced_once = false;
    for (const Term& t : r.sorted_terms(order)) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!leads[i].monomial.divides(t.monomial)) continue;
        Monomial quotient = leads[i].monomial.divide_into(t.monomial);
        Scalar factor = t.coefficient / leads[i].coefficient;
        r = r - basis[i].times_term(quotient, factor);
        reduced_once = true;
        break;
      }
      if (reduced_once) break;
    }
    if (!reduced_once) break;
  }
  return r;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return normal_form(f, basis.members, basis.order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  require_same_ring(f.ring(), order.ring());
  require_same_ring(g.ring(), order.ring());
  if (f.is_zero() || g.is_zero()) throw Error("s_polynomial of zero input");
  Term lf = f.leading_term(order);
  Term lg = g.leading_term(order);
  Monomial lcm = lf.monomial.lcm_with(lg.monomial);
  Polynomial left =
      f.times_term(lf.monomial.divide_into(lcm), lf.coefficient.inverse());
  Polynomial right =
      g.times_term(lg.monomial.divide_into(lcm), lg.coefficient.inverse());
  return left - right;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t degree;
};

// Normal strategy: smallest lcm total degree, then order-smallest lcm, then
// index pair, so runs are reproducible.
std::size_t select_pair(const std::vector<Pair>& pairs,
                        const MonomialOrder& order) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    const Pair& a = pairs[k];
    const Pair& b = pairs[best];
    if (a.degree != b.degree) {
      if (a.degree < b.degree) best = k;
      continue;
    }
    Cmp c = order.compare(a.lcm, b.lcm);
    if (c == Cmp::less) {
      best = k;
    } else if (c == Cmp::equal &&
               std::pair(a.i, a.j) < std::pair(b.i, b.j)) {
      best = k;
    }
  }
  return best;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis,
                                    const MonomialOrder& order) {
  // Minimalize: drop members whose lead is divisible by another lead; on
  // equal leads keep the earliest.
  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(g.leading_monomial(order));
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (leads[j].divides(leads[i]) &&
          (leads[j] != leads[i] || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (keep[i]) minimal.push_back(basis[i]);
  }

  // Reduce each tail against the others; leads survive because they are
  // pairwise non-dividing.
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial r = others.empty() ? minimal[i]
                                  : normal_form(minimal[i], others, order);
    if (r.is_zero()) throw std::logic_error("minimal basis member reduced to zero");
    reduced.push_back(r.monic(order));
  }

  std::sort(reduced.begin(), reduced.end(),
            [&order](const Polynomial& a, const Polynomial& b) {
              return order.greater(a.leading_monomial(order),
                                   b.leading_monomial(order));
            });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  require_same_ring(ideal.ring(), order.ring());
  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators()) {
    if (!g.is_zero()) basis.push_back(g);
  }
  if (basis.empty()) return GroebnerBasis{order, {}, true};

  std::vector<Pair> pairs;
  auto push_pairs_with = [&](std::size_t j) {
    Monomial lead_j = basis[j].leading_monomial(order);
    for (std::size_t i = 0; i < j; ++i) {
      Monomial lcm = basis[i].leading_monomial(order).lcm_with(lead_j);
      pairs.push_back(Pair{i, j, lcm, lcm.total_degree()});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

  while (!pairs.empty()) {
    std::size_t k = select_pair(pairs, order);
    Pair pair = std::move(pairs[k]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
    if (basis[pair.i].leading_monomial(order).coprime_with(
            basis[pair.j].leading_monomial(order))) {
      continue;
    }
    Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], order);
    Polynomial r = normal_form(s, basis, order);
    if (r.is_zero()) continue;
    basis.push_back(r);
    push_pairs_with(basis.size() - 1);
  }

  return GroebnerBasis{order, interreduce(std::move(basis), order), true};
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& basis) {
  std::vector<Monomial> leads;
  leads.reserve(basis.members.size());
  for (const auto& g : basis.members) {
    leads.push_back(g.leading_monomial(basis.order));
  }
  leads = minimalize_monomials(std::move(leads));
  std::sort(leads.begin(), leads.end(),
            [&basis](const Monomial& a, const Monomial& b) {
              return basis.order.greater(a, b);
            });
  return leads;
}

std::vector<Monomial> initial_ideal(const Ideal& ideal,
                                    const MonomialOrder& order) {
  return initial_ideal(buchberger(ideal, order));
}

GroebnerCheck is_groebner_basis(const std::vector<Polynomial>& gens,
                                const MonomialOrder& order) {
  require_basis_rings(gens, order);
  GroebnerCheck check;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      // Coprime criterion: such S-pairs always reduce to zero.
      if (gens[i].leading_monomial(order).coprime_with(
              gens[j].leading_monomial(order))) {
        continue;
      }
      Polynomial s = s_polynomial(gens[i], gens[j], order);
      Polynomial r = normal_form(s, gens, order);
      if (!r.is_zero()) {
        check.is_basis = false;
        check.first = i;
        check.second = j;
        check.remainder = std::move(r);
        return check;
      }
    }
  }
  return check;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> monomials) {
  std::vector<bool> keep(monomials.size(), true);
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (monomials[j].divides(monomials[i]) &&
          (monomials[j] != monomials[i] || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (keep[i]) out.push_back(std::move(monomials[i]));
  }
  return out;
}

}  // namespace cca
