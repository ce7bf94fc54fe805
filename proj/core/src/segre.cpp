#include "cca/segre.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "cca/errors.hpp"
#include "cca/ideal.hpp"

namespace cca {

namespace {

std::string x_name(std::uint32_t a, std::uint32_t b, std::uint32_t i,
                   std::uint32_t j) {
  // Two-digit names X00..X99 when unambiguous; underscore otherwise.
  if (a <= 9 && b <= 9) {
    return "X" + std::to_string(i) + std::to_string(j);
  }
  return "X" + std::to_string(i) + "_" + std::to_string(j);
}

std::optional<std::uint64_t> homogeneous_degree(const Polynomial& f) {
  std::optional<std::uint64_t> degree;
  for (const auto& [mono, coeff] : f.terms()) {
    std::uint64_t d = mono.total_degree();
    if (!degree) {
      degree = d;
    } else if (*degree != d) {
      return std::nullopt;
    }
  }
  return degree;
}

// Index list of a monomial with multiplicity, weakly increasing.
std::vector<std::uint32_t> index_word(const Monomial& m) {
  std::vector<std::uint32_t> word;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::uint32_t e = 0; e < m.exponent(i); ++e) {
      word.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return word;
}

// Pairing rule: zip the weakly increasing row word with the weakly
// increasing column word.
Monomial pair_words(const SegreContext& ctx,
                    const std::vector<std::uint32_t>& rows,
                    const std::vector<std::uint32_t>& cols) {
  if (rows.size() != cols.size()) {
    throw std::logic_error("pairing rule needs equal degrees");
  }
  Monomial out(ctx.ring_p->size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out = out.times(
        Monomial::variable(ctx.ring_p->size(), ctx.x_index(rows[k], cols[k])));
  }
  return out;
}

// Pullback of f·m (f in A, m a monomial of B of matching degree), termwise.
Polynomial pullback(const SegreContext& ctx, const Polynomial& f,
                    const Monomial& partner, bool f_in_a) {
  Polynomial out = Polynomial::zero(ctx.ring_p);
  std::vector<std::uint32_t> partner_word = index_word(partner);
  for (const auto& [mono, coeff] : f.terms()) {
    std::vector<std::uint32_t> word = index_word(mono);
    Monomial image = f_in_a ? pair_words(ctx, word, partner_word)
                            : pair_words(ctx, partner_word, word);
    out = out + Polynomial::from_term(ctx.ring_p, image, coeff);
  }
  return out;
}

void append_pullbacks(const SegreContext& ctx,
                      const std::vector<Polynomial>& gens,
                      const RingPtr& own_ring, const RingPtr& partner_ring,
                      bool gens_in_a, std::vector<Polynomial>& out) {
  for (const auto& f : gens) {
    require_same_ring(f.ring(), own_ring);
    if (f.is_zero()) throw Error("ideal generators must be nonzero");
    auto degree = homogeneous_degree(f);
    if (!degree) throw Error("non-homogeneous generator: " + f.to_string());
    if (*degree > std::numeric_limits<std::uint32_t>::max()) {
      throw Error("generator degree too large");
    }
    for (const Monomial& m : monomials_of_degree(
             partner_ring->size(), static_cast<std::uint32_t>(*degree))) {
      out.push_back(pullback(ctx, f, m, gens_in_a));
    }
  }
}

// Weakly decreasing sequences hi >= s_0 >= ... >= s_len-1 >= 0, in
// lexicographically descending enumeration order.
void weakly_decreasing(std::uint32_t hi, std::size_t len,
                       std::vector<std::uint32_t>& current,
                       std::vector<std::vector<std::uint32_t>>& out) {
  if (current.size() == len) {
    out.push_back(current);
    return;
  }
  std::uint32_t cap = current.empty() ? hi : current.back();
  for (std::uint32_t s = cap + 1; s != 0; --s) {
    current.push_back(s - 1);
    weakly_decreasing(hi, len, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<std::uint32_t>> weakly_decreasing_sequences(
    std::uint32_t hi, std::size_t len) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  weakly_decreasing(hi, len, current, out);
  return out;
}

void require_squarefree(const std::vector<Monomial>& gens,
                        const RingPtr& ring) {
  for (const auto& m : gens) {
    if (m.size() != ring->size()) throw Error("monomial does not fit ring");
    if (!m.is_squarefree()) throw Error("generator is not square-free");
    if (m.is_one()) throw Error("unit generator");
  }
}

// Family (1): substitute Y_t -> X_{t, i_t} over weakly decreasing column
// sequences b >= i_0 >= ... >= i_a >= 0.
std::vector<Monomial> family_one(const SegreContext& ctx,
                                 const std::vector<Monomial>& u) {
  std::vector<Monomial> family;
  for (const auto& mono : u) {
    for (const auto& seq :
         weakly_decreasing_sequences(ctx.b, std::size_t(ctx.a) + 1)) {
      Monomial image(ctx.ring_p->size());
      for (std::uint32_t t = 0; t <= ctx.a; ++t) {
        if (mono.exponent(t) == 0) continue;
        image = image.times(
            Monomial::variable(ctx.ring_p->size(), ctx.x_index(t, seq[t])));
      }
      family.push_back(image);
    }
  }
  return family;
}

// Family (2): substitute Z_t -> X_{j_t, t} over weakly decreasing row
// sequences a >= j_0 >= ... >= j_b >= 0.
std::vector<Monomial> family_two(const SegreContext& ctx,
                                 const std::vector<Monomial>& v) {
  std::vector<Monomial> family;
  for (const auto& mono : v) {
    for (const auto& seq :
         weakly_decreasing_sequences(ctx.a, std::size_t(ctx.b) + 1)) {
      Monomial image(ctx.ring_p->size());
      for (std::uint32_t t = 0; t <= ctx.b; ++t) {
        if (mono.exponent(t) == 0) continue;
        image = image.times(
            Monomial::variable(ctx.ring_p->size(), ctx.x_index(seq[t], t)));
      }
      family.push_back(image);
    }
  }
  return family;
}

// Family (3): X_ij * X_hk for i<h, j<k.
std::vector<Monomial> family_three(const SegreContext& ctx) {
  std::vector<Monomial> family;
  for (std::uint32_t i = 0; i <= ctx.a; ++i) {
    for (std::uint32_t h = i + 1; h <= ctx.a; ++h) {
      for (std::uint32_t j = 0; j <= ctx.b; ++j) {
        for (std::uint32_t k = j + 1; k <= ctx.b; ++k) {
          family.push_back(
              Monomial::variable(ctx.ring_p->size(), ctx.x_index(i, j))
                  .times(Monomial::variable(ctx.ring_p->size(),
                                            ctx.x_index(h, k))));
        }
      }
    }
  }
  return family;
}

}  // namespace

SegreContext segre_ring(std::uint32_t a, std::uint32_t b, Field field) {
  std::vector<std::string> y_names;
  for (std::uint32_t i = 0; i <= a; ++i) y_names.push_back("Y" + std::to_string(i));
  std::vector<std::string> z_names;
  for (std::uint32_t j = 0; j <= b; ++j) z_names.push_back("Z" + std::to_string(j));
  std::vector<std::string> x_names;
  for (std::uint32_t i = 0; i <= a; ++i) {
    for (std::uint32_t j = 0; j <= b; ++j) x_names.push_back(x_name(a, b, i, j));
  }
  // Variable declaration stays row major so x_index(i, j) = i*(b+1)+j, but the
  // lex priority runs column major (X00 > X10 > ... > X0b > ... > Xab): this is
  // the order under which both substitution families lead their reductions and
  // the minors keep their diagonal leads.
  std::vector<std::string> x_priority;
  for (std::uint32_t j = 0; j <= b; ++j) {
    for (std::uint32_t i = 0; i <= a; ++i) x_priority.push_back(x_name(a, b, i, j));
  }
  RingPtr ring_a = PolynomialRing::make(std::move(y_names), field);
  RingPtr ring_b = PolynomialRing::make(std::move(z_names), field);
  RingPtr ring_p = PolynomialRing::make(std::move(x_names), field);
  MonomialOrder order_a = MonomialOrder::lex(ring_a);
  MonomialOrder order_b = MonomialOrder::lex(ring_b);
  MonomialOrder order_p = MonomialOrder::lex(ring_p, std::move(x_priority));
  return SegreContext{a,       b,       std::move(ring_a), std::move(ring_b),
                      std::move(ring_p), std::move(order_a), std::move(order_b),
                      std::move(order_p)};
}

std::vector<Polynomial> segre_two_minors(const SegreContext& ctx) {
  std::vector<Polynomial> minors;
  for (std::uint32_t i = 0; i <= ctx.a; ++i) {
    for (std::uint32_t h = i + 1; h <= ctx.a; ++h) {
      for (std::uint32_t j = 0; j <= ctx.b; ++j) {
        for (std::uint32_t k = j + 1; k <= ctx.b; ++k) {
          Polynomial x_ij = Polynomial::variable(ctx.ring_p, ctx.x_index(i, j));
          Polynomial x_hk = Polynomial::variable(ctx.ring_p, ctx.x_index(h, k));
          Polynomial x_ik = Polynomial::variable(ctx.ring_p, ctx.x_index(i, k));
          Polynomial x_hj = Polynomial::variable(ctx.ring_p, ctx.x_index(h, j));
          minors.push_back(x_ij * x_hk - x_ik * x_hj);
        }
      }
    }
  }
  return minors;
}

std::vector<Polynomial> segre_ideal_generators(
    const SegreContext& ctx, const std::vector<Polynomial>& i_gens,
    const std::vector<Polynomial>& j_gens) {
  std::vector<Polynomial> out = segre_two_minors(ctx);
  append_pullbacks(ctx, i_gens, ctx.ring_a, ctx.ring_b, true, out);
  append_pullbacks(ctx, j_gens, ctx.ring_b, ctx.ring_a, false, out);
  return out;
}

std::vector<Monomial> segre_initial_generators(const SegreContext& ctx,
                                               const std::vector<Monomial>& u,
                                               const std::vector<Monomial>& v) {
  require_squarefree(u, ctx.ring_a);
  require_squarefree(v, ctx.ring_b);
  std::vector<Monomial> family = family_one(ctx, u);
  for (auto& m : family_two(ctx, v)) family.push_back(std::move(m));
  for (auto& m : family_three(ctx)) family.push_back(std::move(m));

  family = minimalize_monomials(std::move(family));
  std::sort(family.begin(), family.end(),
            [&ctx](const Monomial& x, const Monomial& y) {
              return ctx.order_p.greater(x, y);
            });
  return family;
}

std::vector<Polynomial> segre_groebner_candidates(
    const SegreContext& ctx, const std::vector<Monomial>& u,
    const std::vector<Monomial>& v) {
  require_squarefree(u, ctx.ring_a);
  require_squarefree(v, ctx.ring_b);
  // Both substitution families verbatim (duplicates dropped), with the full
  // minors standing in for their initial terms in family (3).
  std::vector<Monomial> monomials = family_one(ctx, u);
  for (auto& m : family_two(ctx, v)) monomials.push_back(std::move(m));
  std::sort(monomials.begin(), monomials.end(), MonomialKeyLess{});
  monomials.erase(std::unique(monomials.begin(), monomials.end()),
                  monomials.end());
  std::vector<Polynomial> out;
  for (const auto& mono : monomials) {
    out.push_back(Polynomial::from_monomial(ctx.ring_p, mono));
  }
  for (auto& minor : segre_two_minors(ctx)) out.push_back(std::move(minor));
  return out;
}

SegreVerification verify_segre_proposition(const SegreContext& ctx,
                                           const std::vector<Monomial>& u,
                                           const std::vector<Monomial>& v) {
  SegreVerification result;
  result.family_generators = segre_initial_generators(ctx, u, v);

  std::vector<Polynomial> i_gens;
  for (const auto& m : u) i_gens.push_back(Polynomial::from_monomial(ctx.ring_a, m));
  std::vector<Polynomial> j_gens;
  for (const auto& m : v) j_gens.push_back(Polynomial::from_monomial(ctx.ring_b, m));
  Ideal segre_ideal(ctx.ring_p, segre_ideal_generators(ctx, i_gens, j_gens));
  result.oracle_generators = initial_ideal(segre_ideal, ctx.order_p);

  result.generators_match =
      result.family_generators == result.oracle_generators;
  result.basis_check =
      is_groebner_basis(segre_groebner_candidates(ctx, u, v), ctx.order_p);
  return result;
}

}  // namespace cca
