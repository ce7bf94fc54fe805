#include "cca/weights.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cca/errors.hpp"
#include "cca/field.hpp"

namespace cca {

namespace {

// One inequality sum_i coeffs[i]·w_i ≥ bound.
struct Inequality {
  std::vector<BigRational> coeffs;
  BigRational bound;
};

bool same_inequality(const Inequality& a, const Inequality& b) {
  return a.coeffs == b.coeffs && a.bound == b.bound;
}

// Scales so the first nonzero coefficient (or the bound) has absolute value 1.
void normalize(Inequality& row) {
  BigRational scale = 0;
  for (const auto& c : row.coeffs) {
    if (c != 0) {
      scale = abs(c);
      break;
    }
  }
  if (scale == 0) {
    if (row.bound == 0) return;
    scale = abs(row.bound);
  }
  for (auto& c : row.coeffs) c /= scale;
  row.bound /= scale;
}

void push_unique(std::vector<Inequality>& rows, Inequality row) {
  normalize(row);
  for (const auto& existing : rows) {
    if (same_inequality(existing, row)) return;
  }
  rows.push_back(std::move(row));
}

std::vector<Inequality> collect_constraints(const GroebnerBasis& basis) {
  std::size_t n = basis.ring()->size();
  std::vector<Inequality> rows;
  for (const auto& member : basis.members) {
    Monomial lead = member.leading_monomial(basis.order);
    for (const auto& [mono, coeff] : member.terms()) {
      if (mono == lead) continue;
      Inequality row;
      row.coeffs.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        row.coeffs[i] =
            BigRational(BigInt(lead.exponent(i)) - BigInt(mono.exponent(i)));
      }
      row.bound = 1;
      push_unique(rows, std::move(row));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Inequality row;
    row.coeffs.assign(n, 0);
    row.coeffs[i] = 1;
    row.bound = 0;
    push_unique(rows, std::move(row));
  }
  return rows;
}

}  // namespace

bool check_weight_certificate(const GroebnerBasis& basis,
                              const WeightVector& w) {
  if (w.size() != basis.ring()->size()) return false;
  auto wdeg = [&w](const Monomial& m) {
    __int128 sum = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      sum += static_cast<__int128>(w[i]) * m.exponent(i);
    }
    return sum;
  };
  for (const auto& member : basis.members) {
    Monomial lead = member.leading_monomial(basis.order);
    __int128 dl = wdeg(lead);
    for (const auto& [mono, coeff] : member.terms()) {
      if (mono == lead) continue;
      if (wdeg(mono) >= dl) return false;
    }
  }
  return true;
}

WeightVector find_weight_vector(const GroebnerBasis& basis) {
  if (!basis.reduced) throw Error("weight recovery needs a reduced basis");
  std::size_t n = basis.ring()->size();

  // Fourier-Motzkin elimination of w_{n-1}, ..., w_1; stages[k] holds the
  // system mentioning only w_0..w_k.
  std::vector<std::vector<Inequality>> stages(n);
  stages[n - 1] = collect_constraints(basis);
  for (std::size_t k = n - 1; k > 0; --k) {
    std::vector<Inequality> lowers;
    std::vector<Inequality> uppers;
    std::vector<Inequality> rest;
    for (const auto& row : stages[k]) {
      if (row.coeffs[k] > 0) {
        lowers.push_back(row);
      } else if (row.coeffs[k] < 0) {
        uppers.push_back(row);
      } else {
        rest.push_back(row);
      }
    }
    std::vector<Inequality> next = std::move(rest);
    for (const auto& lo : lowers) {
      for (const auto& up : uppers) {
        // lo: a·w + p·w_k ≥ c (p>0); up: b·w − q·w_k ≥ d (q>0).
        // Combined: (q·a + p·b)·w ≥ q·c + p·d.
        BigRational p = lo.coeffs[k];
        BigRational q = -up.coeffs[k];
        Inequality combined;
        combined.coeffs.assign(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
          combined.coeffs[i] = q * lo.coeffs[i] + p * up.coeffs[i];
        }
        combined.bound = q * lo.bound + p * up.bound;
        push_unique(next, std::move(combined));
      }
    }
    stages[k - 1] = std::move(next);
  }

  // Feasibility of the variable-free residue; guaranteed by reducedness.
  for (const auto& row : stages[0]) {
    bool constant = true;
    if (row.coeffs[0] != 0) constant = false;
    if (constant && row.bound > 0) {
      throw std::logic_error("weight system infeasible for a reduced basis");
    }
  }

  // Back-substitute: each w_k takes its largest lower bound.
  std::vector<BigRational> solution(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    BigRational best = 0;
    bool have = false;
    for (const auto& row : stages[k]) {
      if (row.coeffs[k] <= 0) continue;
      BigRational rhs = row.bound;
      for (std::size_t i = 0; i < k; ++i) rhs -= row.coeffs[i] * solution[i];
      BigRational candidate = rhs / row.coeffs[k];
      if (!have || candidate > best) {
        best = candidate;
        have = true;
      }
    }
    solution[k] = have ? best : BigRational(0);
  }

  // Clear denominators; scaling by a positive integer preserves every
  // constraint of the form (...)·w ≥ 1 and ≥ 0.
  BigInt lcm_den = 1;
  for (const auto& value : solution) {
    BigInt den = denominator(value);
    lcm_den = lcm(lcm_den, den);
  }
  WeightVector w(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    BigInt scaled = numerator(solution[k]) * (lcm_den / denominator(solution[k]));
    if (scaled < 0 || scaled > std::numeric_limits<std::uint64_t>::max()) {
      throw std::logic_error("weight out of range");
    }
    w[k] = static_cast<std::uint64_t>(scaled);
  }

  if (!check_weight_certificate(basis, w)) {
    throw std::logic_error("weight certificate failed re-verification");
  }
  return w;
}

MonomialOrder weight_order_with_tiebreak(const MonomialOrder& lex_order,
                                         const WeightVector& w) {
  std::vector<std::int64_t> weights;
  weights.reserve(w.size());
  for (std::uint64_t value : w) {
    if (value > std::uint64_t(std::numeric_limits<std::int64_t>::max())) {
      throw Error("weight too large");
    }
    weights.push_back(static_cast<std::int64_t>(value));
  }
  std::vector<std::string> priority;
  priority.reserve(lex_order.priority().size());
  for (std::size_t idx : lex_order.priority()) {
    priority.push_back(lex_order.ring()->variable(idx));
  }
  return MonomialOrder::weight(lex_order.ring(), std::move(weights),
                               std::move(priority));
}

RingPtr extend_ring(const RingPtr& ring, const WeightVector& w,
                    const std::string& fresh_name) {
  if (!ring) throw Error("null ring");
  if (w.size() != ring->size()) {
    throw Error("weight vector length does not match variable count");
  }
  if (ring->index_of(fresh_name)) {
    throw Error("ring already has a variable named " + fresh_name);
  }
  std::vector<std::string> names = ring->variables();
  names.push_back(fresh_name);
  std::vector<std::uint64_t> weights(w);
  weights.push_back(1);
  return PolynomialRing::make(std::move(names), ring->field(),
                              std::move(weights));
}

Polynomial homogenize_w(const Polynomial& f, const WeightVector& w,
                        const RingPtr& extended) {
  if (f.is_zero()) throw Error("cannot homogenize the zero polynomial");
  const RingPtr& ring = f.ring();
  if (w.size() != ring->size()) {
    throw Error("weight vector length does not match variable count");
  }
  if (!extended || extended->size() != ring->size() + 1) {
    throw Error("extended ring does not fit");
  }
  auto wdeg = [&w](const Monomial& m) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * m.exponent(i);
    return sum;
  };
  std::uint64_t top = 0;
  for (const auto& [mono, coeff] : f.terms()) top = std::max(top, wdeg(mono));
  Polynomial out = Polynomial::zero(extended);
  for (const auto& [mono, coeff] : f.terms()) {
    std::uint64_t lift = top - wdeg(mono);
    if (lift > std::numeric_limits<std::uint32_t>::max()) {
      throw Error("exponent overflow in homogenization");
    }
    std::vector<std::uint32_t> exps = mono.exponents();
    exps.push_back(static_cast<std::uint32_t>(lift));
    out = out + Polynomial::from_term(extended, Monomial(std::move(exps)),
                                      coeff);
  }
  return out;
}

Polynomial homogenize_w(const Polynomial& f, const WeightVector& w,
                        const std::string& fresh_name) {
  return homogenize_w(f, w, extend_ring(f.ring(), w, fresh_name));
}

Polynomial specialize(const Polynomial& f, const std::string& var, int value) {
  if (value != 0 && value != 1) throw Error("specialize value must be 0 or 1");
  const RingPtr& ring = f.ring();
  auto idx = ring->index_of(var);
  if (!idx) throw Error("unknown variable: " + var);
  if (ring->size() == 1) throw Error("cannot remove the only ring variable");

  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (i != *idx) names.push_back(ring->variable(i));
  }
  RingPtr smaller;
  if (ring->has_weights()) {
    std::vector<std::uint64_t> weights;
    for (std::size_t i = 0; i < ring->size(); ++i) {
      if (i != *idx) weights.push_back(ring->weights()[i]);
    }
    smaller = PolynomialRing::make(std::move(names), ring->field(),
                                   std::move(weights));
  } else {
    smaller = PolynomialRing::make(std::move(names), ring->field());
  }

  Polynomial out = Polynomial::zero(smaller);
  for (const auto& [mono, coeff] : f.terms()) {
    if (value == 0 && mono.exponent(*idx) > 0) continue;
    std::vector<std::uint32_t> exps;
    exps.reserve(smaller->size());
    for (std::size_t i = 0; i < ring->size(); ++i) {
      if (i != *idx) exps.push_back(mono.exponent(i));
    }
    out = out + Polynomial::from_term(smaller, Monomial(std::move(exps)),
                                      coeff);
  }
  return out;
}

}  // namespace cca
