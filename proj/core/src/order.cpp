#include "cca/order.hpp"

#include <numeric>
#include <sstream>
#include <vector>

#include "cca/errors.hpp"

namespace cca {

namespace {

std::vector<std::size_t> resolve_priority(const RingPtr& ring,
                                          const std::vector<std::string>& names) {
  if (!ring) throw Error("null ring");
  std::vector<std::size_t> priority;
  priority.reserve(names.size());
  std::vector<bool> used(ring->size(), false);
  for (const auto& name : names) {
    auto idx = ring->index_of(name);
    if (!idx) throw Error("unknown variable in order: " + name);
    if (used[*idx]) throw Error("variable repeated in order: " + name);
    used[*idx] = true;
    priority.push_back(*idx);
  }
  if (priority.size() != ring->size()) {
    throw Error("order must list every ring variable");
  }
  return priority;
}

std::vector<std::size_t> declared_priority(const RingPtr& ring) {
  if (!ring) throw Error("null ring");
  std::vector<std::size_t> priority(ring->size());
  std::iota(priority.begin(), priority.end(), 0);
  return priority;
}

}  // namespace

MonomialOrder::MonomialOrder(RingPtr ring, std::vector<std::int64_t> weights,
                             std::vector<std::size_t> priority)
    : ring_(std::move(ring)),
      weights_(std::move(weights)),
      priority_(std::move(priority)) {}

MonomialOrder MonomialOrder::lex(RingPtr ring,
                                 std::vector<std::string> priority) {
  auto idx = resolve_priority(ring, priority);
  return MonomialOrder(std::move(ring), {}, std::move(idx));
}

MonomialOrder MonomialOrder::lex(RingPtr ring) {
  auto idx = declared_priority(ring);
  return MonomialOrder(std::move(ring), {}, std::move(idx));
}

MonomialOrder MonomialOrder::weight(RingPtr ring,
                                    std::vector<std::int64_t> weights,
                                    std::vector<std::string> lex_priority) {
  if (!ring) throw Error("null ring");
  if (weights.size() != ring->size()) {
    throw Error("weight vector length does not match variable count");
  }
  auto idx = resolve_priority(ring, lex_priority);
  return MonomialOrder(std::move(ring), std::move(weights), std::move(idx));
}

MonomialOrder MonomialOrder::weight(RingPtr ring,
                                    std::vector<std::int64_t> weights) {
  if (!ring) throw Error("null ring");
  if (weights.size() != ring->size()) {
    throw Error("weight vector length does not match variable count");
  }
  auto idx = declared_priority(ring);
  return MonomialOrder(std::move(ring), std::move(weights), std::move(idx));
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != ring_->size() || b.size() != ring_->size()) {
    throw Error("monomial does not fit ring");
  }
  if (!weights_.empty()) {
    // Exponents are u32 and weights i64, so the dot products fit in __int128.
    __int128 wa = 0;
    __int128 wb = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      wa += static_cast<__int128>(weights_[i]) * a.exponent(i);
      wb += static_cast<__int128>(weights_[i]) * b.exponent(i);
    }
    if (wa < wb) return Cmp::less;
    if (wa > wb) return Cmp::greater;
  }
  for (std::size_t idx : priority_) {
    std::uint32_t ea = a.exponent(idx);
    std::uint32_t eb = b.exponent(idx);
    if (ea < eb) return Cmp::less;
    if (ea > eb) return Cmp::greater;
  }
  return Cmp::equal;
}

std::string MonomialOrder::to_string() const {
  std::ostringstream out;
  if (!weights_.empty()) {
    out << "weight ";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (i > 0) out << ",";
      out << weights_[i];
    }
    out << " lex ";
  } else {
    out << "lex ";
  }
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (i > 0) out << ">";
    out << ring_->variable(priority_[i]);
  }
  return out.str();
}

}  // namespace cca
