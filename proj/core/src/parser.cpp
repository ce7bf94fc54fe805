#include "cca/parser.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "cca/errors.hpp"

namespace cca {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const std::string& text, RingPtr ring)
      : text_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial result = Polynomial::zero(ring_);
    skip_space();
    if (at_end()) throw Error("malformed syntax: empty expression");
    bool negative = consume_sign(true);
    result = result + parse_term(negative);
    skip_space();
    while (!at_end()) {
      bool minus = consume_sign(false);
      result = result + parse_term(minus);
      skip_space();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  // Leading sign is optional; between terms a sign is required.
  bool consume_sign(bool optional) {
    skip_space();
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      bool minus = peek() == '-';
      ++pos_;
      return minus;
    }
    if (!optional) {
      throw Error("malformed syntax: expected + or - between terms");
    }
    return false;
  }

  BigInt parse_integer() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (pos_ == start) throw Error("malformed syntax: expected integer");
    return BigInt(text_.substr(start, pos_ - start));
  }

  std::uint32_t parse_exponent() {
    BigInt value = parse_integer();
    if (value > std::numeric_limits<std::uint32_t>::max()) {
      throw Error("exponent too large");
    }
    return static_cast<std::uint32_t>(value);
  }

  std::string parse_identifier() {
    skip_space();
    std::size_t start = pos_;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
      throw Error("malformed syntax: expected variable name");
    }
    ++pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  Scalar parse_coefficient() {
    BigInt numerator = parse_integer();
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      BigInt denominator = parse_integer();
      try {
        return Scalar::from_fraction(ring_->field(), numerator, denominator);
      } catch (const Error&) {
        throw Error("coefficient not representable in the field: " +
                    numerator.str() + "/" + denominator.str());
      }
    }
    return Scalar::from_integer(ring_->field(), numerator);
  }

  Polynomial parse_term(bool negative) {
    skip_space();
    if (at_end()) throw Error("malformed syntax: missing term");
    Scalar coeff = Scalar::one(ring_->field());
    Monomial mono(ring_->size());
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      saw_factor = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        mono = parse_powers();
      }
    } else {
      mono = parse_powers();
      saw_factor = true;
    }
    if (!saw_factor) throw Error("malformed syntax: empty term");
    if (negative) coeff = -coeff;
    return Polynomial::from_term(ring_, mono, coeff);
  }

  Monomial parse_powers() {
    Monomial mono(ring_->size());
    while (true) {
      mono = mono.times(parse_power());
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return mono;
  }

  Monomial parse_power() {
    std::string name = parse_identifier();
    auto idx = ring_->index_of(name);
    if (!idx) throw Error("unknown variable: " + name);
    std::uint32_t exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      exponent = parse_exponent();
    }
    std::vector<std::uint32_t> exps(ring_->size(), 0);
    exps[*idx] = exponent;
    return Monomial(std::move(exps));
  }

  const std::string& text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  if (!ring) throw Error("null ring");
  return ExpressionParser(text, ring).parse();
}

}  // namespace cca
