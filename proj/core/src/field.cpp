#include "cca/field.hpp"

#include <charconv>

namespace cca {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_reduce(const BigInt& value, std::uint64_t p) {
  BigInt r = value % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return r.convert_to<std::uint64_t>();
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  while (exp > 0) {
    if (exp & 1) acc = mod_mul(acc, base, p);
    base = mod_mul(base, base, p);
    exp >>= 1;
  }
  return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw Error("division by zero in F_" + std::to_string(p));
  return mod_pow(a, p - 2, p);  // Fermat; p is prime
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw Error("field characteristic must be prime, got " + std::to_string(p));
  }
  if (p >= (std::uint64_t{1} << 62)) {
    throw Error("prime characteristic too large");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  std::string_view digits;
  if (text.rfind("Fp=", 0) == 0) {
    digits = text.substr(3);
  } else if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f')) {
    digits = text.substr(1);
  } else {
    throw Error("unrecognized field '" + std::string(text) + "' (expected Q or Fp=<prime>)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error("unrecognized field '" + std::string(text) + "' (expected Q or Fp=<prime>)");
  }
  return prime(p);
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "Fp=" + std::to_string(p_);
}

Scalar Scalar::from_int(const Field& field, long long value) {
  return from_integer(field, BigInt(value));
}

Scalar Scalar::from_integer(const Field& field, const BigInt& value) {
  if (field.is_rationals()) return Scalar(field, BigRational(value), 0);
  return Scalar(field, BigRational(), mod_reduce(value, field.characteristic()));
}

Scalar Scalar::from_fraction(const Field& field, const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("zero denominator in coefficient");
  if (field.is_rationals()) {
    return Scalar(field, BigRational(num, den), 0);
  }
  const std::uint64_t p = field.characteristic();
  const std::uint64_t d = mod_reduce(den, p);
  if (d == 0) {
    throw Error("coefficient denominator not invertible in " + field.to_string());
  }
  return Scalar(field, BigRational(), mod_mul(mod_reduce(num, p), mod_inverse(d, p), p));
}

Scalar Scalar::from_rational(const Field& field, const BigRational& value) {
  if (field.is_rationals()) return Scalar(field, value, 0);
  return from_fraction(field, numerator(value), denominator(value));
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1 % field_.characteristic();
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw Error("field mismatch: " + field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  if (field_.is_rationals()) return Scalar(field_, -rat_, 0);
  const std::uint64_t p = field_.characteristic();
  return Scalar(field_, BigRational(), res_ == 0 ? 0 : p - res_);
}

Scalar Scalar::operator+(const Scalar& other) const {
  require_same_field(other);
  if (field_.is_rationals()) return Scalar(field_, rat_ + other.rat_, 0);
  const std::uint64_t p = field_.characteristic();
  std::uint64_t s = res_ + other.res_;
  if (s >= p) s -= p;
  return Scalar(field_, BigRational(), s);
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
  require_same_field(other);
  if (field_.is_rationals()) return Scalar(field_, rat_ * other.rat_, 0);
  return Scalar(field_, BigRational(), mod_mul(res_, other.res_, field_.characteristic()));
}

Scalar Scalar::operator/(const Scalar& other) const { return *this * other.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero in " + field_.to_string());
  if (field_.is_rationals()) return Scalar(field_, 1 / rat_, 0);
  return Scalar(field_, BigRational(), mod_inverse(res_, field_.characteristic()));
}

bool Scalar::operator==(const Scalar& other) const {
  if (field_ != other.field_) return false;
  return field_.is_rationals() ? rat_ == other.rat_ : res_ == other.res_;
}

const BigRational& Scalar::rational_value() const {
  if (!field_.is_rationals()) throw Error("rational_value on a " + field_.to_string() + " scalar");
  return rat_;
}

std::uint64_t Scalar::residue_value() const {
  if (!field_.is_prime()) throw Error("residue_value on a rational scalar");
  return res_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(res_);
  const BigInt num = numerator(rat_);
  const BigInt den = denominator(rat_);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

}  // namespace cca
