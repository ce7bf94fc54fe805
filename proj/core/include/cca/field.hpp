#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "cca/errors.hpp"

namespace cca {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Coefficient field descriptor: the rationals, or Z/p for a prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  // Accepts "Q", "Fp=<p>" and the shorthand "F<p>".
  static Field parse(std::string_view text);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const Field& other) const { return p_ == other.p_; }
  bool operator!=(const Field& other) const { return p_ != other.p_; }

  std::string to_string() const;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 encodes Q
};

// An element of a Field. Rationals are kept in lowest terms with positive
// denominator; residues lie in [0, p).
class Scalar {
 public:
  static Scalar zero(const Field& field) { return from_int(field, 0); }
  static Scalar one(const Field& field) { return from_int(field, 1); }
  static Scalar from_int(const Field& field, long long value);
  static Scalar from_integer(const Field& field, const BigInt& value);
  // den must be nonzero; in Z/p it must additionally be a unit.
  static Scalar from_fraction(const Field& field, const BigInt& num, const BigInt& den);
  static Scalar from_rational(const Field& field, const BigRational& value);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar inverse() const;

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  // Only meaningful over Q.
  const BigRational& rational_value() const;
  // Only meaningful over Z/p.
  std::uint64_t residue_value() const;

  // "3", "-1/2" over Q; the canonical residue in [0, p) over Z/p.
  std::string to_string() const;

 private:
  Scalar(const Field& field, BigRational rat, std::uint64_t res)
      : field_(field), rat_(std::move(rat)), res_(res) {}

  void require_same_field(const Scalar& other) const;

  Field field_;
  BigRational rat_;        // valid over Q
  std::uint64_t res_ = 0;  // valid over Z/p
};

}  // namespace cca
