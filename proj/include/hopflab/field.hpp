#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hopflab/errors.hpp"

namespace hopflab {

// The base field of one computation: the rationals or a prime field GF(p).
struct FieldSpec {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint32_t p = 0;  // modulus, set iff kind == prime

  static FieldSpec rationals() { return FieldSpec{Kind::rational, 0}; }
  static FieldSpec gf(std::uint32_t p);  // validates primality

  bool is_rational() const { return kind == Kind::rational; }
  bool operator==(const FieldSpec&) const = default;
  std::string str() const;
};

// Residue arithmetic mod p, p < 2^31.
inline std::uint32_t gf_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return s >= p ? std::uint32_t(s - p) : std::uint32_t(s);
}
inline std::uint32_t gf_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return std::uint32_t((std::uint64_t(a) * b) % p);
}
std::uint32_t gf_inv(std::uint32_t a, std::uint32_t p);  // throws on 0

// One canonical field element.  Rationals are reduced fractions with positive
// denominator (maintained by GMP); residues live in [0, p).
class Scalar {
 public:
  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long v);
  static Scalar rational(mpq_class v);
  static Scalar residue(std::uint32_t r, const FieldSpec& f);

  // Strict literal parser: accepts canonical text only ("-3/7", "5", residue
  // digits).  Anything else, including unreduced or padded forms, is rejected.
  static Scalar parse(const FieldSpec& f, std::string_view text);

  std::string str() const;
  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  const mpq_class& rat() const { return rat_; }
  std::uint32_t res() const { return res_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;  // throws Error on zero
  bool operator==(const Scalar& o) const;

 private:
  FieldSpec field_;
  mpq_class rat_;
  std::uint32_t res_ = 0;
};

}  // namespace hopflab
