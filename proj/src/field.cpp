#include "hopflab/field.hpp"

#include <cctype>

namespace hopflab {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// digits with no leading zero (single "0" allowed)
bool canonical_digits(std::string_view s) {
  if (s.empty()) return false;
  if (s.size() > 1 && s[0] == '0') return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::gf(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw Error("modulus " + std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec{Kind::prime, p};
}

std::string FieldSpec::str() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(p) + ")";
}

std::uint32_t gf_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error("division by zero in GF(" + std::to_string(p) + ")");
  // extended Euclid
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    std::int64_t q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (t < 0) t += p;
  return std::uint32_t(t);
}

Scalar Scalar::from_int(const FieldSpec& f, long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.rat_ = mpq_class(v);
  } else {
    long m = v % long(f.p);
    if (m < 0) m += f.p;
    s.res_ = std::uint32_t(m);
  }
  return s;
}

Scalar Scalar::rational(mpq_class v) {
  Scalar s;
  s.field_ = FieldSpec::rationals();
  v.canonicalize();
  s.rat_ = std::move(v);
  return s;
}

Scalar Scalar::residue(std::uint32_t r, const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  s.res_ = r % f.p;
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  const std::string t(text);
  if (f.is_rational()) {
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      num = text.substr(0, slash);
      den = text.substr(slash + 1);
    }
    std::string_view mag = num;
    bool neg = !num.empty() && num[0] == '-';
    if (neg) mag = num.substr(1);
    if (!canonical_digits(mag)) throw Error("bad rational literal '" + t + "'");
    if (neg && mag == "0") throw Error("bad rational literal '" + t + "'");
    mpq_class v(std::string(num), 10);
    if (!den.empty() || text.find('/') != std::string_view::npos) {
      if (!canonical_digits(den) || den == "0" || den == "1")
        throw Error("bad rational literal '" + t + "'");
      v = mpq_class(std::string(num) + "/" + std::string(den), 10);
      mpq_class reduced = v;
      reduced.canonicalize();
      if (cmp(reduced.get_den(), mpz_class(std::string(den), 10)) != 0)
        throw Error("non-canonical rational literal '" + t + "'");
      v = reduced;
    }
    v.canonicalize();
    return rational(v);
  }
  if (!canonical_digits(text)) throw Error("bad residue literal '" + t + "'");
  mpz_class v(t, 10);
  if (v >= f.p) throw Error("residue literal '" + t + "' out of range for " + f.str());
  return residue(std::uint32_t(v.get_ui()), f);
}

std::string Scalar::str() const {
  if (field_.is_rational()) return rat_.get_str();
  return std::to_string(res_);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

namespace {
void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw Error("field mismatch: " + a.str() + " vs " + b.str());
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(field_, o.field_);
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ += o.rat_;
  else
    s.res_ = gf_add(res_, o.res_, field_.p);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(field_, o.field_);
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ -= o.rat_;
  else
    s.res_ = gf_sub(res_, o.res_, field_.p);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(field_, o.field_);
  Scalar s = *this;
  if (field_.is_rational())
    s.rat_ *= o.rat_;
  else
    s.res_ = gf_mul(res_, o.res_, field_.p);
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    if (rat_ == 0) throw Error("division by zero in QQ");
    s.rat_ = 1 / rat_;
  } else {
    s.res_ = gf_inv(res_, field_.p);
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

}  // namespace hopflab
