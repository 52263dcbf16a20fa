#include "leibniz/scalar.hpp"

#include <cstdlib>

namespace leibniz {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Inverse of a mod p via extended Euclid; a in [1, p).
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw InputError("element has no inverse mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

} // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw InputError("prime fields restricted to p < 2^31");
  if (!is_prime_u32(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  Field f;
  f.kind_ = FieldKind::prime;
  f.p_ = p;
  return f;
}

std::string Field::str() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

void require_same_field(const Field& a, const Field& b, const char* where) {
  if (a != b)
    throw InputError(std::string(where) + ": mixed fields " + a.str() + " and " + b.str());
}

Scalar Scalar::one(const Field& f) {
  Scalar s(f);
  if (f.is_rational())
    s.rat_ = 1;
  else
    s.res_ = 1 % f.p();
  return s;
}

Scalar Scalar::of(long long n, const Field& f) {
  Scalar s(f);
  if (f.is_rational()) {
    s.rat_ = n;
  } else {
    long long r = n % static_cast<long long>(f.p());
    if (r < 0) r += f.p();
    s.res_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(Rational q) {
  Scalar s(Field::rationals());
  s.rat_ = std::move(q);
  return s;
}

Scalar Scalar::from_residue(std::uint64_t r, const Field& f) {
  if (!f.is_prime()) throw InputError("residue scalar requires a prime field");
  Scalar s(f);
  s.res_ = static_cast<std::uint32_t>(r % f.p());
  return s;
}

Scalar Scalar::parse(const std::string& s, const Field& f) {
  if (s.empty()) throw InputError("empty scalar literal");
  if (f.is_rational()) {
    auto check_int = [&](const std::string& part) {
      if (part.empty()) throw InputError("bad rational literal '" + s + "'");
      std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
      if (start == part.size()) throw InputError("bad rational literal '" + s + "'");
      for (std::size_t i = start; i < part.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(part[i])))
          throw InputError("bad rational literal '" + s + "'");
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      check_int(s);
      return from_rational(Rational(BigInt(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt d(den);
    if (d == 0) throw InputError("zero denominator in '" + s + "'");
    return from_rational(Rational(BigInt(num), d));
  }
  // Prime field: optional sign + decimal digits, reduced mod p.
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InputError("bad residue literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InputError("bad residue literal '" + s + "'");
  BigInt v(s);
  BigInt p(f.p());
  BigInt r = v % p;
  if (r < 0) r += p;
  return from_residue(r.convert_to<std::uint64_t>(), f);
}

std::string Scalar::str() const {
  if (field_.is_rational()) {
    std::string out = numerator(rat_).str();
    if (denominator(rat_) != 1) out += "/" + denominator(rat_).str();
    return out;
  }
  return std::to_string(res_);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1 % field_.p();
}

const Rational& Scalar::rational_value() const {
  if (!field_.is_rational()) throw InputError("scalar is not rational");
  return rat_;
}

std::uint32_t Scalar::residue_value() const {
  if (!field_.is_prime()) throw InputError("scalar is not a prime-field residue");
  return res_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(field_, o.field_, "scalar +");
  if (field_.is_rational()) {
    rat_ += o.rat_;
  } else {
    std::uint64_t v = static_cast<std::uint64_t>(res_) + o.res_;
    res_ = static_cast<std::uint32_t>(v % field_.p());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(field_, o.field_, "scalar -");
  if (field_.is_rational()) {
    rat_ -= o.rat_;
  } else {
    std::uint64_t v = static_cast<std::uint64_t>(res_) + field_.p() - o.res_;
    res_ = static_cast<std::uint32_t>(v % field_.p());
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(field_, o.field_, "scalar *");
  if (field_.is_rational()) {
    rat_ *= o.rat_;
  } else {
    std::uint64_t v = static_cast<std::uint64_t>(res_) * o.res_;
    res_ = static_cast<std::uint32_t>(v % field_.p());
  }
  return *this;
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    r.rat_ = -r.rat_;
  } else if (r.res_ != 0) {
    r.res_ = field_.p() - r.res_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  Scalar r = *this;
  if (field_.is_rational())
    r.rat_ = 1 / rat_;
  else
    r.res_ = mod_inverse(res_, field_.p());
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

} // namespace leibniz
