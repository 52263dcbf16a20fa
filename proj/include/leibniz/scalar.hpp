#ifndef LEIBNIZ_SCALAR_HPP
#define LEIBNIZ_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "leibniz/field.hpp"

namespace leibniz {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact field element: an arbitrary-precision rational (gcd-reduced,
/// positive denominator -- the backend keeps that canonical) or a residue
/// in [0, p) for a prime field. All arithmetic is exact.
class Scalar {
public:
  Scalar() : field_(Field::rationals()), res_(0) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f);

  /// Embeds a machine integer into the field.
  static Scalar of(long long n, const Field& f);

  static Scalar from_rational(Rational q);
  static Scalar from_residue(std::uint64_t r, const Field& f);

  /// Parses "-3/2", "7", "0" over the rationals, or a decimal residue
  /// (reduced mod p on ingest) over a prime field.
  static Scalar parse(const std::string& s, const Field& f);

  /// Canonical string: gcd-reduced, denominator omitted when 1 and always
  /// positive; residues as plain decimal in [0, p).
  std::string str() const;

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const Rational& rational_value() const;
  std::uint32_t residue_value() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
  explicit Scalar(const Field& f) : field_(f), res_(0) {}

  Field field_;
  Rational rat_;       // payload over the rationals
  std::uint32_t res_ = 0; // payload over GF(p), kept in [0, p)
};

} // namespace leibniz

#endif
