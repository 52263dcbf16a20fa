#ifndef LEIBNIZ_FIELD_HPP
#define LEIBNIZ_FIELD_HPP

#include <cstdint>
#include <string>

#include "leibniz/errors.hpp"

namespace leibniz {

enum class FieldKind { rational, prime };

/// Ground field descriptor: the rationals, or a prime field GF(p) with
/// p < 2^31 so residues fit a single word.
class Field {
public:
  Field() : kind_(FieldKind::rational), p_(0) {}

  static Field rationals() { return Field(); }

  static Field prime(std::uint32_t p);

  FieldKind kind() const { return kind_; }
  bool is_rational() const { return kind_ == FieldKind::rational; }
  bool is_prime() const { return kind_ == FieldKind::prime; }

  /// The prime p; only meaningful for prime fields.
  std::uint32_t p() const { return p_; }

  /// 0 for the rationals, p for GF(p).
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string str() const;

private:
  FieldKind kind_;
  std::uint32_t p_;
};

/// Throws InputError unless a and b describe the same field.
void require_same_field(const Field& a, const Field& b, const char* where);

} // namespace leibniz

#endif
