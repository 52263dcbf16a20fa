#ifndef LEIBNIZ_VEC_HPP
#define LEIBNIZ_VEC_HPP

#include <cstddef>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

/// Coordinate vector over one field. Carries its field even when empty.
class Vec {
public:
  Vec() : field_(Field::rationals()) {}
  Vec(const Field& f, std::size_t n) : field_(f), e_(n, Scalar::zero(f)) {}
  Vec(const Field& f, std::vector<Scalar> entries);

  static Vec unit(const Field& f, std::size_t n, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t size() const { return e_.size(); }

  const Scalar& operator[](std::size_t i) const { return e_[i]; }
  Scalar& operator[](std::size_t i) { return e_[i]; }

  bool is_zero() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec scaled(const Scalar& c) const;
  /// *this += c * o, skipping work when c or entries are zero.
  void axpy(const Scalar& c, const Vec& o);

  Scalar dot(const Vec& o) const;

  bool operator==(const Vec& o) const;
  bool operator!=(const Vec& o) const { return !(*this == o); }

private:
  Field field_;
  std::vector<Scalar> e_;
};

} // namespace leibniz

#endif
