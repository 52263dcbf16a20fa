#ifndef LEIBNIZ_MATRIX_HPP
#define LEIBNIZ_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "leibniz/vec.hpp"

namespace leibniz {

/// Dense row-major matrix of exact scalars over a single field.
/// Zero rows and zero columns are allowed; the field survives emptiness.
class Matrix {
public:
  Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v);

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);

  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;

  /// Matrix-vector product (columns act on coordinates).
  Vec apply(const Vec& x) const;

  /// Commutator a*b - b*a of square matrices.
  static Matrix commutator(const Matrix& a, const Matrix& b);

  static Matrix vstack(const Matrix& top, const Matrix& bottom);

  /// Row-major flattening, used as the coordinate convention for spaces
  /// of linear maps.
  Vec flatten() const;
  static Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols);

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

} // namespace leibniz

#endif
