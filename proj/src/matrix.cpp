#include "leibniz/matrix.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

Vec::Vec(const Field& f, std::vector<Scalar> entries) : field_(f), e_(std::move(entries)) {
  for (const auto& s : e_) require_same_field(field_, s.field(), "vector entries");
}

Vec Vec::unit(const Field& f, std::size_t n, std::size_t i) {
  Vec v(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool Vec::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Vec Vec::operator+(const Vec& o) const {
  require_same_field(field_, o.field_, "vector +");
  if (size() != o.size()) throw InputError("vector + : length mismatch");
  Vec r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  require_same_field(field_, o.field_, "vector -");
  if (size() != o.size()) throw InputError("vector - : length mismatch");
  Vec r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Vec Vec::scaled(const Scalar& c) const {
  Vec r = *this;
  for (auto& s : r.e_) s *= c;
  return r;
}

void Vec::axpy(const Scalar& c, const Vec& o) {
  if (size() != o.size()) throw InputError("axpy: length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!o.e_[i].is_zero()) e_[i] += c * o.e_[i];
  }
}

Scalar Vec::dot(const Vec& o) const {
  require_same_field(field_, o.field_, "dot");
  if (size() != o.size()) throw InputError("dot: length mismatch");
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!e_[i].is_zero() && !o.e_[i].is_zero()) acc += e_[i] * o.e_[i];
  }
  return acc;
}

bool Vec::operator==(const Vec& o) const {
  return field_ == o.field_ && e_ == o.e_;
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
  require_same_field(field_, v.field(), "matrix entry");
  e_[r * cols_ + c] = std::move(v);
}

Vec Matrix::row(std::size_t r) const {
  Vec v(field_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  require_same_field(field_, v.field(), "matrix row");
  if (v.size() != cols_) throw InputError("set_row: length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) e_[r * cols_ + c] = v[c];
}

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(field_, o.field_, "matrix *");
  if (cols_ != o.rows_) throw InputError("matrix * : shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(field_, o.field_, "matrix +");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix + : shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(field_, o.field_, "matrix - ");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix - : shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& s : r.e_) s *= c;
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  require_same_field(field_, x.field(), "matrix apply");
  if (x.size() != cols_) throw InputError("matrix apply: dimension mismatch");
  Vec y(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) y[i] += a * x[j];
    }
  }
  return y;
}

Matrix Matrix::commutator(const Matrix& a, const Matrix& b) {
  return a * b - b * a;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top.field_, bottom.field_, "vstack");
  if (top.cols_ != bottom.cols_) throw InputError("vstack: column mismatch");
  Matrix r(top.field_, top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t i = 0; i < top.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) r.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) r.at(top.rows_ + i, j) = bottom.at(i, j);
  return r;
}

Vec Matrix::flatten() const {
  Vec v(field_, rows_ * cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) v[i] = e_[i];
  return v;
}

Matrix Matrix::unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw InputError("unflatten: size mismatch");
  Matrix m(v.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

} // namespace leibniz
