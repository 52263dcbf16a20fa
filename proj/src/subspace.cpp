#include "leibniz/subspace.hpp"

#include <algorithm>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

// Incremental Gauss-Jordan: rows enter one by one, stay fully reduced
// against each other, and dead rows are discarded immediately. The final
// row list sorted by pivot column is the canonical RREF.
struct Echelon {
  std::size_t cols;
  std::vector<Vec> rows;           // mutually reduced, pivot entry 1
  std::vector<std::size_t> pivots; // pivots[i] = pivot column of rows[i]

  explicit Echelon(std::size_t cols_) : cols(cols_) {}

  // Returns true if the row enlarged the span.
  bool insert(Vec v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Scalar& c = v[pivots[i]];
      if (!c.is_zero()) v.axpy(-c, rows[i]);
    }
    std::size_t p = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!v[j].is_zero()) {
        p = j;
        break;
      }
    }
    if (p == cols) return false;
    if (!v[p].is_one()) v = v.scaled(v[p].inverse());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Scalar& c = rows[i][p];
      if (!c.is_zero()) rows[i].axpy(-c, v);
    }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots.begin());
    pivots.insert(pos, p);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
  }

  Matrix to_matrix(const Field& f) const {
    return Matrix::from_rows(f, cols, rows);
  }
};

} // namespace

Matrix rref(const Matrix& m) {
  Echelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(m.row(r));
  return ech.to_matrix(m.field());
}

std::size_t rank(const Matrix& m) {
  return rref(m).rows();
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  require_same_field(m.field(), b.field(), "solve");
  if (b.size() != m.rows()) throw InputError("solve: dimension mismatch");
  // Eliminate on [m | b] and read the particular solution off the pivots.
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Matrix r = rref(aug);
  Vec x(m.field(), m.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t p = 0;
    while (p <= m.cols() && r.at(i, p).is_zero()) ++p;
    if (p == m.cols()) return std::nullopt; // row (0 ... 0 | 1): inconsistent
    x[p] = r.at(i, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse: matrix not square");
  std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  Matrix r = rref(aug);
  if (r.rows() < n) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((i == j && !r.at(i, j).is_one()) || (i != j && !r.at(i, j).is_zero()))
        return std::nullopt; // left block not the identity: singular
      inv.at(i, j) = r.at(i, n + j);
    }
  }
  return inv;
}

Subspace subspace_from_rref(Matrix rref_basis, std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = std::move(rref_basis);
  s.pivots_.clear();
  for (std::size_t i = 0; i < s.basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_dim && s.basis_.at(i, p).is_zero()) ++p;
    s.pivots_.push_back(p);
  }
  return s;
}

Subspace Subspace::zero(const Field& f, std::size_t ambient_dim) {
  return subspace_from_rref(Matrix(f, 0, ambient_dim), ambient_dim);
}

Subspace Subspace::full(const Field& f, std::size_t ambient_dim) {
  return subspace_from_rref(Matrix::identity(f, ambient_dim), ambient_dim);
}

Subspace Subspace::from_span(const Matrix& rows) {
  return subspace_from_rref(rref(rows), rows.cols());
}

Vec Subspace::reduce(const Vec& x) const {
  require_same_field(field(), x.field(), "subspace reduce");
  if (x.size() != ambient_) throw InputError("subspace reduce: ambient mismatch");
  Vec r = x;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& c = r[pivots_[i]];
    if (!c.is_zero()) r.axpy(-c, basis_.row(i));
  }
  return r;
}

bool Subspace::contains(const Vec& x) const {
  return reduce(x).is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("subspace contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& x) const {
  require_same_field(field(), x.field(), "subspace coordinates");
  if (x.size() != ambient_) throw InputError("subspace coordinates: ambient mismatch");
  Vec coeff(field(), dim());
  Vec r = x;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& c = r[pivots_[i]];
    coeff[i] = c;
    if (!c.is_zero()) r.axpy(-c, basis_.row(i));
  }
  if (!r.is_zero()) return std::nullopt;
  return coeff;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace null_space(const Matrix& m) {
  Matrix r = rref(m);
  std::size_t n = m.cols();
  std::vector<std::size_t> piv;
  piv.reserve(r.rows());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t p = 0;
    while (p < n && r.at(i, p).is_zero()) ++p;
    piv.push_back(p);
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.field(), n);
    v[f] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rows(); ++i) v[piv[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::from_span(Matrix::from_rows(m.field(), n, basis));
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same_field(u.field(), v.field(), "subspace sum");
  if (u.ambient_dim() != v.ambient_dim()) throw InputError("subspace sum: ambient mismatch");
  return Subspace::from_span(Matrix::vstack(u.basis(), v.basis()));
}

Subspace annihilator(const Subspace& u) {
  return null_space(u.basis());
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require_same_field(u.field(), v.field(), "subspace intersect");
  if (u.ambient_dim() != v.ambient_dim()) throw InputError("subspace intersect: ambient mismatch");
  Matrix constraints = Matrix::vstack(annihilator(u).basis(), annihilator(v).basis());
  return null_space(constraints);
}

QuotientCoordinates quotient_coordinates(std::size_t ambient_dim, const Subspace& w) {
  if (w.ambient_dim() != ambient_dim) throw InputError("quotient coordinates: ambient mismatch");
  const Field& f = w.field();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : w.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> reps;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) reps.push_back(j);

  std::size_t m = reps.size();
  Matrix proj(f, m, ambient_dim);
  for (std::size_t a = 0; a < m; ++a) proj.at(a, reps[a]) = Scalar::one(f);
  // Pivot column p_r maps to minus the r-th basis row restricted to reps.
  for (std::size_t r = 0; r < w.dim(); ++r) {
    std::size_t p = w.pivots()[r];
    for (std::size_t a = 0; a < m; ++a) proj.at(a, p) = -w.basis().at(r, reps[a]);
  }
  Matrix sect(f, ambient_dim, m);
  for (std::size_t a = 0; a < m; ++a) sect.at(reps[a], a) = Scalar::one(f);
  return QuotientCoordinates{LinearMap(std::move(proj)), LinearMap(std::move(sect)), std::move(reps)};
}

LinearMap LinearMap::compose(const LinearMap& g) const {
  return LinearMap(m_ * g.m_);
}

} // namespace leibniz
