#include "leibniz/recheck.hpp"

namespace leibniz {
namespace recheck {

namespace {

// Forward elimination without normalization or canonical ordering.
void eliminate(std::vector<Vec>& rows) {
  std::size_t lead = 0;
  if (rows.empty()) return;
  std::size_t n = rows[0].size();
  for (std::size_t col = 0; col < n && lead < rows.size(); ++col) {
    std::size_t piv = lead;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[lead], rows[piv]);
    for (std::size_t r = lead + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col] / rows[lead][col];
      rows[r].axpy(-factor, rows[lead]);
    }
    ++lead;
  }
  rows.resize(lead);
}

} // namespace

std::size_t rank_gauss(std::vector<Vec> rows) {
  eliminate(rows);
  return rows.size();
}

bool member(const std::vector<Vec>& rows, const Vec& v) {
  if (v.is_zero()) return true;
  std::vector<Vec> work = rows;
  eliminate(work);
  std::size_t base = work.size();
  work.push_back(v);
  eliminate(work);
  return work.size() == base;
}

std::vector<Vec> rows_of(const Matrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

bool ideal_link(const LeibnizAlgebra& ambient, const std::vector<Vec>& inner,
                const std::vector<Vec>& outer) {
  for (const Vec& x : outer)
    for (const Vec& s : inner) {
      if (!member(inner, ambient.product(x, s))) return false;
      if (!member(inner, ambient.product(s, x))) return false;
    }
  return true;
}

bool ideal_chain(const LeibnizAlgebra& ambient, const std::vector<std::vector<Vec>>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!ideal_link(ambient, chain[i], chain[i + 1])) return false;
  return true;
}

bool hom(const LeibnizAlgebra& dom, const LeibnizAlgebra& cod, const Matrix& m) {
  if (m.cols() != dom.dim() || m.rows() != cod.dim()) return false;
  for (std::size_t i = 0; i < dom.dim(); ++i)
    for (std::size_t j = 0; j < dom.dim(); ++j) {
      Vec lhs = m.apply(dom.bracket_basis(i, j));
      Vec rhs = cod.product(m.col(i), m.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool injective(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return rank_gauss(std::move(cols)) == m.cols();
}

bool derivation(const LeibnizAlgebra& a, const Matrix& f) {
  if (f.rows() != a.dim() || f.cols() != a.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = f.apply(a.bracket_basis(i, j));
      Vec rhs = a.product(f.col(i), a.basis_vector(j)) + a.product(a.basis_vector(i), f.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool lie_derivation(const LeibnizAlgebra& a, const Matrix& f) {
  for (std::size_t b = 0; b < a.dim(); ++b) {
    Vec fb = f.col(b);
    for (std::size_t y = 0; y < a.dim(); ++y) {
      Vec sym = a.product(fb, a.basis_vector(y)) + a.product(a.basis_vector(y), fb);
      if (!sym.is_zero()) return false;
    }
  }
  return true;
}

bool escapes(const LeibnizAlgebra& a, const Matrix& f, const std::vector<Vec>& rows) {
  for (const Vec& r : rows)
    if (!member(rows, f.apply(r))) return true;
  (void)a;
  return false;
}

} // namespace recheck
} // namespace leibniz
