#include "leibniz/invariants.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

Subspace derived_subalgebra(const LeibnizAlgebra& a) {
  std::size_t n = a.dim();
  Matrix rows(a.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows.set_row(i * n + j, a.bracket_basis(i, j));
  return Subspace::from_span(rows);
}

bool is_perfect(const LeibnizAlgebra& a) {
  return derived_subalgebra(a).dim() == a.dim();
}

Subspace leibniz_kernel(const LeibnizAlgebra& a) {
  std::size_t n = a.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(a.bracket_basis(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gens.push_back(a.bracket_basis(i, j) + a.bracket_basis(j, i));
  return Subspace::from_span(Matrix::from_rows(a.field(), n, gens));
}

Subspace left_center(const LeibnizAlgebra& a) {
  // Rows indexed by (j, k): sum_i x_i c(i,j,k) = 0.
  std::size_t n = a.dim();
  Matrix m(a.field(), n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) m.at(j * n + k, i) = a.c(i, j, k);
  return null_space(m);
}

Subspace lie_center(const LeibnizAlgebra& a) {
  std::size_t n = a.dim();
  Matrix m(a.field(), n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) m.at(j * n + k, i) = a.c(i, j, k) + a.c(j, i, k);
  return null_space(m);
}

bool center_of_quotient_trivial(const LeibnizAlgebra& a) {
  return !quotient_center_witness(a).has_value();
}

std::optional<Vec> quotient_center_witness(const LeibnizAlgebra& a) {
  QuotientAlgebra q = quotient_algebra(a, leibniz_kernel(a), a.name() + "/leib");
  Subspace z = left_center(q.algebra);
  if (z.dim() == 0) return std::nullopt;
  return z.basis_vector(0);
}

Subspace normalizer(const LeibnizAlgebra& k, const Subspace& s) {
  if (s.ambient_dim() != k.dim()) throw InputError("normalizer: ambient mismatch");
  if (!is_subalgebra(k, s)) throw InputError("normalizer: subspace is not a subalgebra");
  std::size_t n = k.dim();
  Subspace ann = annihilator(s);
  // Constraints: for each basis a_r of s and each constraint c of s,
  // c . [x, a_r] = 0 and c . [a_r, x] = 0, both linear in x.
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Vec ar = s.basis_vector(r);
    for (std::size_t t = 0; t < ann.dim(); ++t) {
      Vec ct = ann.basis_vector(t);
      Vec left(k.field(), n), right(k.field(), n);
      for (std::size_t i = 0; i < n; ++i) {
        left[i] = ct.dot(k.product(k.basis_vector(i), ar));
        right[i] = ct.dot(k.product(ar, k.basis_vector(i)));
      }
      rows.push_back(std::move(left));
      rows.push_back(std::move(right));
    }
  }
  Subspace nrm = null_space(Matrix::from_rows(k.field(), n, rows));
  if (!is_subalgebra(k, nrm))
    throw InternalError("normalizer of " + k.name() + ": linear normalizer set is not product-closed");
  if (!nrm.contains(s)) throw InternalError("normalizer does not contain the subalgebra");
  return nrm;
}

Subspace left_centralizer(const LeibnizAlgebra& k, const Subspace& s) {
  if (s.ambient_dim() != k.dim()) throw InputError("left_centralizer: ambient mismatch");
  std::size_t n = k.dim();
  Matrix m(k.field(), s.dim() * n, n);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Vec ar = s.basis_vector(r);
    for (std::size_t i = 0; i < n; ++i) {
      Vec prod = k.product(k.basis_vector(i), ar);
      for (std::size_t c = 0; c < n; ++c) m.at(r * n + c, i) = prod[c];
    }
  }
  return null_space(m);
}

SubidealResult is_subideal(const LeibnizAlgebra& k, const Subspace& s) {
  if (!is_subalgebra(k, s)) throw InputError("is_subideal: subspace is not a subalgebra");
  std::vector<Subspace> descending;
  descending.push_back(k.full_space());
  for (;;) {
    const Subspace& current = descending.back();
    Subspace next = ideal_closure_within(k, current, s);
    if (next == current) break;
    descending.push_back(std::move(next));
    if (descending.back() == s) break;
  }
  bool ok = descending.back() == s;
  std::vector<Subspace> chain(descending.rbegin(), descending.rend());
  return SubidealResult{ok, std::move(chain)};
}

InvariantReport invariant_report(const LeibnizAlgebra& a) {
  InvariantReport r;
  r.algebra = a.name();
  r.dim = a.dim();
  r.derived = derived_subalgebra(a);
  r.leib = leibniz_kernel(a);
  r.left_center = left_center(a);
  r.lie_center = lie_center(a);
  r.perfect = r.derived.is_full();
  r.lie = is_lie(a);
  r.quotient_center_trivial = center_of_quotient_trivial(a);
  return r;
}

} // namespace leibniz
