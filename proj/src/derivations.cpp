#include "leibniz/derivations.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

bool is_derivation(const LeibnizAlgebra& a, const Matrix& f) {
  if (f.rows() != a.dim() || f.cols() != a.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec fei = f.col(i);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = f.apply(a.bracket_basis(i, j));
      Vec rhs = a.product(fei, a.basis_vector(j)) + a.product(a.basis_vector(i), f.col(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Matrix derivation_constraint_matrix(const LeibnizAlgebra& a) {
  // Unknown u_(m*n + l) = F_(m,l), row-major. For each pair (i,j) in
  // lexicographic order, n coordinate equations
  //   sum_l c(i,j,l) F(m,l) - sum_k c(k,j,m) F(k,i) - sum_k c(i,k,m) F(k,j) = 0.
  std::size_t n = a.dim();
  Matrix m(a.field(), n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t block = (i * n + j) * n;
      for (std::size_t mm = 0; mm < n; ++mm) {
        std::size_t row = block + mm;
        for (std::size_t l = 0; l < n; ++l) m.at(row, mm * n + l) += a.c(i, j, l);
        for (std::size_t k = 0; k < n; ++k) {
          m.at(row, k * n + i) -= a.c(k, j, mm);
          m.at(row, k * n + j) -= a.c(i, k, mm);
        }
      }
    }
  return m;
}

namespace {

// Bracket table of a closed space of matrices under the commutator,
// expressed in the coordinates of the given canonical span.
LeibnizAlgebra commutator_table(const std::string& name, const Subspace& flat,
                                const std::vector<Matrix>& basis, const Field& field,
                                std::size_t n) {
  std::size_t d = basis.size();
  std::vector<Scalar> sc(d * d * d, Scalar::zero(field));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Matrix com = Matrix::commutator(basis[x], basis[y]);
      auto coords = flat.coordinates_of(com.flatten());
      if (!coords) throw InternalError(name + ": commutator escaped the span");
      for (std::size_t k = 0; k < d; ++k) sc[(x * d + y) * d + k] = (*coords)[k];
    }
  (void)n;
  return LeibnizAlgebra::from_structure_constants(name, field, d, std::move(sc));
}

std::vector<Matrix> reshape_rows(const Subspace& flat, std::size_t n) {
  std::vector<Matrix> out;
  out.reserve(flat.dim());
  for (std::size_t i = 0; i < flat.dim(); ++i)
    out.push_back(Matrix::unflatten(flat.basis_vector(i), n, n));
  return out;
}

} // namespace

Vec DerivationAlgebra::coordinates_of(const Matrix& f) const {
  auto coords = flat.coordinates_of(f.flatten());
  if (!coords) throw InputError("matrix is not in the derivation span of " + base.name());
  return *coords;
}

Matrix DerivationAlgebra::realize(const Vec& coords) const {
  if (coords.size() != dim()) throw InputError("derivation coordinates: length mismatch");
  Vec flat_vec(base.field(), base.dim() * base.dim());
  for (std::size_t i = 0; i < dim(); ++i) flat_vec.axpy(coords[i], flat.basis_vector(i));
  return Matrix::unflatten(flat_vec, base.dim(), base.dim());
}

DerivationAlgebra derivation_algebra(const LeibnizAlgebra& a) {
  std::size_t n = a.dim();
  Subspace flat = null_space(derivation_constraint_matrix(a));
  std::vector<Matrix> basis = reshape_rows(flat, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!is_derivation(a, basis[i]))
      throw InternalError("derivation solver emitted a non-derivation for " + a.name());
  LeibnizAlgebra bracket =
      commutator_table("D(" + a.name() + ")", flat, basis, a.field(), n);
  if (!is_lie(bracket) || check_leibniz(bracket))
    throw InternalError("commutator table of D(" + a.name() + ") is not a Lie algebra");
  return DerivationAlgebra{a, std::move(flat), std::move(basis), std::move(bracket)};
}

Subspace maps_into(const DerivationAlgebra& d, const Subspace& target) {
  std::size_t n = d.base.dim();
  if (target.ambient_dim() != n) throw InputError("maps_into: target ambient mismatch");
  Subspace ann = annihilator(target);
  // Rows indexed by (column l, constraint t): sum_a u_a (c_t . F_a e_l) = 0.
  Matrix m(d.base.field(), n * ann.dim(), d.dim());
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t t = 0; t < ann.dim(); ++t) {
      Vec ct = ann.basis_vector(t);
      for (std::size_t aa = 0; aa < d.dim(); ++aa)
        m.at(l * ann.dim() + t, aa) = ct.dot(d.basis[aa].col(l));
    }
  return null_space(m);
}

DerivationIdeal lie_derivations(const LeibnizAlgebra& a, const DerivationAlgebra& d) {
  Subspace coords = maps_into(d, lie_center(a));
  if (!is_ideal(d.bracket, coords))
    throw InternalError("Lie-derivations of " + a.name() + " failed the ideal check");
  return DerivationIdeal{DerivationIdealKind::lie_derivations, std::move(coords)};
}

DerivationIdeal ideal_I(const LeibnizAlgebra& a, const DerivationAlgebra& d) {
  Subspace coords = maps_into(d, leibniz_kernel(a));
  if (!is_ideal(d.bracket, coords))
    throw InternalError("derivations into Leib(" + a.name() + ") failed the ideal check");
  return DerivationIdeal{DerivationIdealKind::into_leib, std::move(coords)};
}

LeftMultiplication left_multiplication_algebra(const LeibnizAlgebra& a) {
  std::size_t n = a.dim();
  Matrix rows(a.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i) rows.set_row(i, a.left_mult_basis(i).flatten());
  Subspace flat = Subspace::from_span(rows);
  std::vector<Matrix> basis = reshape_rows(flat, n);
  for (const auto& b : basis)
    if (!is_derivation(a, b))
      throw InternalError("left multiplication of " + a.name() + " is not a derivation");
  LeibnizAlgebra bracket =
      commutator_table("L(" + a.name() + ")", flat, basis, a.field(), n);
  // x -> coordinates of L_x.
  Matrix rep(a.field(), flat.dim(), n);
  for (std::size_t i = 0; i < n; ++i) {
    auto coords = flat.coordinates_of(a.left_mult_basis(i).flatten());
    if (!coords) throw InternalError("L_x escaped its own span");
    for (std::size_t r = 0; r < flat.dim(); ++r) rep.at(r, i) = (*coords)[r];
  }
  DerivationAlgebra alg{a, std::move(flat), std::move(basis), bracket};
  AlgebraHom hom(a, bracket, LinearMap(std::move(rep)));
  return LeftMultiplication{std::move(alg), std::move(hom)};
}

LxIdentityAudit check_Lx_identity(const LeibnizAlgebra& a, const DerivationAlgebra& d) {
  LxIdentityAudit audit{true, 0, std::nullopt};
  for (std::size_t t = 0; t < d.dim(); ++t) {
    const Matrix& f = d.basis[t];
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Matrix lhs = Matrix::commutator(f, a.left_mult_basis(i));
      Matrix rhs = a.left_mult(f.col(i));
      ++audit.checked;
      if (lhs != rhs) {
        audit.ok = false;
        if (!audit.failure) audit.failure = {t, i};
      }
    }
  }
  return audit;
}

QuotientLie quotient_lie_algebra(const DerivationAlgebra& d, const DerivationIdeal& j) {
  QuotientAlgebra q = quotient_algebra(d.bracket, j.coords, d.bracket.name() + "/ideal");
  if (!is_lie(q.algebra))
    throw InternalError("quotient of " + d.bracket.name() + " by a derivation ideal is not Lie");
  AlgebraHom proj(d.bracket, q.algebra, q.projection);
  return QuotientLie{q.algebra, std::move(proj), q.section};
}

namespace {

std::string central_witness_message(const LeibnizAlgebra& a) {
  auto w = quotient_center_witness(a);
  std::string msg = "center of " + a.name() + "/Leib is nontrivial";
  if (w) {
    msg += "; central coset representative (";
    for (std::size_t i = 0; i < w->size(); ++i) msg += (i ? "," : "") + (*w)[i].str();
    msg += ")";
  }
  return msg;
}

} // namespace

LEmbedding embed_L_into_DmodI(const LeibnizAlgebra& a) {
  if (!center_of_quotient_trivial(a)) throw HypothesisError(central_witness_message(a));
  DerivationAlgebra d = derivation_algebra(a);
  DerivationIdeal i = ideal_I(a, d);
  QuotientLie g = quotient_lie_algebra(d, i);
  LeftMultiplication l = left_multiplication_algebra(a);

  std::size_t m = l.algebra.dim();
  Matrix emb(a.field(), g.algebra.dim(), m);
  for (std::size_t s = 0; s < m; ++s) {
    Vec in_d = d.coordinates_of(l.algebra.basis[s]);
    Vec in_g = g.projection.apply(in_d);
    for (std::size_t r = 0; r < g.algebra.dim(); ++r) emb.at(r, s) = in_g[r];
  }
  AlgebraHom hom(l.algebra.bracket, g.algebra, LinearMap(emb));
  HomCertificate cert = certify_hom(hom);
  if (!cert.product_preserving || !cert.injective)
    throw InternalError("L(" + a.name() + ") did not embed into D/I");
  Subspace image = Subspace::from_span(emb.transposed());
  if (!is_ideal(g.algebra, image))
    throw InternalError("image of L(" + a.name() + ") is not an ideal of D/I");
  Subspace centralizer = left_centralizer(g.algebra, image);
  return LEmbedding{std::move(hom), std::move(image), centralizer.dim()};
}

RestrictionEmbedding restriction_embedding(const LeibnizAlgebra& k, const Subspace& a) {
  if (a.ambient_dim() != k.dim()) throw InputError("restriction: ambient mismatch");
  if (auto bad = find_ideal_violation(k, a))
    throw HypothesisError("restriction: subspace is not an ideal of " + k.name() +
                          " (basis pair " + std::to_string(bad->ambient_index) + "," +
                          std::to_string(bad->subspace_index) + ")");
  DerivationAlgebra dk = derivation_algebra(k);
  for (std::size_t t = 0; t < dk.dim(); ++t)
    for (std::size_t r = 0; r < a.dim(); ++r)
      if (!a.contains(dk.basis[t].apply(a.basis_vector(r))))
        throw HypothesisError("restriction: ideal is not characteristic in " + k.name() +
                              "; derivation #" + std::to_string(t) + " moves it");
  Subspace cl = left_centralizer(k, a);
  if (cl.dim() != 0) {
    Vec w = cl.basis_vector(0);
    std::string msg = "restriction: left centralizer of the ideal in " + k.name() +
                      " is nonzero; element (";
    for (std::size_t i = 0; i < w.size(); ++i) msg += (i ? "," : "") + w[i].str();
    throw HypothesisError(msg + ")");
  }

  SubalgebraView sub = subalgebra_as_algebra(k, a, k.name() + "|ideal");
  DerivationAlgebra da = derivation_algebra(sub.algebra);
  std::size_t m = a.dim();
  Matrix phi(k.field(), da.dim(), dk.dim());
  for (std::size_t t = 0; t < dk.dim(); ++t) {
    Matrix restricted(k.field(), m, m);
    for (std::size_t s = 0; s < m; ++s) {
      auto coords = a.coordinates_of(dk.basis[t].apply(a.basis_vector(s)));
      if (!coords) throw InternalError("restriction: image left the ideal");
      for (std::size_t r = 0; r < m; ++r) restricted.at(r, s) = (*coords)[r];
    }
    Vec in_da = da.coordinates_of(restricted);
    for (std::size_t r = 0; r < da.dim(); ++r) phi.at(r, t) = in_da[r];
  }
  AlgebraHom hom(dk.bracket, da.bracket, LinearMap(phi));
  HomCertificate cert = certify_hom(hom);
  if (!cert.product_preserving || !cert.injective)
    throw InternalError("restriction of D(" + k.name() + ") failed to certify as an embedding");
  return RestrictionEmbedding{std::move(hom), std::move(sub), std::move(da)};
}

PhiToDL phi_to_DL(const LeibnizAlgebra& a) {
  if (!center_of_quotient_trivial(a)) throw HypothesisError(central_witness_message(a));
  DerivationAlgebra d = derivation_algebra(a);
  LeftMultiplication l = left_multiplication_algebra(a);
  DerivationAlgebra dl = derivation_algebra(l.algebra.bracket);

  std::size_t m = l.algebra.dim();
  const Matrix& lambda = l.rep.matrix(); // m x n, x -> coords of L_x
  // Section: for each L-basis element pick x with L_x equal to it.
  std::vector<Vec> section;
  for (std::size_t s = 0; s < m; ++s) {
    auto x = solve(lambda, Vec::unit(a.field(), m, s));
    if (!x) throw InternalError("left multiplication representation is not surjective");
    section.push_back(std::move(*x));
  }
  Matrix phi(a.field(), dl.dim(), d.dim());
  for (std::size_t t = 0; t < d.dim(); ++t) {
    Matrix on_l(a.field(), m, m);
    for (std::size_t s = 0; s < m; ++s) {
      Vec img = lambda.apply(d.basis[t].apply(section[s])); // coords of L_{f(x_s)}
      for (std::size_t r = 0; r < m; ++r) on_l.at(r, s) = img[r];
    }
    if (!is_derivation(l.algebra.bracket, on_l))
      throw InternalError("phi(f) is not a derivation of L(" + a.name() + ")");
    Vec coords = dl.coordinates_of(on_l);
    for (std::size_t r = 0; r < dl.dim(); ++r) phi.at(r, t) = coords[r];
  }
  AlgebraHom hom(d.bracket, dl.bracket, LinearMap(phi));
  HomCertificate cert = certify_hom(hom);
  if (!cert.product_preserving)
    throw InternalError("phi: D(" + a.name() + ") -> D(L) is not a homomorphism");
  return PhiToDL{std::move(hom), cert.kernel, std::move(dl), std::move(l)};
}

DerivationTower derivation_tower(const LeibnizAlgebra& a, std::size_t depth) {
  if (!center_of_quotient_trivial(a)) throw HypothesisError(central_witness_message(a));
  DerivationAlgebra d = derivation_algebra(a);
  DerivationIdeal i = ideal_I(a, d);
  QuotientLie g = quotient_lie_algebra(d, i);
  LEmbedding l_emb = embed_L_into_DmodI(a);

  DerivationTower tower;
  {
    TowerLevel level;
    level.algebra = g.algebra;
    level.center_dim = left_center(g.algebra).dim();
    level.centralizer_dim = l_emb.centralizer_dim;
    level.embedding = l_emb.hom.map();
    level.prev_image = l_emb.image;
    if (level.center_dim != 0)
      throw InternalError("center of D(" + a.name() + ")/I is nontrivial");
    tower.levels.push_back(std::move(level));
  }
  for (std::size_t k = 1; k <= depth; ++k) {
    const LeibnizAlgebra& prev = tower.levels.back().algebra;
    DerivationAlgebra dn = derivation_algebra(prev);
    // Adjoint embedding of the previous level.
    Matrix ad(prev.field(), dn.dim(), prev.dim());
    for (std::size_t x = 0; x < prev.dim(); ++x) {
      Vec coords = dn.coordinates_of(prev.left_mult_basis(x));
      for (std::size_t r = 0; r < dn.dim(); ++r) ad.at(r, x) = coords[r];
    }
    AlgebraHom ad_hom(prev, dn.bracket, LinearMap(ad));
    HomCertificate cert = certify_hom(ad_hom);
    if (!cert.product_preserving || !cert.injective)
      throw InternalError("adjoint embedding failed at tower level " + std::to_string(k));
    TowerLevel level;
    level.algebra = dn.bracket;
    level.center_dim = left_center(dn.bracket).dim();
    level.prev_image = Subspace::from_span(ad.transposed());
    level.centralizer_dim = left_centralizer(dn.bracket, level.prev_image).dim();
    level.embedding = ad_hom.map();
    if (level.center_dim != 0)
      throw InternalError("tower level " + std::to_string(k) + " has nontrivial center");
    if (level.centralizer_dim != 0)
      throw InternalError("tower level " + std::to_string(k) +
                          " does not centralize the previous level trivially");
    if (!is_ideal(dn.bracket, level.prev_image))
      throw InternalError("adjoint image is not an ideal at tower level " + std::to_string(k));
    tower.levels.push_back(std::move(level));
  }
  return tower;
}

bool is_complete(const LeibnizAlgebra& lie_algebra) {
  if (!is_lie(lie_algebra)) throw HypothesisError("is_complete expects a Lie algebra");
  if (left_center(lie_algebra).dim() != 0) return false;
  DerivationAlgebra d = derivation_algebra(lie_algebra);
  std::size_t n = lie_algebra.dim();
  Matrix ad_rows(lie_algebra.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i) ad_rows.set_row(i, lie_algebra.left_mult_basis(i).flatten());
  return Subspace::from_span(ad_rows) == d.flat;
}

ISquaredEmbedding I_squared_embedding(const LeibnizAlgebra& a) {
  if (!is_perfect(a)) throw HypothesisError(a.name() + " is not perfect");
  if (!center_of_quotient_trivial(a)) throw HypothesisError(central_witness_message(a));
  DerivationAlgebra d = derivation_algebra(a);
  DerivationIdeal i = ideal_I(a, d);
  QuotientLie g = quotient_lie_algebra(d, i);
  DerivationAlgebra d2 = derivation_algebra(d.bracket);
  DerivationAlgebra dg = derivation_algebra(g.algebra);

  // I is characteristic when the center of A/Leib(A) vanishes, so every
  // second derivation induces a map on the quotient.
  for (std::size_t t = 0; t < d2.dim(); ++t)
    for (std::size_t r = 0; r < i.coords.dim(); ++r)
      if (!i.coords.contains(d2.basis[t].apply(i.coords.basis_vector(r))))
        throw InternalError("I is not invariant under D^2(" + a.name() + ")");

  Subspace i2 = maps_into(d2, i.coords);
  if (!is_ideal(d2.bracket, i2))
    throw InternalError("I^2 failed the ideal check inside D^2(" + a.name() + ")");

  const Matrix& proj = g.projection.matrix();
  const Matrix& sect = g.section.matrix();
  Matrix phi(a.field(), dg.dim(), d2.dim());
  for (std::size_t t = 0; t < d2.dim(); ++t) {
    Matrix induced = proj * d2.basis[t] * sect;
    if (!is_derivation(g.algebra, induced))
      throw InternalError("induced map on D/I is not a derivation");
    Vec coords = dg.coordinates_of(induced);
    for (std::size_t r = 0; r < dg.dim(); ++r) phi.at(r, t) = coords[r];
  }
  AlgebraHom phi_hom(d2.bracket, dg.bracket, LinearMap(phi));
  HomCertificate cert = certify_hom(phi_hom);
  if (!cert.product_preserving)
    throw InternalError("D^2 -> D(D/I) is not a homomorphism");

  QuotientLie q2 = quotient_lie_algebra(d2, DerivationIdeal{DerivationIdealKind::custom, i2});
  Matrix induced = phi * q2.section.matrix();
  AlgebraHom quotient_hom(q2.algebra, dg.bracket, LinearMap(induced));
  HomCertificate qcert = certify_hom(quotient_hom);
  if (!qcert.product_preserving || !qcert.injective)
    throw InternalError("D^2/I^2 failed to embed into D(D/I)");
  return ISquaredEmbedding{std::move(phi_hom), cert.kernel, std::move(i2),
                           std::move(quotient_hom), std::move(dg), std::move(g)};
}

} // namespace leibniz
