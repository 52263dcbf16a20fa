#include "leibniz/constructions.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

Matrix Representation::act(const Vec& x) const {
  Matrix m(lie.field(), module_dim, module_dim);
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    if (x[i].is_zero()) continue;
    m = m + action[i].scaled(x[i]);
  }
  return m;
}

std::optional<RepresentationViolation> certify_representation(const Representation& rep) {
  if (rep.action.size() != rep.lie.dim())
    throw InputError("representation: one action matrix per basis vector required");
  for (const auto& m : rep.action)
    if (m.rows() != rep.module_dim || m.cols() != rep.module_dim)
      throw InputError("representation: action matrix shape mismatch");
  if (check_leibniz(rep.lie) || !is_lie(rep.lie))
    throw InputError("representation: underlying algebra " + rep.lie.name() + " is not a Lie algebra");
  for (std::size_t i = 0; i < rep.lie.dim(); ++i)
    for (std::size_t j = 0; j < rep.lie.dim(); ++j) {
      Matrix lhs = rep.act(rep.lie.bracket_basis(i, j));
      Matrix rhs = Matrix::commutator(rep.action[i], rep.action[j]);
      if (lhs != rhs) return RepresentationViolation{i, j};
    }
  return std::nullopt;
}

Holomorph hol(const LeibnizAlgebra& a) {
  DerivationAlgebra der = derivation_algebra(a);
  std::size_t n = a.dim(), d = der.dim(), t = n + d;
  const Field& f = a.field();
  std::vector<Scalar> sc(t * t * t, Scalar::zero(f));
  auto put = [&](std::size_t i, std::size_t j, const Vec& v, std::size_t offset) {
    for (std::size_t k = 0; k < v.size(); ++k) sc[(i * t + j) * t + (offset + k)] = v[k];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) put(i, j, a.bracket_basis(i, j), 0);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix li = a.left_mult_basis(i);
    for (std::size_t b = 0; b < d; ++b)
      put(i, n + b, der.coordinates_of(Matrix::commutator(li, der.basis[b])), n);
  }
  for (std::size_t aa = 0; aa < d; ++aa) {
    for (std::size_t j = 0; j < n; ++j) put(n + aa, j, der.basis[aa].col(j), 0);
    for (std::size_t b = 0; b < d; ++b)
      put(n + aa, n + b, der.coordinates_of(Matrix::commutator(der.basis[aa], der.basis[b])), n);
  }
  LeibnizAlgebra h = LeibnizAlgebra::from_structure_constants("hol(" + a.name() + ")", f, t, std::move(sc));
  if (auto bad = check_leibniz(h))
    throw InternalError("hol(" + a.name() + ") violates the Leibniz identity at (" +
                        std::to_string(bad->i) + "," + std::to_string(bad->j) + "," +
                        std::to_string(bad->k) + ")");
  Matrix inc(f, t, n);
  for (std::size_t i = 0; i < n; ++i) inc.at(i, i) = Scalar::one(f);
  Subspace a_comp = Subspace::from_span(inc.transposed());
  bool a_ideal = is_ideal(h, a_comp);
  return Holomorph{std::move(h), LinearMap(std::move(inc)), d, a_ideal};
}

LieHolomorph hol_lie(const LeibnizAlgebra& a) {
  DerivationAlgebra der = derivation_algebra(a);
  DerivationIdeal dlie = lie_derivations(a, der);
  std::size_t n = a.dim(), d = dlie.coords.dim(), t = n + d;
  const Field& f = a.field();
  // Matrices of the Lie-derivation basis, canonical in D coordinates.
  std::vector<Matrix> g;
  for (std::size_t b = 0; b < d; ++b) g.push_back(der.realize(dlie.coords.basis_vector(b)));
  auto in_dlie = [&](const Matrix& m) {
    auto c = dlie.coords.coordinates_of(der.coordinates_of(m));
    if (!c) throw InternalError("hol_lie: commutator escaped the Lie-derivation ideal");
    return *c;
  };
  std::vector<Scalar> sc(t * t * t, Scalar::zero(f));
  auto put = [&](std::size_t i, std::size_t j, const Vec& v, std::size_t offset) {
    for (std::size_t k = 0; k < v.size(); ++k) sc[(i * t + j) * t + (offset + k)] = v[k];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) put(i, j, a.bracket_basis(i, j), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < d; ++b) {
      Vec v(f, n);
      v.axpy(-Scalar::one(f), g[b].col(i)); // [(x,0),(0,g)] = (-g(x), 0)
      put(i, n + b, v, 0);
    }
  for (std::size_t aa = 0; aa < d; ++aa) {
    for (std::size_t j = 0; j < n; ++j) put(n + aa, j, g[aa].col(j), 0); // (f(y), 0)
    for (std::size_t b = 0; b < d; ++b)
      put(n + aa, n + b, in_dlie(Matrix::commutator(g[aa], g[b])), n);
  }
  LeibnizAlgebra h =
      LeibnizAlgebra::from_structure_constants("hol_lie(" + a.name() + ")", f, t, std::move(sc));
  if (auto bad = check_leibniz(h))
    throw InternalError("hol_lie(" + a.name() + ") violates the Leibniz identity at (" +
                        std::to_string(bad->i) + "," + std::to_string(bad->j) + "," +
                        std::to_string(bad->k) + ")");
  Matrix inc(f, t, n);
  for (std::size_t i = 0; i < n; ++i) inc.at(i, i) = Scalar::one(f);
  Subspace a_comp = Subspace::from_span(inc.transposed());
  if (!is_ideal(h, a_comp))
    throw InternalError("A component is not an ideal of hol_lie(" + a.name() + ")");
  AlgebraHom emb(a, h, LinearMap(std::move(inc)));
  HomCertificate cert = certify_hom(emb);
  if (!cert.product_preserving || !cert.injective)
    throw InternalError("embedding of " + a.name() + " into its Lie holomorph failed");
  return LieHolomorph{std::move(h), std::move(emb), std::move(a_comp), d};
}

LeibnizAlgebra hemisemidirect(const Representation& rep, const std::string& name) {
  if (!rep.lie.field().is_rational())
    throw HypothesisError("hemisemidirect product requires characteristic zero");
  if (auto bad = certify_representation(rep))
    throw InputError("representation does not certify at basis pair (" +
                     std::to_string(bad->i) + "," + std::to_string(bad->j) + ")");
  std::size_t m = rep.lie.dim(), q = rep.module_dim, t = m + q;
  const Field& f = rep.lie.field();
  std::vector<Scalar> sc(t * t * t, Scalar::zero(f));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) sc[(i * t + j) * t + k] = rep.lie.c(i, j, k);
    // [(e_i, 0), (0, v_b)] = (0, e_i . v_b)
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t k = 0; k < q; ++k)
        sc[(i * t + (m + b)) * t + (m + k)] = rep.action[i].at(k, b);
  }
  std::string hname = name.empty() ? rep.lie.name() + "_hemi" + std::to_string(q) : name;
  LeibnizAlgebra h = LeibnizAlgebra::from_structure_constants(hname, f, t, std::move(sc));
  if (check_leibniz(h))
    throw InternalError("hemisemidirect product violates the Leibniz identity");
  return h;
}

WitnessCertificate witness_nonperfect(const LeibnizAlgebra& a) {
  Subspace derived = derived_subalgebra(a);
  if (derived.is_full())
    throw HypothesisError(a.name() + " is perfect: no witness exists");
  QuotientAlgebra abelianization = quotient_algebra(a, derived, a.name() + "/derived");
  LeibnizAlgebra k = direct_product(a, abelianization.algebra, "witness(" + a.name() + ")");
  std::size_t n = a.dim(), q = abelianization.algebra.dim(), t = n + q;
  const Field& f = a.field();

  // f(x, u) = (0, pi(x)): bottom-left block is the canonical projection.
  Matrix fm(f, t, t);
  const Matrix& pi = abelianization.projection.matrix();
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < n; ++c) fm.at(n + r, c) = pi.at(r, c);

  Matrix inc(f, t, n);
  for (std::size_t i = 0; i < n; ++i) inc.at(i, i) = Scalar::one(f);
  Subspace a_comp = Subspace::from_span(inc.transposed());

  WitnessCertificate cert;
  cert.ambient = k;
  cert.embedded_a = a_comp;
  cert.f = LinearMap(fm);
  cert.pi = abelianization.projection;
  cert.f_is_derivation = is_derivation(k, fm);
  Subspace zlie = lie_center(k);
  cert.f_is_lie_derivation = cert.f_is_derivation;
  for (std::size_t c = 0; c < t && cert.f_is_lie_derivation; ++c)
    if (!zlie.contains(fm.col(c))) cert.f_is_lie_derivation = false;
  cert.f_escapes_a = false;
  for (std::size_t i = 0; i < n; ++i)
    if (!a_comp.contains(fm.apply(k.basis_vector(i)))) cert.f_escapes_a = true;
  if (!cert.valid())
    throw InternalError("witness construction failed to certify for " + a.name());
  return cert;
}

} // namespace leibniz
