#ifndef LEIBNIZ_DERIVATIONS_HPP
#define LEIBNIZ_DERIVATIONS_HPP

#include <optional>
#include <vector>

#include "leibniz/invariants.hpp"

namespace leibniz {

/// The derivation Lie algebra D(A) of a Leibniz algebra: basis matrices
/// solved from the derivation identity, their span in the row-major
/// coordinate space of n x n matrices, and the commutator bracket table
/// expressed on that basis.
struct DerivationAlgebra {
  LeibnizAlgebra base;
  Subspace flat;              // canonical span inside F^(n^2)
  std::vector<Matrix> basis;  // reshaped rows of flat
  LeibnizAlgebra bracket;     // Lie algebra structure on the basis

  std::size_t dim() const { return basis.size(); }

  /// Coordinates of a derivation matrix in this basis; throws when the
  /// matrix lies outside the span.
  Vec coordinates_of(const Matrix& f) const;

  /// Matrix realizing a coordinate vector.
  Matrix realize(const Vec& coords) const;
};

/// True iff f satisfies f([x,y]) = [f x, y] + [x, f y] on basis pairs.
bool is_derivation(const LeibnizAlgebra& a, const Matrix& f);

/// Constraint system whose null space (in row-major flattening) is D(A);
/// row blocks ordered lexicographically by (i, j). Exposed so tests can
/// audit dim D(A) = n^2 - rank against an independent elimination.
Matrix derivation_constraint_matrix(const LeibnizAlgebra& a);

DerivationAlgebra derivation_algebra(const LeibnizAlgebra& a);

enum class DerivationIdealKind { lie_derivations, into_leib, custom };

/// An ideal of D(A) held as coordinates inside the parent's basis.
struct DerivationIdeal {
  DerivationIdealKind kind;
  Subspace coords;
};

/// {f in D : Im(f) lies in target}, as coordinates in D's basis.
Subspace maps_into(const DerivationAlgebra& d, const Subspace& target);

/// Derivations whose image lies in the Lie-center; an ideal of D(A).
DerivationIdeal lie_derivations(const LeibnizAlgebra& a, const DerivationAlgebra& d);

/// Derivations whose image lies in the Leibniz kernel; an ideal of D(A).
DerivationIdeal ideal_I(const LeibnizAlgebra& a, const DerivationAlgebra& d);

/// L(A): the span of the left multiplications inside D(A), with the map
/// x -> L_x realized as an algebra hom whose kernel is the left center.
struct LeftMultiplication {
  DerivationAlgebra algebra;
  AlgebraHom rep; // A -> algebra.bracket
};

LeftMultiplication left_multiplication_algebra(const LeibnizAlgebra& a);

/// Audit of [f, L_x] = L_{f(x)} over every derivation basis element and
/// every algebra basis vector.
struct LxIdentityAudit {
  bool ok;
  std::size_t checked;
  std::optional<std::pair<std::size_t, std::size_t>> failure; // (derivation, basis)
};

LxIdentityAudit check_Lx_identity(const LeibnizAlgebra& a, const DerivationAlgebra& d);

/// Quotient of the bracket table by an ideal of derivations; certified Lie.
struct QuotientLie {
  LeibnizAlgebra algebra;
  AlgebraHom projection; // d.bracket -> algebra
  LinearMap section;
};

QuotientLie quotient_lie_algebra(const DerivationAlgebra& d, const DerivationIdeal& j);

/// L(A) embedded into D(A)/I by L_x -> L_x + I; requires the center of
/// A/Leib(A) to vanish. Image is certified an ideal with trivial
/// centralizer.
struct LEmbedding {
  AlgebraHom hom;  // L(A) -> D(A)/I
  Subspace image;  // inside the quotient's coordinate space
  std::size_t centralizer_dim;
};

LEmbedding embed_L_into_DmodI(const LeibnizAlgebra& a);

/// D(K) -> D(A) by restriction, for a characteristic ideal A of K with
/// vanishing left centralizer. Fails with the offending derivation or
/// centralizer element when a precondition does not hold.
struct RestrictionEmbedding {
  AlgebraHom hom;           // D(K).bracket -> D(A|sub).bracket
  SubalgebraView sub;       // A as an algebra in its own coordinates
  DerivationAlgebra der_sub; // D of that algebra
};

RestrictionEmbedding restriction_embedding(const LeibnizAlgebra& k, const Subspace& a);

/// The map D(A) -> D(L(A)), f -> (L_x -> L_{f(x)}); kernel equals I.
struct PhiToDL {
  AlgebraHom hom;
  Subspace kernel;          // inside D(A) coordinates
  DerivationAlgebra der_l;  // D(L(A))
  LeftMultiplication lmult;
};

PhiToDL phi_to_DL(const LeibnizAlgebra& a);

/// Derivation tower over g = D(A)/I: level 0 is g, level k is the
/// derivation algebra of level k-1, linked by adjoint embeddings. Each
/// level certifies a trivial center and a trivial centralizer of the
/// previous level's image.
struct TowerLevel {
  LeibnizAlgebra algebra;
  std::size_t center_dim;
  std::size_t centralizer_dim;            // of the embedded previous level (L(A) at level 0)
  std::optional<LinearMap> embedding;     // previous level -> this level
  Subspace prev_image;                    // image of the embedding (L(A) image at level 0)
};

struct DerivationTower {
  std::vector<TowerLevel> levels;
};

DerivationTower derivation_tower(const LeibnizAlgebra& a, std::size_t depth);

/// A Lie algebra is complete when its center vanishes and every
/// derivation is inner.
bool is_complete(const LeibnizAlgebra& lie_algebra);

/// The induced embedding of D^2(A)/I^2 into D(D(A)/I), where
/// I^2 = {F in D^2(A) : Im(F) lies in I}.
struct ISquaredEmbedding {
  AlgebraHom phi;              // D^2(A) -> D(D(A)/I)
  Subspace phi_kernel;
  Subspace i_squared;          // inside D^2 coordinates
  AlgebraHom quotient_hom;     // D^2/I^2 -> D(D(A)/I), injective
  DerivationAlgebra der_g;     // D(D(A)/I)
  QuotientLie g;               // D(A)/I
};

ISquaredEmbedding I_squared_embedding(const LeibnizAlgebra& a);

} // namespace leibniz

#endif
