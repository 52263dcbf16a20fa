#ifndef LEIBNIZ_CONSTRUCTIONS_HPP
#define LEIBNIZ_CONSTRUCTIONS_HPP

#include "leibniz/derivations.hpp"

namespace leibniz {

/// A module over a Lie algebra, given by explicit action matrices
/// rho(e_i) on the module coordinates.
struct Representation {
  LeibnizAlgebra lie;
  std::size_t module_dim;
  std::vector<Matrix> action;

  Matrix act(const Vec& x) const; // rho(x)
};

struct RepresentationViolation {
  std::size_t i, j;
};

/// Checks rho([e_i,e_j]) = rho(e_i) rho(e_j) - rho(e_j) rho(e_i) on all
/// basis pairs (and that the underlying algebra is Lie).
std::optional<RepresentationViolation> certify_representation(const Representation& rep);

/// A + D(A) with the product [x+f, y+g] = [x,y] + f(y) + [L_x, g] + [f,g].
/// The A component is generally *not* an ideal here; its status is
/// reported rather than assumed.
struct Holomorph {
  LeibnizAlgebra algebra;
  LinearMap embed_a;
  std::size_t derivation_dim;
  bool a_component_ideal;
};

Holomorph hol(const LeibnizAlgebra& a);

/// A + D_Lie(A) with the product ([x,y] + f(y) - g(x), [f,g]); contains
/// the A component as a certified ideal.
struct LieHolomorph {
  LeibnizAlgebra algebra;
  AlgebraHom embed_a;
  Subspace a_component; // first dim(A) coordinates
  std::size_t lie_derivation_dim;
};

LieHolomorph hol_lie(const LeibnizAlgebra& a);

/// Leibniz product ([x,y], x.v) on lie + module. Requires characteristic
/// zero and a certified representation.
LeibnizAlgebra hemisemidirect(const Representation& rep, const std::string& name = "");

/// Constructive witness that a non-perfect algebra embeds as a
/// non-characteristic ideal: the ambient K = A x A/[A,A] with product
/// ([x,z], 0), and the derivation f(x,u) = (0, pi(x)) escaping A.
struct WitnessCertificate {
  LeibnizAlgebra ambient;
  Subspace embedded_a;
  LinearMap f;
  LinearMap pi; // projection A -> A/[A,A] used to build f
  bool f_is_derivation;
  bool f_is_lie_derivation;
  bool f_escapes_a;

  bool valid() const { return f_is_derivation && f_is_lie_derivation && f_escapes_a; }
};

WitnessCertificate witness_nonperfect(const LeibnizAlgebra& a);

} // namespace leibniz

#endif
