#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/subspace.hpp"

namespace leibniz {

enum class Orientation { left, right };

/// Finite-dimensional left Leibniz algebra given by its structure tensor:
/// [e_i, e_j] = sum_k c(i,j,k) e_k. Right-oriented input is normalized on
/// construction by transposing the first two tensor slots. Immutable.
class LeibnizAlgebra {
public:
  LeibnizAlgebra() : field_(Field::rationals()), dim_(0) {}

  /// sc is the dense tensor flattened as sc[(i*dim + j)*dim + k]. Entry
  /// fields must all match the given field. Does not check the Leibniz
  /// identity; that is check_leibniz's job.
  static LeibnizAlgebra from_structure_constants(std::string name, const Field& field,
                                                 std::size_t dim, std::vector<Scalar> sc,
                                                 Orientation orientation = Orientation::left);

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }

  /// [e_i, e_j] as a coordinate vector.
  Vec bracket_basis(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the structure tensor.
  Vec product(const Vec& x, const Vec& y) const;

  /// Matrix of the left multiplication L_x = [x, -].
  Matrix left_mult(const Vec& x) const;
  Matrix left_mult_basis(std::size_t i) const;

  Subspace full_space() const { return Subspace::full(field_, dim_); }
  Subspace zero_subspace() const { return Subspace::zero(field_, dim_); }
  Vec zero_vector() const { return Vec(field_, dim_); }
  Vec basis_vector(std::size_t i) const { return Vec::unit(field_, dim_, i); }

  LeibnizAlgebra renamed(std::string name) const;

  /// Same field, dimension and tensor (name ignored).
  bool same_table(const LeibnizAlgebra& o) const;

private:
  std::string name_;
  Field field_;
  std::size_t dim_;
  std::vector<Scalar> sc_;
};

/// First basis triple violating the left Leibniz identity, with both sides.
struct LeibnizViolation {
  std::size_t i, j, k;
  Vec lhs; // [e_i, [e_j, e_k]]
  Vec rhs; // [[e_i, e_j], e_k] + [e_j, [e_i, e_k]]
};

/// nullopt iff [x,[y,z]] = [[x,y],z] + [y,[x,z]] holds on all basis
/// triples; otherwise the lexicographically first failure.
std::optional<LeibnizViolation> check_leibniz(const LeibnizAlgebra& a);

/// True iff the product is alternating: c(i,i,.) = 0 and
/// c(i,j,.) = -c(j,i,.). The diagonal condition is the right one in
/// characteristic 2 as well.
bool is_lie(const LeibnizAlgebra& a);

bool is_subalgebra(const LeibnizAlgebra& a, const Subspace& s);

/// Pair (i = ambient basis index, v = subspace basis vector index) whose
/// product escapes s, if any; used to phrase refusals.
struct IdealViolation {
  bool left_factor_ambient; // true: [e_i, s_v] escaped; false: [s_v, e_i]
  std::size_t ambient_index;
  std::size_t subspace_index;
};

bool is_left_ideal(const LeibnizAlgebra& a, const Subspace& s);
bool is_right_ideal(const LeibnizAlgebra& a, const Subspace& s);
bool is_ideal(const LeibnizAlgebra& a, const Subspace& s);
std::optional<IdealViolation> find_ideal_violation(const LeibnizAlgebra& a, const Subspace& s);

/// Smallest subspace containing s and closed under products of its own
/// elements. Fixed-point iteration on spans; at most dim(a) rounds.
Subspace subalgebra_closure(const LeibnizAlgebra& a, const Subspace& s);

/// Smallest subspace containing s absorbing left and right products with
/// all of a.
Subspace ideal_closure(const LeibnizAlgebra& a, const Subspace& s);

/// Ideal closure of seed inside the subalgebra w of a (products taken
/// against w's basis only). seed must lie inside w.
Subspace ideal_closure_within(const LeibnizAlgebra& a, const Subspace& w, const Subspace& seed);

class AlgebraHom;

/// Quotient by an ideal, with structure constants induced on the
/// non-pivot coset representatives.
struct QuotientAlgebra {
  LeibnizAlgebra algebra;
  LinearMap projection; // quotient coordinates of an ambient vector
  LinearMap section;    // coset representative of a quotient vector
  std::vector<std::size_t> reps;
};

QuotientAlgebra quotient_algebra(const LeibnizAlgebra& a, const Subspace& ideal,
                                 const std::string& name = "");

LeibnizAlgebra direct_product(const LeibnizAlgebra& a, const LeibnizAlgebra& b,
                              const std::string& name = "");

/// A subalgebra repackaged as an algebra in its own RREF-basis
/// coordinates, with the inclusion map back into the ambient space.
struct SubalgebraView {
  LeibnizAlgebra algebra;
  LinearMap inclusion; // ambient_dim x dim(s)
  Subspace space;
};

SubalgebraView subalgebra_as_algebra(const LeibnizAlgebra& a, const Subspace& s,
                                     const std::string& name = "");

/// Linear map between algebras, certified separately by certify_hom.
class AlgebraHom {
public:
  AlgebraHom() = default;
  AlgebraHom(LeibnizAlgebra domain, LeibnizAlgebra codomain, LinearMap map);

  const LeibnizAlgebra& domain() const { return domain_; }
  const LeibnizAlgebra& codomain() const { return codomain_; }
  const LinearMap& map() const { return map_; }
  const Matrix& matrix() const { return map_.matrix(); }

  Vec apply(const Vec& x) const { return map_.apply(x); }

private:
  LeibnizAlgebra domain_, codomain_;
  LinearMap map_;
};

struct HomCertificate {
  bool product_preserving;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  bool injective;
  bool surjective;
  Subspace kernel;
};

/// Checks h([e_i, e_j]) = [h(e_i), h(e_j)] on all basis pairs and flags
/// injectivity/surjectivity via rank.
HomCertificate certify_hom(const AlgebraHom& h);

} // namespace leibniz

#endif
