#ifndef LEIBNIZ_SUBSPACE_HPP
#define LEIBNIZ_SUBSPACE_HPP

#include <optional>
#include <vector>

#include "leibniz/linmap.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

/// Unique reduced row-echelon form of m, zero rows dropped (rows = rank).
/// Pivots are the first nonzero entry of each row scanning left to right,
/// normalized to 1, with pivot columns cleared elsewhere. Row space is
/// preserved, so equal row spaces give identical outputs.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Solves m x = b; returns a particular solution with free coordinates
/// set to zero, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of F^n held as its canonical RREF basis (rows are basis
/// vectors). Equality of subspaces is identity of basis matrices.
class Subspace {
public:
  Subspace() : ambient_(0) {}

  static Subspace zero(const Field& f, std::size_t ambient_dim);
  static Subspace full(const Field& f, std::size_t ambient_dim);
  /// Canonicalizes the row span of the given matrix.
  static Subspace from_span(const Matrix& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Field& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Pivot column of each basis row (strictly increasing).
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residual of x after eliminating against the basis; zero iff x lies
  /// in the subspace.
  Vec reduce(const Vec& x) const;

  bool contains(const Vec& x) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of x in the basis rows, or nullopt if x is outside.
  std::optional<Vec> coordinates_of(const Vec& x) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;

  friend Subspace subspace_from_rref(Matrix rref_basis, std::size_t ambient_dim);
};

/// Trusted constructor for matrices already in canonical RREF.
Subspace subspace_from_rref(Matrix rref_basis, std::size_t ambient_dim);

/// {v : m v = 0} as a canonical subspace of F^cols.
Subspace null_space(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// Intersection via the null space of stacked annihilator constraints.
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Basis of {c : c . u = 0 for all u in the subspace}; its rows are the
/// linear constraints cutting the subspace out of the ambient space.
Subspace annihilator(const Subspace& u);

/// Coset-representative coordinates for F^n / w. Representatives are the
/// non-pivot coordinates of w's RREF; projection ∘ section is the identity
/// on the quotient and the projection's kernel is exactly w.
struct QuotientCoordinates {
  LinearMap projection; // (n - dim w) x n
  LinearMap section;    // n x (n - dim w)
  std::vector<std::size_t> reps;
};

QuotientCoordinates quotient_coordinates(std::size_t ambient_dim, const Subspace& w);

} // namespace leibniz

#endif
