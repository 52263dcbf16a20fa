#ifndef LEIBNIZ_INVARIANTS_HPP
#define LEIBNIZ_INVARIANTS_HPP

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Span of all basis products [e_i, e_j].
Subspace derived_subalgebra(const LeibnizAlgebra& a);

bool is_perfect(const LeibnizAlgebra& a);

/// Span of the squares [x,x]: diagonal squares [e_i,e_i] together with
/// the polarizations [e_i,e_j] + [e_j,e_i], which is correct in every
/// characteristic including 2.
Subspace leibniz_kernel(const LeibnizAlgebra& a);

/// {x : [x,y] = 0 for all y} -- the kernel of x -> L_x. For a Lie
/// algebra this is the center, in every characteristic.
Subspace left_center(const LeibnizAlgebra& a);

/// {x : [x,y] + [y,x] = 0 for all y}. Degenerates to the full space
/// for alternating products in characteristic 2; use left_center when
/// the genuine center of a Lie algebra is meant.
Subspace lie_center(const LeibnizAlgebra& a);

/// True iff the center of a/Leib(a) vanishes (the quotient is Lie, so
/// its center is its left center).
bool center_of_quotient_trivial(const LeibnizAlgebra& a);

/// A nonzero central element of a/Leib(a) in quotient coordinates, or
/// nullopt when the center is trivial. Used to phrase refusals.
std::optional<Vec> quotient_center_witness(const LeibnizAlgebra& a);

/// Largest subalgebra of k in which the subalgebra s sits as an ideal:
/// {x : [x,s] and [s,x] both stay in s}. The raw linear set is verified
/// closed under products before being returned.
Subspace normalizer(const LeibnizAlgebra& k, const Subspace& s);

/// {x in k : [x,y] = 0 for all y in s}.
Subspace left_centralizer(const LeibnizAlgebra& k, const Subspace& s);

/// Descending iterated ideal-closure series from k down to the stable
/// subalgebra over s. s is a subideal iff the series bottoms out at s;
/// chain lists the realizing subalgebras from s (front) up to k (back),
/// each an ideal of the next.
struct SubidealResult {
  bool subideal;
  std::vector<Subspace> chain;
};

SubidealResult is_subideal(const LeibnizAlgebra& k, const Subspace& s);

struct InvariantReport {
  std::string algebra;
  std::size_t dim;
  Subspace derived;
  Subspace leib;
  Subspace left_center;
  Subspace lie_center;
  bool perfect;
  bool lie;
  bool quotient_center_trivial;
};

InvariantReport invariant_report(const LeibnizAlgebra& a);

} // namespace leibniz

#endif
