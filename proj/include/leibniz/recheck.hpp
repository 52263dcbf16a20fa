#ifndef LEIBNIZ_RECHECK_HPP
#define LEIBNIZ_RECHECK_HPP

#include "leibniz/algebra.hpp"

namespace leibniz {

// Certificate validation that stays independent of the subspace/RREF
// machinery it is asked to confirm: membership and rank are done with a
// local elimination over raw row lists, products directly off the
// structure tensor.
namespace recheck {

/// Rank by plain Gaussian elimination (no canonical form involved).
std::size_t rank_gauss(std::vector<Vec> rows);

/// Whether v lies in the row span.
bool member(const std::vector<Vec>& rows, const Vec& v);

std::vector<Vec> rows_of(const Matrix& m);

/// inner spans an ideal of the subalgebra spanned by outer: every product
/// of an outer row with an inner row, both ways, stays in inner's span.
bool ideal_link(const LeibnizAlgebra& ambient, const std::vector<Vec>& inner,
                const std::vector<Vec>& outer);

/// Each neighboring pair of the chain is an ideal link.
bool ideal_chain(const LeibnizAlgebra& ambient, const std::vector<std::vector<Vec>>& chain);

/// m is a product-preserving map dom -> cod on all basis pairs.
bool hom(const LeibnizAlgebra& dom, const LeibnizAlgebra& cod, const Matrix& m);

bool injective(const Matrix& m);

/// f([x,y]) = [f x, y] + [x, f y] on basis pairs, straight off the tensor.
bool derivation(const LeibnizAlgebra& a, const Matrix& f);

/// [f(b), y] + [y, f(b)] = 0 for all basis b, y: the image of f lands in
/// the Lie-center.
bool lie_derivation(const LeibnizAlgebra& a, const Matrix& f);

/// f maps the span of rows outside itself somewhere.
bool escapes(const LeibnizAlgebra& a, const Matrix& f, const std::vector<Vec>& rows);

} // namespace recheck

} // namespace leibniz

#endif
