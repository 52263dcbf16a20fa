#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/invariants.hpp"

using namespace leibniz;
using namespace leibniz::testing;

namespace {

LeibnizAlgebra corrupted_sl2() {
  // [e,f] doubled to 2h while [f,e] stays -h: breaks the identity.
  LeibnizAlgebra s = sl2();
  std::vector<Scalar> sc;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) sc.push_back(s.c(i, j, k));
  sc[(0 * 3 + 2) * 3 + 1] = q(2);
  return LeibnizAlgebra::from_structure_constants("bad_sl2", Q(), 3, std::move(sc));
}

} // namespace

TEST_CASE("products extend the tensor bilinearly") {
  LeibnizAlgebra n2 = nil2();
  CHECK(n2.product(n2.zero_vector(), vec(Q(), {1, 1})).is_zero());
  CHECK(n2.product(vec(Q(), {1, 0}), vec(Q(), {1, 0})) == vec(Q(), {0, 1}));
  LeibnizAlgebra s = sl2();
  // [h, e] = 2e with basis order (e, h, f).
  CHECK(s.product(vec(Q(), {0, 1, 0}), vec(Q(), {1, 0, 0})) == vec(Q(), {2, 0, 0}));
  CHECK_THROWS_AS(s.product(vec(Q(), {1, 0}), vec(Q(), {1, 0, 0})), InputError);
}

TEST_CASE("check_leibniz finds the first failing triple") {
  CHECK(!check_leibniz(abelian(3)));
  CHECK(!check_leibniz(nil2()));
  auto bad = check_leibniz(corrupted_sl2());
  REQUIRE(bad);
  // Brute-force oracle: recompute the two sides at the reported triple.
  LeibnizAlgebra a = corrupted_sl2();
  Vec lhs = a.product(a.basis_vector(bad->i), a.bracket_basis(bad->j, bad->k));
  Vec rhs = a.product(a.bracket_basis(bad->i, bad->j), a.basis_vector(bad->k)) +
            a.product(a.basis_vector(bad->j), a.product(a.basis_vector(bad->i), a.basis_vector(bad->k)));
  CHECK(lhs == bad->lhs);
  CHECK(rhs == bad->rhs);
  CHECK(lhs != rhs);
  // And it is lexicographically first: everything before passes.
  for (std::size_t i = 0; i <= bad->i; ++i)
    for (std::size_t j = 0; i < bad->i ? j < 3 : j <= bad->j; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        if (i == bad->i && j == bad->j && k >= bad->k) continue;
        Vec l = a.product(a.basis_vector(i), a.bracket_basis(j, k));
        Vec r = a.product(a.bracket_basis(i, j), a.basis_vector(k)) +
                a.product(a.basis_vector(j), a.product(a.basis_vector(i), a.basis_vector(k)));
        CHECK(l == r);
      }
}

TEST_CASE("is_lie") {
  CHECK(is_lie(sl2()));
  CHECK(is_lie(heis3()));
  CHECK(!is_lie(nil2()));
  CHECK(!is_lie(h5()));
}

TEST_CASE("right-oriented input transposes on ingest") {
  // nil2 written as a right Leibniz algebra gives the same left algebra back.
  LeibnizAlgebra left = nil2();
  std::vector<Scalar> transposed(8, Scalar::zero(Q()));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        if (!left.c(i, j, k).is_zero()) transposed[(j * 2 + i) * 2 + k] = left.c(i, j, k);
  LeibnizAlgebra fromRight = LeibnizAlgebra::from_structure_constants(
      "nil2r", Q(), 2, std::move(transposed), Orientation::right);
  CHECK(fromRight.same_table(left));
}

TEST_CASE("closures") {
  LeibnizAlgebra s = sl2();
  Subspace e = Subspace::from_span(mat(Q(), {{1, 0, 0}}));
  CHECK(ideal_closure(s, e) == s.full_space()); // sl2 is simple
  LeibnizAlgebra n2 = nil2();
  Subspace e2 = Subspace::from_span(mat(Q(), {{0, 1}}));
  CHECK(ideal_closure(n2, e2) == e2);
  CHECK(subalgebra_closure(s, s.full_space()) == s.full_space());
  // Borel subalgebra span{e,h} is closed already.
  Subspace borel = Subspace::from_span(mat(Q(), {{1, 0, 0}, {0, 1, 0}}));
  CHECK(subalgebra_closure(s, borel) == borel);
}

TEST_CASE("closure operator laws on random subspaces") {
  std::mt19937 rng(17);
  for (const auto& a : {sl2(), nil2(), heis3(), h5()}) {
    for (int t = 0; t < 12; ++t) {
      Subspace s = random_subspace(rng, Q(), a.dim(), 1 + t % a.dim());
      Subspace c = ideal_closure(a, s);
      CHECK(c.contains(s));                 // extensive
      CHECK(ideal_closure(a, c) == c);      // idempotent
      Subspace bigger = subspace_sum(s, random_subspace(rng, Q(), a.dim(), 1));
      CHECK(ideal_closure(a, bigger).contains(c)); // monotone
      CHECK(is_ideal(a, c));
    }
  }
}

TEST_CASE("ideal predicates") {
  LeibnizAlgebra s = sl2();
  CHECK(is_ideal(s, s.zero_subspace()));
  CHECK(is_ideal(s, s.full_space()));
  CHECK(!is_ideal(s, Subspace::from_span(mat(Q(), {{1, 0, 0}}))));
  LeibnizAlgebra n2 = nil2();
  CHECK(is_ideal(n2, Subspace::from_span(mat(Q(), {{0, 1}}))));
  // Two-sided agrees with left and right together, everywhere it matters.
  for (const auto& a : catalog_algebras()) {
    Subspace leib = leibniz_kernel(a);
    CHECK(is_ideal(a, leib) == (is_left_ideal(a, leib) && is_right_ideal(a, leib)));
  }
}

TEST_CASE("quotients") {
  LeibnizAlgebra n2 = nil2();
  QuotientAlgebra q1 = quotient_algebra(n2, Subspace::from_span(mat(Q(), {{0, 1}})));
  CHECK(q1.algebra.dim() == 1);
  CHECK(q1.algebra.same_table(abelian(1)));

  QuotientAlgebra q0 = quotient_algebra(n2, n2.zero_subspace());
  CHECK(q0.algebra.same_table(n2));

  // Quotient of h5 by its Leibniz kernel lands exactly on sl2's table.
  LeibnizAlgebra H = h5();
  QuotientAlgebra qh = quotient_algebra(H, leibniz_kernel(H));
  CHECK(!check_leibniz(qh.algebra));
  CHECK(is_lie(qh.algebra));
  CHECK(qh.algebra.same_table(sl2()));

  // Projection respects products on all basis pairs.
  AlgebraHom proj(H, qh.algebra, qh.projection);
  HomCertificate cert = certify_hom(proj);
  CHECK(cert.product_preserving);
  CHECK(cert.surjective);
  CHECK(cert.kernel == leibniz_kernel(H));

  CHECK_THROWS_AS(quotient_algebra(sl2(), Subspace::from_span(mat(Q(), {{1, 0, 0}}))), InputError);
}

TEST_CASE("direct products") {
  CHECK(direct_product(abelian(1), abelian(1)).same_table(abelian(2)));
  LeibnizAlgebra n2 = nil2();
  QuotientAlgebra ab = quotient_algebra(n2, derived_subalgebra(n2));
  LeibnizAlgebra k = direct_product(n2, ab.algebra);
  CHECK(k.dim() == 3);
  CHECK(!check_leibniz(k));
  CHECK(k.same_table(witness_nonperfect(n2).ambient));
  CHECK(!check_leibniz(direct_product(sl2(), h5())));
  Field f5 = Field::prime(5);
  CHECK_THROWS_AS(direct_product(abelian(1), abelian(1, f5)), InputError);
}

TEST_CASE("hom certification") {
  LeibnizAlgebra s = sl2();
  AlgebraHom id(s, s, LinearMap(Matrix::identity(Q(), 3)));
  HomCertificate c = certify_hom(id);
  CHECK(c.product_preserving);
  CHECK(c.injective);
  CHECK(c.surjective);

  AlgebraHom zero(s, s, LinearMap(Matrix(Q(), 3, 3)));
  HomCertificate cz = certify_hom(zero);
  CHECK(cz.product_preserving);
  CHECK(!cz.injective);

  // The zero map from a zero-dimensional domain is injective.
  LeibnizAlgebra trivial = abelian(0);
  AlgebraHom fromTrivial(trivial, s, LinearMap(Matrix(Q(), 3, 0)));
  CHECK(certify_hom(fromTrivial).injective);

  // x -> 2x on nil2 is not a hom: squares scale by 4, images by 2.
  LeibnizAlgebra n2 = nil2();
  AlgebraHom dbl(n2, n2, LinearMap(Matrix::identity(Q(), 2).scaled(q(2))));
  HomCertificate cd = certify_hom(dbl);
  CHECK(!cd.product_preserving);
  REQUIRE(cd.failing_pair);
  CHECK(*cd.failing_pair == std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("subalgebra views") {
  LeibnizAlgebra s = sl2();
  Subspace borel = Subspace::from_span(mat(Q(), {{1, 0, 0}, {0, 1, 0}}));
  SubalgebraView v = subalgebra_as_algebra(s, borel);
  CHECK(v.algebra.dim() == 2);
  CHECK(!check_leibniz(v.algebra));
  // [h, e] = 2e turns into [b2, b1] = 2 b1 in the sub-basis (e, h).
  CHECK(v.algebra.product(vec(Q(), {0, 1}), vec(Q(), {1, 0})) == vec(Q(), {2, 0}));
  CHECK_THROWS_AS(subalgebra_as_algebra(s, Subspace::from_span(mat(Q(), {{0, 1, 0}, {0, 0, 1}}))),
                  InputError);
}
