#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "leibniz/errors.hpp"

using namespace leibniz;
using namespace leibniz::testing;

TEST_CASE("rational scalars are canonical") {
  Field f = Q();
  CHECK(Scalar::parse("-3/2", f).str() == "-3/2");
  CHECK(Scalar::parse("7", f).str() == "7");
  CHECK(Scalar::parse("0", f).str() == "0");
  CHECK(Scalar::parse("4/6", f).str() == "2/3");
  CHECK(Scalar::parse("3/-1", f).str() == "-3"); // denominator sign normalizes
  CHECK(q(6, -4).str() == "-3/2");
  CHECK_THROWS_AS(Scalar::parse("1/0", f), InputError);
  CHECK_THROWS_AS(Scalar::parse("x", f), InputError);
  CHECK_THROWS_AS(Scalar::one(f) / Scalar::zero(f), InputError);
}

TEST_CASE("prime field scalars") {
  Field f5 = Field::prime(5);
  CHECK(Scalar::parse("-7", f5).str() == "3");
  CHECK(Scalar::parse("12", f5).str() == "2");
  CHECK((Scalar::of(3, f5) * Scalar::of(4, f5)).str() == "2");
  CHECK((Scalar::of(2, f5).inverse()).str() == "3");
  CHECK((-Scalar::of(2, f5)).str() == "3");
  CHECK_THROWS_AS(Field::prime(6), InputError);
  CHECK_THROWS_AS(Field::prime(1u << 31), InputError);
  CHECK_THROWS_AS(Scalar::of(1, f5) + Scalar::one(Q()), InputError);
}

TEST_CASE("exact arithmetic round trips") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 30);
  for (int t = 0; t < 300; ++t) {
    Scalar a = q(num(rng), den(rng));
    Scalar b = q(num(rng), den(rng));
    CHECK(a + b - b == a);
    CHECK(Scalar::parse(a.str(), Q()) == a);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
  Field f7 = Field::prime(7);
  for (int t = 0; t < 200; ++t) {
    Scalar a = Scalar::of(num(rng), f7);
    Scalar b = Scalar::of(num(rng), f7);
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("rref drops to the canonical rank-sized form") {
  Matrix m = mat(Q(), {{2, 4}, {1, 2}});
  CHECK(rref(m) == mat(Q(), {{1, 2}}));
  CHECK(rref(Matrix::identity(Q(), 3)) == Matrix::identity(Q(), 3));
  Field f2 = Field::prime(2);
  Matrix g(f2, 2, 2);
  g.at(0, 0) = Scalar::one(f2);
  g.at(0, 1) = Scalar::one(f2);
  g.at(1, 0) = Scalar::one(f2);
  g.at(1, 1) = Scalar::of(2, f2);
  CHECK(rref(g) == Matrix::identity(f2, 2));
}

TEST_CASE("rref is idempotent") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(rng, Q(), 1 + t % 6, 1 + (t * 7) % 5);
    Matrix r = rref(m);
    CHECK(rref(r) == r);
  }
  Field f5 = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(rng, f5, 1 + t % 5, 1 + (t * 3) % 6);
    Matrix r = rref(m);
    CHECK(rref(r) == r);
  }
}

TEST_CASE("null spaces annihilate exactly") {
  CHECK(null_space(Matrix(Q(), 2, 3)) == Subspace::full(Q(), 3));
  CHECK(null_space(Matrix::identity(Q(), 4)) == Subspace::zero(Q(), 4));
  Matrix m = mat(Q(), {{1, 2, 3}});
  Subspace ns = null_space(m);
  CHECK(ns.dim() == 2);
  for (std::size_t i = 0; i < ns.dim(); ++i) CHECK(m.apply(ns.basis_vector(i)).is_zero());

  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    Matrix r = random_matrix(rng, Q(), 2 + t % 4, 3 + t % 4);
    Subspace k = null_space(r);
    CHECK(k.dim() == r.cols() - rank(r));
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(r.apply(k.basis_vector(i)).is_zero());
  }
}

TEST_CASE("subspace lattice basics") {
  Subspace e1 = Subspace::from_span(mat(Q(), {{1, 0, 0}}));
  Subspace e2 = Subspace::from_span(mat(Q(), {{0, 1, 0}}));
  Subspace e12 = Subspace::from_span(mat(Q(), {{1, 0, 0}, {0, 1, 0}}));
  Subspace e23 = Subspace::from_span(mat(Q(), {{0, 1, 0}, {0, 0, 1}}));
  CHECK(subspace_sum(e1, e2) == e12);
  CHECK(subspace_intersect(e12, e23) == e2);
  CHECK(e12.contains(e1));
  CHECK(!e1.contains(e12));
  CHECK(e12.contains(vec(Q(), {3, -2, 0})));
  CHECK(!e12.contains(vec(Q(), {0, 0, 1})));
  CHECK_THROWS_AS(subspace_sum(e1, Subspace::zero(Q(), 2)), InputError);
}

TEST_CASE("contains is reflexive and equality is syntactic") {
  std::mt19937 rng(5);
  for (int t = 0; t < 25; ++t) {
    Subspace u = random_subspace(rng, Q(), 5, 1 + t % 4);
    CHECK(u.contains(u));
    // Same span from shuffled generators canonicalizes identically.
    std::vector<Vec> rows;
    for (std::size_t i = u.dim(); i-- > 0;) rows.push_back(u.basis_vector(i) + u.basis_vector(0));
    rows.push_back(u.basis_vector(0).scaled(q(3)));
    Subspace v = Subspace::from_span(Matrix::from_rows(Q(), 5, rows));
    CHECK(v == u);
  }
}

TEST_CASE("modular Grassmann identity") {
  std::mt19937 rng(42);
  for (int t = 0; t < 40; ++t) {
    Subspace u = random_subspace(rng, Q(), 6, 1 + t % 4);
    Subspace v = random_subspace(rng, Q(), 6, 1 + (t * 5) % 4);
    CHECK(subspace_sum(u, v).dim() + subspace_intersect(u, v).dim() == u.dim() + v.dim());
  }
  Field f3 = Field::prime(3);
  for (int t = 0; t < 20; ++t) {
    Subspace u = random_subspace(rng, f3, 5, 1 + t % 3);
    Subspace v = random_subspace(rng, f3, 5, 1 + (t * 7) % 3);
    CHECK(subspace_sum(u, v).dim() + subspace_intersect(u, v).dim() == u.dim() + v.dim());
  }
}

TEST_CASE("quotient coordinates") {
  // Trivial subspace: projection is the identity on both coordinates.
  auto qc0 = quotient_coordinates(2, Subspace::zero(Q(), 2));
  CHECK(qc0.reps == std::vector<std::size_t>{0, 1});
  CHECK(qc0.projection.matrix() == Matrix::identity(Q(), 2));

  Subspace w = Subspace::from_span(mat(Q(), {{0, 1}}));
  auto qc = quotient_coordinates(2, w);
  CHECK(qc.reps == std::vector<std::size_t>{0});
  CHECK(qc.projection.apply(vec(Q(), {0, 1})).is_zero());
  CHECK(qc.projection.apply(qc.section.apply(vec(Q(), {5}))) == vec(Q(), {5}));

  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    Subspace s = random_subspace(rng, Q(), 6, 1 + t % 5);
    auto qcr = quotient_coordinates(6, s);
    CHECK(rank(qcr.projection.matrix()) == 6 - s.dim());
    // Kernel of the projection is exactly the subspace.
    CHECK(null_space(qcr.projection.matrix()) == s);
    // projection . section is the identity on the quotient.
    CHECK(qcr.projection.matrix() * qcr.section.matrix() ==
          Matrix::identity(Q(), 6 - s.dim()));
  }
}

TEST_CASE("solve and inverse") {
  Matrix m = mat(Q(), {{1, 2}, {3, 4}});
  auto x = solve(m, vec(Q(), {5, 6}));
  REQUIRE(x);
  CHECK(m.apply(*x) == vec(Q(), {5, 6}));
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(Q(), 2));
  CHECK(!inverse(mat(Q(), {{1, 2}, {2, 4}})));
  CHECK(!solve(mat(Q(), {{1, 1}, {1, 1}}), vec(Q(), {0, 1})));
}
