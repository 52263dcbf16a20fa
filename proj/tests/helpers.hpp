#ifndef LEIBNIZ_TEST_HELPERS_HPP
#define LEIBNIZ_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "leibniz/catalog.hpp"

namespace leibniz::testing {

inline Field Q() { return Field::rationals(); }

inline Scalar q(long long num, long long den = 1) {
  return Scalar::from_rational(Rational(num, den));
}

inline Vec vec(const Field& f, std::initializer_list<long long> entries) {
  Vec v(f, entries.size());
  std::size_t i = 0;
  for (long long e : entries) v[i++] = Scalar::of(e, f);
  return v;
}

inline Matrix mat(const Field& f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(f, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long long e : row) m.at(i, j++) = Scalar::of(e, f);
    ++i;
  }
  return m;
}

// Small random integers keep exact arithmetic readable in failure output.
inline Matrix random_matrix(std::mt19937& rng, const Field& f, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> dist(-4, 4);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::of(dist(rng), f);
  return m;
}

inline Subspace random_subspace(std::mt19937& rng, const Field& f, std::size_t ambient,
                                std::size_t generators) {
  return Subspace::from_span(random_matrix(rng, f, generators, ambient));
}

inline std::vector<LeibnizAlgebra> catalog_algebras() {
  std::vector<LeibnizAlgebra> out;
  for (const auto& key : catalog_keys()) out.push_back(catalog_build(key));
  return out;
}

} // namespace leibniz::testing

#endif
