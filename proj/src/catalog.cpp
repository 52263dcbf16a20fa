#include "leibniz/catalog.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

std::vector<Scalar> zero_tensor(const Field& f, std::size_t n) {
  return std::vector<Scalar>(n * n * n, Scalar::zero(f));
}

void put(std::vector<Scalar>& sc, std::size_t n, std::size_t i, std::size_t j, std::size_t k,
         long long v, const Field& f) {
  sc[(i * n + j) * n + k] = Scalar::of(v, f);
}

} // namespace

LeibnizAlgebra abelian(std::size_t n, const Field& f) {
  return LeibnizAlgebra::from_structure_constants("ab" + std::to_string(n), f, n, zero_tensor(f, n));
}

LeibnizAlgebra nil2() {
  Field f = Field::rationals();
  auto sc = zero_tensor(f, 2);
  put(sc, 2, 0, 0, 1, 1, f); // [e1,e1] = e2
  return LeibnizAlgebra::from_structure_constants("nil2", f, 2, std::move(sc));
}

LeibnizAlgebra heis3() {
  Field f = Field::rationals();
  auto sc = zero_tensor(f, 3);
  put(sc, 3, 0, 1, 2, 1, f);  // [e1,e2] = e3
  put(sc, 3, 1, 0, 2, -1, f); // [e2,e1] = -e3
  return LeibnizAlgebra::from_structure_constants("heis3", f, 3, std::move(sc));
}

LeibnizAlgebra sl2() {
  // Basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h, antisymmetric.
  Field q = Field::rationals();
  auto sc = zero_tensor(q, 3);
  put(sc, 3, 1, 0, 0, 2, q);
  put(sc, 3, 0, 1, 0, -2, q);
  put(sc, 3, 1, 2, 2, -2, q);
  put(sc, 3, 2, 1, 2, 2, q);
  put(sc, 3, 0, 2, 1, 1, q);
  put(sc, 3, 2, 0, 1, -1, q);
  return LeibnizAlgebra::from_structure_constants("sl2", q, 3, std::move(sc));
}

LeibnizAlgebra sl2sl2() {
  return direct_product(sl2(), sl2(), "sl2sl2");
}

LeibnizAlgebra borel2() {
  Field f = Field::rationals();
  auto sc = zero_tensor(f, 2);
  put(sc, 2, 0, 1, 1, 1, f);  // [e1,e2] = e2
  put(sc, 2, 1, 0, 1, -1, f); // [e2,e1] = -e2
  return LeibnizAlgebra::from_structure_constants("borel2", f, 2, std::move(sc));
}

Representation sl2_natural_rep() {
  Field q = Field::rationals();
  LeibnizAlgebra g = sl2();
  Matrix re(q, 2, 2), rh(q, 2, 2), rf(q, 2, 2);
  re.at(0, 1) = Scalar::one(q);
  rh.at(0, 0) = Scalar::one(q);
  rh.at(1, 1) = Scalar::of(-1, q);
  rf.at(1, 0) = Scalar::one(q);
  return Representation{std::move(g), 2, {re, rh, rf}};
}

LeibnizAlgebra h5() {
  return hemisemidirect(sl2_natural_rep(), "h5");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"ab1", "1-dimensional abelian algebra", [] { return abelian(1); }});
    v.push_back({"ab2", "2-dimensional abelian algebra", [] { return abelian(2); }});
    v.push_back({"ab3", "3-dimensional abelian algebra", [] { return abelian(3); }});
    v.push_back({"nil2", "2-dimensional nilpotent non-Lie algebra, [e1,e1] = e2", nil2});
    v.push_back({"heis3", "Heisenberg Lie algebra, [e1,e2] = e3 = -[e2,e1]", heis3});
    v.push_back({"sl2", "split simple Lie algebra with basis (e,h,f)", sl2});
    v.push_back({"sl2sl2", "direct sum of two copies of sl2", sl2sl2});
    v.push_back({"borel2", "2-dimensional solvable Lie algebra, [e1,e2] = e2", borel2});
    v.push_back({"h5", "hemisemidirect product of sl2 with its natural 2-dimensional module",
                 h5});
    v.push_back({"witness_nil2", "ambient algebra of the non-perfectness witness for nil2",
                 [] { return witness_nonperfect(nil2()).ambient; }});
    v.push_back({"witness_heis3", "ambient algebra of the non-perfectness witness for heis3",
                 [] { return witness_nonperfect(heis3()).ambient; }});
    for (const auto& e : v)
      if (check_leibniz(e.build()))
        throw InternalError("catalog entry " + e.key + " violates the Leibniz identity");
    return v;
  }();
  return entries;
}

bool catalog_has(const std::string& key) {
  for (const auto& e : catalog())
    if (e.key == key) return true;
  return false;
}

LeibnizAlgebra catalog_build(const std::string& key) {
  for (const auto& e : catalog())
    if (e.key == key) return e.build();
  throw InputError("unknown catalog key '" + key + "'");
}

std::vector<std::string> catalog_keys() {
  std::vector<std::string> keys;
  for (const auto& e : catalog()) keys.push_back(e.key);
  return keys;
}

} // namespace leibniz
