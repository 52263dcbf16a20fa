#ifndef LEIBNIZ_CATALOG_HPP
#define LEIBNIZ_CATALOG_HPP

#include <functional>
#include <string>
#include <vector>

#include "leibniz/constructions.hpp"

namespace leibniz {

struct CatalogEntry {
  std::string key;
  std::string notes;
  std::function<LeibnizAlgebra()> build;
};

/// Built-in algebras over Q. Every entry passes check_leibniz at load.
const std::vector<CatalogEntry>& catalog();

bool catalog_has(const std::string& key);
LeibnizAlgebra catalog_build(const std::string& key);
std::vector<std::string> catalog_keys();

// Individual builders, also used directly by tests.
LeibnizAlgebra abelian(std::size_t n, const Field& f = Field::rationals());
LeibnizAlgebra nil2();
LeibnizAlgebra heis3();
LeibnizAlgebra sl2();
LeibnizAlgebra sl2sl2();
LeibnizAlgebra borel2();
Representation sl2_natural_rep();
LeibnizAlgebra h5();

} // namespace leibniz

#endif
