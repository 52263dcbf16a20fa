#ifndef LEIBNIZ_IO_HPP
#define LEIBNIZ_IO_HPP

#include <string>

#include <json.hpp>

#include "leibniz/catalog.hpp"
#include "leibniz/invariants.hpp"

namespace leibniz {

// Key order is part of the emitted format, so everything serializes
// through ordered_json.
using json = nlohmann::ordered_json;

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const Field& f);

json subspace_to_json(const Subspace& s);
json linmap_to_json(const LinearMap& m);

json algebra_to_json(const LeibnizAlgebra& a);
LeibnizAlgebra algebra_from_json(const json& j);

json representation_to_json(const Representation& r);
Representation representation_from_json(const json& j);

json invariant_report_to_json(const InvariantReport& r);
json witness_to_json(const WitnessCertificate& w);

/// Reads and parses a JSON file; parse failures surface as InputError
/// with line and column.
json load_json_file(const std::string& path);
LeibnizAlgebra load_algebra_file(const std::string& path);
Representation load_representation_file(const std::string& path);

/// Canonical file text: two-space indent plus trailing newline.
std::string dump_file(const json& j);

} // namespace leibniz

#endif
