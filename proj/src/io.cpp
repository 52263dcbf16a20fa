#include "leibniz/io.hpp"

#include <fstream>
#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz {

json field_to_json(const Field& f) {
  json j;
  if (f.is_rational()) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "prime";
    j["p"] = f.p();
  }
  return j;
}

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw InputError("field descriptor must be an object with a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return Field::rationals();
  if (kind == "prime") {
    if (!j.contains("p")) throw InputError("prime field needs 'p'");
    return Field::prime(j.at("p").get<std::uint32_t>());
  }
  throw InputError("unknown field kind '" + kind + "'");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const Field& f) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows ? j.at(0).size() : 0;
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (!row.is_array() || row.size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = Scalar::parse(row.at(c).get<std::string>(), f);
  }
  return m;
}

json subspace_to_json(const Subspace& s) {
  json j;
  j["ambient_dim"] = s.ambient_dim();
  j["dim"] = s.dim();
  j["basis"] = matrix_to_json(s.basis());
  return j;
}

json linmap_to_json(const LinearMap& m) {
  json j;
  j["domain_dim"] = m.domain_dim();
  j["codomain_dim"] = m.codomain_dim();
  j["matrix"] = matrix_to_json(m.matrix());
  return j;
}

json algebra_to_json(const LeibnizAlgebra& a) {
  json j;
  j["name"] = a.name();
  j["field"] = field_to_json(a.field());
  j["dim"] = a.dim();
  j["orientation"] = "left";
  json sc = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json plane = json::array();
    for (std::size_t jj = 0; jj < a.dim(); ++jj) {
      json line = json::array();
      for (std::size_t k = 0; k < a.dim(); ++k) line.push_back(a.c(i, jj, k).str());
      plane.push_back(std::move(line));
    }
    sc.push_back(std::move(plane));
  }
  j["sc"] = std::move(sc);
  return j;
}

LeibnizAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw InputError("algebra file must be a JSON object");
  for (const char* key : {"name", "field", "dim", "orientation", "sc"})
    if (!j.contains(key)) throw InputError(std::string("algebra file missing '") + key + "'");
  std::string name = j.at("name").get<std::string>();
  Field f = field_from_json(j.at("field"));
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::string orient = j.at("orientation").get<std::string>();
  if (orient != "left" && orient != "right")
    throw InputError("orientation must be 'left' or 'right'");
  const json& sc = j.at("sc");
  if (!sc.is_array() || sc.size() != dim)
    throw InputError("sc must be a dense dim x dim x dim array");
  std::vector<Scalar> tensor(dim * dim * dim, Scalar::zero(f));
  for (std::size_t i = 0; i < dim; ++i) {
    const json& plane = sc.at(i);
    if (!plane.is_array() || plane.size() != dim) throw InputError("sc must be dense (ragged slice)");
    for (std::size_t jj = 0; jj < dim; ++jj) {
      const json& line = plane.at(jj);
      if (!line.is_array() || line.size() != dim) throw InputError("sc must be dense (ragged row)");
      for (std::size_t k = 0; k < dim; ++k)
        tensor[(i * dim + jj) * dim + k] = Scalar::parse(line.at(k).get<std::string>(), f);
    }
  }
  return LeibnizAlgebra::from_structure_constants(
      std::move(name), f, dim, std::move(tensor),
      orient == "left" ? Orientation::left : Orientation::right);
}

json representation_to_json(const Representation& r) {
  json j;
  j["lie"] = algebra_to_json(r.lie);
  j["module_dim"] = r.module_dim;
  json action = json::array();
  for (const auto& m : r.action) action.push_back(matrix_to_json(m));
  j["action"] = std::move(action);
  return j;
}

Representation representation_from_json(const json& j) {
  if (!j.is_object()) throw InputError("representation file must be a JSON object");
  for (const char* key : {"lie", "module_dim", "action"})
    if (!j.contains(key)) throw InputError(std::string("representation file missing '") + key + "'");
  LeibnizAlgebra lie = algebra_from_json(j.at("lie"));
  std::size_t module_dim = j.at("module_dim").get<std::size_t>();
  const json& action = j.at("action");
  if (!action.is_array() || action.size() != lie.dim())
    throw InputError("action must list one matrix per basis vector");
  std::vector<Matrix> mats;
  for (const auto& jm : action) mats.push_back(matrix_from_json(jm, lie.field()));
  return Representation{std::move(lie), module_dim, std::move(mats)};
}

json invariant_report_to_json(const InvariantReport& r) {
  json j;
  j["algebra"] = r.algebra;
  j["dim"] = r.dim;
  j["derived"] = subspace_to_json(r.derived);
  j["leib"] = subspace_to_json(r.leib);
  j["left_center"] = subspace_to_json(r.left_center);
  j["lie_center"] = subspace_to_json(r.lie_center);
  j["perfect"] = r.perfect;
  j["lie"] = r.lie;
  j["quotient_center_trivial"] = r.quotient_center_trivial;
  return j;
}

json witness_to_json(const WitnessCertificate& w) {
  json j;
  j["ambient"] = algebra_to_json(w.ambient);
  j["embedded_a"] = subspace_to_json(w.embedded_a);
  j["f"] = linmap_to_json(w.f);
  j["pi"] = linmap_to_json(w.pi);
  j["checks"] = {{"f_is_derivation", w.f_is_derivation},
                 {"f_is_lie_derivation", w.f_is_lie_derivation},
                 {"f_escapes_a", w.f_escapes_a}};
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Convert the byte offset into a line/column pair.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("JSON parse error in '" + path + "' at line " + std::to_string(line) +
                     ", column " + std::to_string(col));
  }
}

LeibnizAlgebra load_algebra_file(const std::string& path) {
  return algebra_from_json(load_json_file(path));
}

Representation load_representation_file(const std::string& path) {
  return representation_from_json(load_json_file(path));
}

std::string dump_file(const json& j) {
  return j.dump(2) + "\n";
}

} // namespace leibniz
