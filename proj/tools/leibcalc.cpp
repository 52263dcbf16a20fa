// leibcalc: exact computations with finite-dimensional Leibniz algebras
// given by structure constants. See README.md for the file formats and
// the exit-code contract (0 pass, 1 checked property fails, 2 bad input).

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "leibniz/verify.hpp"

namespace fs = std::filesystem;
using namespace leibniz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

// Catalog keys may be overridden by JSON files in $LEIBCALC_CATALOG_DIR.
std::optional<fs::path> catalog_override_dir() {
  const char* dir = std::getenv("LEIBCALC_CATALOG_DIR");
  if (!dir || !*dir) return std::nullopt;
  return fs::path(dir);
}

LeibnizAlgebra resolve_algebra(const std::string& key) {
  if (auto dir = catalog_override_dir()) {
    fs::path candidate = *dir / (key + ".json");
    if (fs::exists(candidate)) {
      LeibnizAlgebra a = load_algebra_file(candidate.string());
      if (auto bad = check_leibniz(a))
        throw InputError("override algebra '" + key + "' violates the Leibniz identity at (" +
                         std::to_string(bad->i) + "," + std::to_string(bad->j) + "," +
                         std::to_string(bad->k) + ")");
      return a;
    }
  }
  return catalog_build(key);
}

void print_subspace_line(const std::string& label, const Subspace& s) {
  std::cout << "  " << label << ": dim " << s.dim();
  if (s.dim() > 0) {
    std::cout << ", basis rows";
    for (std::size_t i = 0; i < s.dim(); ++i) {
      std::cout << " (";
      for (std::size_t j = 0; j < s.ambient_dim(); ++j)
        std::cout << (j ? "," : "") << s.basis().at(i, j).str();
      std::cout << ")";
    }
  }
  std::cout << "\n";
}

int cmd_check(const std::string& file, bool emit) {
  LeibnizAlgebra a = load_algebra_file(file);
  if (auto bad = check_leibniz(a)) {
    std::cerr << a.name() << ": Leibniz identity fails at basis triple (" << bad->i << "," << bad->j
              << "," << bad->k << ")\n";
    std::cerr << "  [e" << bad->i << ",[e" << bad->j << ",e" << bad->k << "]] = (";
    for (std::size_t t = 0; t < bad->lhs.size(); ++t)
      std::cerr << (t ? "," : "") << bad->lhs[t].str();
    std::cerr << ")\n  sum of the two right-hand products = (";
    for (std::size_t t = 0; t < bad->rhs.size(); ++t)
      std::cerr << (t ? "," : "") << bad->rhs[t].str();
    std::cerr << ")\n";
    return kExitPropertyFails;
  }
  if (emit)
    std::cout << dump_file(algebra_to_json(a));
  else
    std::cout << a.name() << ": ok (dim " << a.dim() << ", field " << a.field().str() << ")\n";
  return kExitOk;
}

int cmd_info(const std::string& file, bool as_json) {
  LeibnizAlgebra a = load_algebra_file(file);
  InvariantReport r = invariant_report(a);
  if (as_json) {
    std::cout << dump_file(invariant_report_to_json(r));
    return kExitOk;
  }
  std::cout << r.algebra << " (dim " << r.dim << ", field " << a.field().str() << ")\n";
  print_subspace_line("derived subalgebra", r.derived);
  print_subspace_line("Leibniz kernel", r.leib);
  print_subspace_line("left center", r.left_center);
  print_subspace_line("Lie center", r.lie_center);
  std::cout << "  perfect: " << (r.perfect ? "yes" : "no") << "\n";
  std::cout << "  Lie algebra: " << (r.lie ? "yes" : "no") << "\n";
  std::cout << "  center of quotient by Leibniz kernel trivial: "
            << (r.quotient_center_trivial ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_derivations(const std::string& file, bool with_lie, bool with_ideal_i, bool with_table) {
  LeibnizAlgebra a = load_algebra_file(file);
  DerivationAlgebra d = derivation_algebra(a);
  json out;
  out["algebra"] = a.name();
  out["dim"] = d.dim();
  json basis = json::array();
  for (const auto& b : d.basis) basis.push_back(matrix_to_json(b));
  out["basis"] = basis;
  if (with_table) out["bracket_table"] = algebra_to_json(d.bracket);
  if (with_lie) out["lie_derivations"] = subspace_to_json(lie_derivations(a, d).coords);
  if (with_ideal_i) out["ideal_I"] = subspace_to_json(ideal_I(a, d).coords);
  std::cout << dump_file(out);
  return kExitOk;
}

int cmd_holomorph(const std::string& file, const std::string& variant) {
  LeibnizAlgebra a = load_algebra_file(file);
  if (variant == "lie") {
    LieHolomorph h = hol_lie(a);
    std::cout << dump_file(algebra_to_json(h.algebra));
    std::cerr << "A component (first " << a.dim() << " coordinates) is an ideal: yes\n";
    return kExitOk;
  }
  Holomorph h = hol(a);
  std::cout << dump_file(algebra_to_json(h.algebra));
  std::cerr << "A component (first " << a.dim() << " coordinates) is an ideal: "
            << (h.a_component_ideal ? "yes" : "no") << "\n";
  return kExitOk;
}

Subspace parse_ideal_spec(const LeibnizAlgebra& a, const std::string& spec) {
  if (spec == "leib") return leibniz_kernel(a);
  if (spec == "derived") return derived_subalgebra(a);
  if (spec == "left-center") return left_center(a);
  if (spec == "lie-center") return lie_center(a);
  if (!spec.empty() && spec[0] == '@') {
    json j = load_json_file(spec.substr(1));
    if (!j.contains("basis")) throw InputError("subspace file needs a 'basis' matrix");
    Matrix rows = matrix_from_json(j.at("basis"), a.field());
    if (rows.rows() > 0 && rows.cols() != a.dim())
      throw InputError("subspace basis width does not match the algebra dimension");
    if (rows.rows() == 0) return a.zero_subspace();
    return Subspace::from_span(rows);
  }
  throw InputError("unknown ideal spec '" + spec +
                   "' (expected leib|derived|left-center|lie-center|@file.json)");
}

int cmd_witness(const std::string& file) {
  LeibnizAlgebra a = load_algebra_file(file);
  WitnessCertificate w = witness_nonperfect(a);
  std::cout << dump_file(witness_to_json(w));
  return kExitOk;
}

int cmd_tower(const std::string& file, std::size_t depth) {
  LeibnizAlgebra a = load_algebra_file(file);
  DerivationTower t = derivation_tower(a, depth);
  json out;
  out["algebra"] = a.name();
  out["depth"] = depth;
  json levels = json::array();
  for (std::size_t k = 0; k < t.levels.size(); ++k) {
    const TowerLevel& lv = t.levels[k];
    json entry;
    entry["level"] = k;
    entry["dim"] = lv.algebra.dim();
    entry["center_dim"] = lv.center_dim;
    entry["centralizer_dim"] = lv.centralizer_dim;
    if (lv.embedding) entry["embedding"] = matrix_to_json(lv.embedding->matrix());
    levels.push_back(entry);
  }
  out["levels"] = levels;
  std::cout << dump_file(out);
  return kExitOk;
}

int cmd_verify(const std::string& check, const std::vector<std::string>& keys,
               const std::vector<std::string>& files, std::size_t depth) {
  SuiteOptions opts;
  opts.tower_depth = depth;
  if (check != "all") {
    bool known = false;
    for (const auto& id : check_ids()) known = known || id == check;
    if (!known) throw InputError("unknown check '" + check + "'");
    opts.checks = {check};
  }
  std::vector<LeibnizAlgebra> algebras;
  if (keys.empty() && files.empty()) {
    for (const auto& key : catalog_keys()) algebras.push_back(resolve_algebra(key));
  } else {
    for (const auto& key : keys) algebras.push_back(resolve_algebra(key));
    for (const auto& f : files) algebras.push_back(load_algebra_file(f));
  }
  std::vector<VerificationReport> reports;
  for (const auto& a : algebras) {
    auto batch = run_for_algebra(a, opts);
    reports.insert(reports.end(), batch.begin(), batch.end());
  }
  for (const auto& r : reports) std::cout << r.to_json().dump() << "\n";
  std::cout << "\n";
  std::size_t holds = 0, unmet = 0, fails = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::holds) ++holds;
    if (r.verdict == Verdict::hypothesis_unmet) ++unmet;
    if (r.verdict == Verdict::fails) ++fails;
  }
  std::cout << "check results: " << reports.size() << " run, " << holds << " holds, " << unmet
            << " hypothesis_unmet, " << fails << " FAILS\n";
  for (const auto& r : reports)
    std::cout << "  " << verdict_str(r.verdict) << "  " << r.check << "  [" << r.instance << "]\n";
  return fails == 0 ? kExitOk : kExitPropertyFails;
}

int cmd_catalog_list() {
  auto dir = catalog_override_dir();
  for (const auto& e : catalog()) {
    bool overridden = dir && fs::exists(*dir / (e.key + ".json"));
    LeibnizAlgebra a = overridden ? resolve_algebra(e.key) : e.build();
    std::cout << e.key << "  dim " << a.dim() << "  " << e.notes
              << (overridden ? "  (overridden)" : "") << "\n";
  }
  if (dir && fs::is_directory(*dir)) {
    for (const auto& entry : fs::directory_iterator(*dir)) {
      if (entry.path().extension() != ".json") continue;
      std::string key = entry.path().stem().string();
      if (!catalog_has(key))
        std::cout << key << "  (from " << dir->string() << ")\n";
    }
  }
  return kExitOk;
}

int cmd_catalog_emit(const std::string& key) {
  std::cout << dump_file(algebra_to_json(resolve_algebra(key)));
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with finite-dimensional Leibniz algebras"};
  app.require_subcommand(1);

  std::string file, variant = "lie", ideal_spec = "leib", check_id = "all", rep_file, name;
  std::string file_b, key;
  std::vector<std::string> keys, files;
  std::size_t depth = 3, verify_depth = 2;
  bool as_json = false, with_lie = false, with_ideal_i = false, with_table = false, emit = false;

  auto* check = app.add_subcommand("check", "validate a file and check the Leibniz identity");
  check->add_option("file", file)->required();
  check->add_flag("--emit", emit, "re-emit the canonical serialization on success");

  auto* info = app.add_subcommand("info", "structural invariants of an algebra");
  info->add_option("file", file)->required();
  info->add_flag("--json", as_json, "emit the report as JSON instead of a table");

  auto* der = app.add_subcommand("derivations", "derivation algebra of an algebra");
  der->add_option("file", file)->required();
  der->add_flag("--lie", with_lie, "include the Lie-derivation ideal");
  der->add_flag("--ideal-I", with_ideal_i, "include the ideal of derivations into the Leibniz kernel");
  der->add_flag("--bracket-table", with_table, "include the commutator bracket table");

  auto* holo = app.add_subcommand("holomorph", "holomorph construction");
  holo->add_option("file", file)->required();
  holo->add_option("--variant", variant, "lie (default) or bms")
      ->check(CLI::IsMember({"lie", "bms"}));

  auto* cons = app.add_subcommand("construct", "product and quotient constructions");
  cons->require_subcommand(1);
  auto* hemi = cons->add_subcommand("hemisemidirect", "Lie algebra acting on a module");
  hemi->add_option("--rep", rep_file, "representation JSON file")->required();
  hemi->add_option("--name", name, "name for the constructed algebra");
  auto* dprod = cons->add_subcommand("direct-product", "componentwise product of two algebras");
  dprod->add_option("a", file)->required();
  dprod->add_option("b", file_b)->required();
  auto* quot = cons->add_subcommand("quotient", "quotient by an ideal");
  quot->add_option("a", file)->required();
  quot->add_option("--ideal", ideal_spec, "leib|derived|left-center|lie-center|@subspace.json");

  auto* wit = app.add_subcommand("witness", "non-perfectness witness certificate");
  wit->add_option("file", file)->required();

  auto* tow = app.add_subcommand("tower", "derivation tower report");
  tow->add_option("file", file)->required();
  tow->add_option("--depth", depth, "number of derivation levels above D(A)/I (default 3)");

  auto* ver = app.add_subcommand("verify", "run theorem checks and emit reports");
  ver->add_option("check", check_id, "check id or 'all'");
  ver->add_option("--algebra", keys, "catalog key (repeatable)");
  ver->add_option("--file", files, "algebra file (repeatable)");
  ver->add_option("--depth", verify_depth, "tower depth for the tower check (default 2)");

  auto* cat = app.add_subcommand("catalog", "built-in algebra catalog");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog entries");
  auto* emit_cmd = cat->add_subcommand("emit", "emit a catalog algebra as JSON");
  emit_cmd->add_option("key", key)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*check) return cmd_check(file, emit);
    if (*info) return cmd_info(file, as_json);
    if (*der) return cmd_derivations(file, with_lie, with_ideal_i, with_table);
    if (*holo) return cmd_holomorph(file, variant);
    if (*hemi) {
      Representation rep = load_representation_file(rep_file);
      std::cout << dump_file(algebra_to_json(hemisemidirect(rep, name)));
      return kExitOk;
    }
    if (*dprod) {
      LeibnizAlgebra a = load_algebra_file(file), b = load_algebra_file(file_b);
      std::cout << dump_file(algebra_to_json(direct_product(a, b)));
      return kExitOk;
    }
    if (*quot) {
      LeibnizAlgebra a = load_algebra_file(file);
      QuotientAlgebra q = quotient_algebra(a, parse_ideal_spec(a, ideal_spec));
      std::cout << dump_file(algebra_to_json(q.algebra));
      return kExitOk;
    }
    if (*wit) return cmd_witness(file);
    if (*tow) return cmd_tower(file, depth);
    if (*ver) return cmd_verify(check_id, keys, files, verify_depth);
    if (*cat) {
      if (*emit_cmd) return cmd_catalog_emit(key);
      return cmd_catalog_list();
    }
  } catch (const HypothesisError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitPropertyFails;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitBadInput;
}
