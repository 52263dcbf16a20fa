#include "leibniz/algebra.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

LeibnizAlgebra LeibnizAlgebra::from_structure_constants(std::string name, const Field& field,
                                                        std::size_t dim, std::vector<Scalar> sc,
                                                        Orientation orientation) {
  if (sc.size() != dim * dim * dim)
    throw InputError("structure tensor of " + name + " must have dim^3 entries");
  for (const auto& s : sc) require_same_field(field, s.field(), "structure tensor");
  LeibnizAlgebra a;
  a.name_ = std::move(name);
  a.field_ = field;
  a.dim_ = dim;
  if (orientation == Orientation::right) {
    // Right Leibniz ingest: transpose the two argument slots.
    std::vector<Scalar> t(sc.size(), Scalar::zero(field));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          t[(i * dim + j) * dim + k] = sc[(j * dim + i) * dim + k];
    sc = std::move(t);
  }
  a.sc_ = std::move(sc);
  return a;
}

Vec LeibnizAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec v(field_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
  return v;
}

Vec LeibnizAlgebra::product(const Vec& x, const Vec& y) const {
  require_same_field(field_, x.field(), "product");
  require_same_field(field_, y.field(), "product");
  if (x.size() != dim_ || y.size() != dim_) throw InputError("product: dimension mismatch");
  Vec out(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar coeff = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& t = c(i, j, k);
        if (!t.is_zero()) out[k] += coeff * t;
      }
    }
  }
  return out;
}

Matrix LeibnizAlgebra::left_mult(const Vec& x) const {
  require_same_field(field_, x.field(), "left_mult");
  if (x.size() != dim_) throw InputError("left_mult: dimension mismatch");
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& t = c(i, j, k);
        if (!t.is_zero()) m.at(k, j) += x[i] * t;
      }
  }
  return m;
}

Matrix LeibnizAlgebra::left_mult_basis(std::size_t i) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = c(i, j, k);
  return m;
}

LeibnizAlgebra LeibnizAlgebra::renamed(std::string name) const {
  LeibnizAlgebra a = *this;
  a.name_ = std::move(name);
  return a;
}

bool LeibnizAlgebra::same_table(const LeibnizAlgebra& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && sc_ == o.sc_;
}

std::optional<LeibnizViolation> check_leibniz(const LeibnizAlgebra& a) {
  // Structure tensors are sparse in practice, so iterate nonzero entries
  // only; the dense n^5 sweep is far too slow for holomorph-sized inputs.
  std::size_t n = a.dim();
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> slice(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero()) slice[i * n + j].emplace_back(k, a.c(i, j, k));

  Vec acc(a.field(), n);
  std::vector<std::size_t> touched;
  auto add = [&](std::size_t left, std::size_t right, const Scalar& coeff, bool negate) {
    for (const auto& [k, c] : slice[left * n + right]) {
      Scalar term = coeff * c;
      if (acc[k].is_zero()) touched.push_back(k);
      if (negate)
        acc[k] -= term;
      else
        acc[k] += term;
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // [e_i, [e_j, e_k]] - [[e_i, e_j], e_k] - [e_j, [e_i, e_k]]
        for (const auto& [l, c] : slice[j * n + k]) add(i, l, c, false);
        for (const auto& [l, c] : slice[i * n + j]) add(l, k, c, true);
        for (const auto& [l, c] : slice[i * n + k]) add(j, l, c, true);
        bool zero = true;
        for (std::size_t t : touched)
          if (!acc[t].is_zero()) {
            zero = false;
            break;
          }
        if (!zero) {
          Matrix li = a.left_mult_basis(i);
          Vec lhs = li.apply(a.bracket_basis(j, k));
          Vec rhs = a.product(a.bracket_basis(i, j), a.basis_vector(k)) +
                    a.product(a.basis_vector(j), li.apply(a.basis_vector(k)));
          return LeibnizViolation{i, j, k, std::move(lhs), std::move(rhs)};
        }
        for (std::size_t t : touched) acc[t] = Scalar::zero(a.field());
        touched.clear();
      }
  return std::nullopt;
}

bool is_lie(const LeibnizAlgebra& a) {
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!a.c(i, i, k).is_zero()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.c(i, j, k) != -a.c(j, i, k)) return false;
  return true;
}

bool is_subalgebra(const LeibnizAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw InputError("is_subalgebra: ambient mismatch");
  for (std::size_t u = 0; u < s.dim(); ++u)
    for (std::size_t v = 0; v < s.dim(); ++v)
      if (!s.contains(a.product(s.basis_vector(u), s.basis_vector(v)))) return false;
  return true;
}

std::optional<IdealViolation> find_ideal_violation(const LeibnizAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw InputError("ideal check: ambient mismatch");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec ei = a.basis_vector(i);
    for (std::size_t v = 0; v < s.dim(); ++v) {
      if (!s.contains(a.product(ei, s.basis_vector(v))))
        return IdealViolation{true, i, v};
      if (!s.contains(a.product(s.basis_vector(v), ei)))
        return IdealViolation{false, i, v};
    }
  }
  return std::nullopt;
}

bool is_left_ideal(const LeibnizAlgebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t v = 0; v < s.dim(); ++v)
      if (!s.contains(a.product(a.basis_vector(i), s.basis_vector(v)))) return false;
  return true;
}

bool is_right_ideal(const LeibnizAlgebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t v = 0; v < s.dim(); ++v)
      if (!s.contains(a.product(s.basis_vector(v), a.basis_vector(i)))) return false;
  return true;
}

bool is_ideal(const LeibnizAlgebra& a, const Subspace& s) {
  return !find_ideal_violation(a, s).has_value();
}

namespace {

// One span-growing sweep per round; dimension strictly increases until the
// fixed point, so ambient dimension bounds the number of rounds.
Subspace closure_fixpoint(const LeibnizAlgebra& a, Subspace current,
                          const std::optional<Subspace>& against) {
  for (;;) {
    std::vector<Vec> gen;
    const Subspace& partners = against ? *against : current;
    for (std::size_t u = 0; u < partners.dim(); ++u) {
      Vec pu = partners.basis_vector(u);
      for (std::size_t v = 0; v < current.dim(); ++v) {
        Vec cv = current.basis_vector(v);
        Vec left = a.product(pu, cv);
        if (!current.contains(left)) gen.push_back(std::move(left));
        Vec right = a.product(cv, pu);
        if (!current.contains(right)) gen.push_back(std::move(right));
      }
    }
    if (gen.empty()) return current;
    Matrix stack = Matrix::vstack(current.basis(), Matrix::from_rows(a.field(), a.dim(), gen));
    Subspace next = Subspace::from_span(stack);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

} // namespace

Subspace subalgebra_closure(const LeibnizAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw InputError("subalgebra_closure: ambient mismatch");
  return closure_fixpoint(a, s, std::nullopt);
}

Subspace ideal_closure(const LeibnizAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw InputError("ideal_closure: ambient mismatch");
  return closure_fixpoint(a, s, a.full_space());
}

Subspace ideal_closure_within(const LeibnizAlgebra& a, const Subspace& w, const Subspace& seed) {
  if (!w.contains(seed)) throw InputError("ideal_closure_within: seed escapes the subalgebra");
  // Products of elements of w with elements of the growing span stay in w
  // whenever w is a subalgebra, so the fixed point lives inside w.
  Subspace result = closure_fixpoint(a, seed, w);
  if (!w.contains(result))
    throw InternalError("ideal_closure_within: closure escaped the ambient subalgebra");
  return result;
}

QuotientAlgebra quotient_algebra(const LeibnizAlgebra& a, const Subspace& ideal,
                                 const std::string& name) {
  if (ideal.ambient_dim() != a.dim()) throw InputError("quotient: ambient mismatch");
  require_same_field(a.field(), ideal.field(), "quotient");
  if (auto bad = find_ideal_violation(a, ideal)) {
    throw InputError("quotient of " + a.name() + ": subspace is not an ideal (product of basis pair " +
                     (bad->left_factor_ambient ? "(e" + std::to_string(bad->ambient_index) + ", s" +
                                                     std::to_string(bad->subspace_index) + ")"
                                               : "(s" + std::to_string(bad->subspace_index) + ", e" +
                                                     std::to_string(bad->ambient_index) + ")") +
                     " escapes)");
  }
  QuotientCoordinates qc = quotient_coordinates(a.dim(), ideal);
  std::size_t m = qc.reps.size();
  std::vector<Scalar> sc(m * m * m, Scalar::zero(a.field()));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      Vec prod = qc.projection.apply(
          a.product(qc.section.apply(Vec::unit(a.field(), m, x)), qc.section.apply(Vec::unit(a.field(), m, y))));
      for (std::size_t k = 0; k < m; ++k) sc[(x * m + y) * m + k] = prod[k];
    }
  std::string qname = name.empty() ? a.name() + "/(" + std::to_string(ideal.dim()) + "-dim ideal)" : name;
  LeibnizAlgebra q = LeibnizAlgebra::from_structure_constants(qname, a.field(), m, std::move(sc));
  return QuotientAlgebra{std::move(q), qc.projection, qc.section, qc.reps};
}

LeibnizAlgebra direct_product(const LeibnizAlgebra& a, const LeibnizAlgebra& b,
                              const std::string& name) {
  require_same_field(a.field(), b.field(), "direct product");
  std::size_t n = a.dim(), m = b.dim(), d = n + m;
  std::vector<Scalar> sc(d * d * d, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sc[(i * d + j) * d + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) sc[((n + i) * d + (n + j)) * d + (n + k)] = b.c(i, j, k);
  std::string pname = name.empty() ? a.name() + "_x_" + b.name() : name;
  return LeibnizAlgebra::from_structure_constants(pname, a.field(), d, std::move(sc));
}

SubalgebraView subalgebra_as_algebra(const LeibnizAlgebra& a, const Subspace& s,
                                     const std::string& name) {
  if (!is_subalgebra(a, s)) throw InputError("subalgebra view: subspace not closed under products");
  std::size_t m = s.dim();
  std::vector<Scalar> sc(m * m * m, Scalar::zero(a.field()));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      auto coords = s.coordinates_of(a.product(s.basis_vector(u), s.basis_vector(v)));
      if (!coords) throw InternalError("subalgebra view: product escaped span");
      for (std::size_t k = 0; k < m; ++k) sc[(u * m + v) * m + k] = (*coords)[k];
    }
  std::string sname = name.empty() ? a.name() + "|sub" + std::to_string(m) : name;
  LeibnizAlgebra alg = LeibnizAlgebra::from_structure_constants(sname, a.field(), m, std::move(sc));
  return SubalgebraView{std::move(alg), LinearMap(s.basis().transposed()), s};
}

AlgebraHom::AlgebraHom(LeibnizAlgebra domain, LeibnizAlgebra codomain, LinearMap map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  if (map_.domain_dim() != domain_.dim() || map_.codomain_dim() != codomain_.dim())
    throw InputError("algebra hom: matrix shape does not match algebras");
  require_same_field(domain_.field(), codomain_.field(), "algebra hom");
}

HomCertificate certify_hom(const AlgebraHom& h) {
  const LeibnizAlgebra& a = h.domain();
  const LeibnizAlgebra& b = h.codomain();
  HomCertificate cert;
  cert.product_preserving = true;
  for (std::size_t i = 0; i < a.dim() && cert.product_preserving; ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = h.apply(a.bracket_basis(i, j));
      Vec rhs = b.product(h.apply(a.basis_vector(i)), h.apply(a.basis_vector(j)));
      if (lhs != rhs) {
        cert.product_preserving = false;
        cert.failing_pair = {i, j};
        break;
      }
    }
  cert.kernel = null_space(h.matrix());
  cert.injective = cert.kernel.dim() == 0;
  cert.surjective = rank(h.matrix()) == b.dim();
  return cert;
}

} // namespace leibniz
