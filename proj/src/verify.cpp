#include "leibniz/verify.hpp"

#include "leibniz/errors.hpp"
#include "leibniz/recheck.hpp"

namespace leibniz {

namespace {

Subspace first_coords(const Field& f, std::size_t ambient, std::size_t n) {
  Matrix rows(f, n, ambient);
  for (std::size_t i = 0; i < n; ++i) rows.at(i, i) = Scalar::one(f);
  return Subspace::from_span(rows);
}

std::vector<Vec> basis_rows(const Subspace& s) {
  return recheck::rows_of(s.basis());
}

VerificationReport report(std::string check, std::string instance, Verdict v, std::string detail,
                          json cert = json::object()) {
  return VerificationReport{std::move(check), std::move(instance), v, std::move(detail),
                            std::move(cert)};
}

} // namespace

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::hypothesis_unmet: return "hypothesis_unmet";
    default: return "FAILS";
  }
}

json VerificationReport::to_json() const {
  json j;
  j["check"] = check;
  j["instance"] = instance;
  j["verdict"] = verdict_str(verdict);
  j["detail"] = detail;
  j["certificate"] = certificate;
  return j;
}

const LieHolomorph& Instances::k() {
  if (!k_) k_ = hol_lie(a_);
  return *k_;
}

const LieHolomorph& Instances::m() {
  if (!m_) m_ = hol_lie(k().algebra);
  return *m_;
}

const WitnessCertificate& Instances::witness() {
  if (!w_) w_ = witness_nonperfect(a_);
  return *w_;
}

const LieHolomorph& Instances::witness_holomorph() {
  if (!wh_) wh_ = hol_lie(witness().ambient);
  return *wh_;
}

Subspace Instances::a_in_k() {
  return first_coords(a_.field(), k().algebra.dim(), a_.dim());
}

Subspace Instances::a_in_m() {
  return first_coords(a_.field(), m().algebra.dim(), a_.dim());
}

Subspace Instances::k_in_m() {
  return first_coords(a_.field(), m().algebra.dim(), k().algebra.dim());
}

Subspace Instances::a_in_witness_holomorph() {
  return first_coords(a_.field(), witness_holomorph().algebra.dim(), a_.dim());
}

Subspace Instances::witness_in_holomorph() {
  return first_coords(a_.field(), witness_holomorph().algebra.dim(), witness().ambient.dim());
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "leibniz-identity",
      "ideal-transitivity",
      "characteristic-ideal",
      "subideal-equivalence",
      "normalizer-self-normalizing",
      "derivation-restriction",
      "derivation-tower-embedding",
      "derivations-complete",
      "second-derivation-quotient",
  };
  return ids;
}

VerificationReport verify_leibniz_identity(Instances& inst) {
  const LeibnizAlgebra& a = inst.algebra();
  std::string id = "leibniz-identity";
  json checked = json::array();
  auto run = [&](const LeibnizAlgebra& alg) -> bool {
    auto bad = check_leibniz(alg);
    json entry;
    entry["algebra"] = alg.name();
    entry["dim"] = alg.dim();
    entry["ok"] = !bad.has_value();
    checked.push_back(entry);
    return !bad.has_value();
  };
  bool ok = run(a);
  try {
    ok = run(hol(a).algebra) && ok;
    ok = run(inst.k().algebra) && ok;
    ok = run(inst.m().algebra) && ok;
    ok = run(quotient_algebra(a, leibniz_kernel(a), a.name() + "/leib").algebra) && ok;
    if (!is_perfect(a)) {
      ok = run(inst.witness().ambient) && ok;
      ok = run(inst.witness_holomorph().algebra) && ok;
    }
  } catch (const Error& e) {
    return report(id, a.name(), Verdict::fails, std::string("construction failed: ") + e.what());
  }
  json cert;
  cert["algebras"] = checked;
  if (!ok) return report(id, a.name(), Verdict::fails, "a constructed algebra violates the identity", cert);
  return report(id, a.name(), Verdict::holds, "identity holds on the algebra and all constructions",
                cert);
}

VerificationReport verify_ideal_transitivity(Instances& inst) {
  const LeibnizAlgebra& a = inst.algebra();
  std::string id = "ideal-transitivity";
  if (!is_perfect(a))
    return report(id, a.name(), Verdict::hypothesis_unmet, a.name() + " is not perfect");
  const LieHolomorph& k = inst.k();
  const LieHolomorph& m = inst.m();
  std::string instance =
      a.name() + " in hol_lie(" + a.name() + ") in hol_lie(hol_lie(" + a.name() + "))";
  Subspace a_k = inst.a_in_k(), a_m = inst.a_in_m(), k_m = inst.k_in_m();
  if (!is_ideal(k.algebra, a_k) || !is_ideal(m.algebra, k_m))
    return report(id, instance, Verdict::fails, "holomorph chain premise failed");
  if (!is_ideal(m.algebra, a_m))
    return report(id, instance, Verdict::fails, "perfect subideal is not an ideal of the top algebra");
  bool rc = recheck::ideal_chain(m.algebra, {basis_rows(a_m), basis_rows(k_m),
                                             basis_rows(m.algebra.full_space())}) &&
            recheck::ideal_link(m.algebra, basis_rows(a_m), basis_rows(m.algebra.full_space()));
  json cert;
  cert["chain_dims"] = {a.dim(), k.algebra.dim(), m.algebra.dim()};
  cert["a_basis"] = matrix_to_json(a_m.basis());
  cert["k_basis"] = matrix_to_json(k_m.basis());
  cert["recheck"] = rc;
  if (!rc) return report(id, instance, Verdict::fails, "certificate failed independent revalidation", cert);
  return report(id, instance, Verdict::holds, "ideal of an ideal is an ideal of the whole algebra",
                cert);
}

VerificationReport verify_characteristic_ideal(Instances& inst) {
  const LeibnizAlgebra& a = inst.algebra();
  std::string id = "characteristic-ideal";
  if (is_perfect(a)) {
    const LieHolomorph& k = inst.k();
    std::string instance = a.name() + " in hol_lie(" + a.name() + ")";
    Subspace a_k = inst.a_in_k();
    if (!is_ideal(k.algebra, a_k))
      return report(id, instance, Verdict::fails, "embedded algebra is not an ideal");
    DerivationAlgebra dk = derivation_algebra(k.algebra);
    auto rows = basis_rows(a_k);
    json ders = json::array();
    for (std::size_t t = 0; t < dk.dim(); ++t) {
      for (std::size_t r = 0; r < a_k.dim(); ++r)
        if (!a_k.contains(dk.basis[t].apply(a_k.basis_vector(r))))
          return report(id, instance, Verdict::fails,
                        "derivation #" + std::to_string(t) + " moves the perfect ideal");
      ders.push_back(matrix_to_json(dk.basis[t]));
    }
    bool rc = true;
    for (std::size_t t = 0; t < dk.dim() && rc; ++t) {
      rc = recheck::derivation(k.algebra, dk.basis[t]);
      for (const Vec& r : rows)
        if (rc && !recheck::member(rows, dk.basis[t].apply(r))) rc = false;
    }
    json cert;
    cert["derivation_count"] = dk.dim();
    cert["derivation_basis"] = ders;
    cert["recheck"] = rc;
    if (!rc) return report(id, instance, Verdict::fails, "certificate failed independent revalidation", cert);
    return report(id, instance, Verdict::holds,
                  "all " + std::to_string(dk.dim()) + " basis derivations preserve the ideal", cert);
  }
  // Converse route: exhibit an ambient algebra and a Lie-derivation that
  // moves the embedded copy.
  const WitnessCertificate& w = inst.witness();
  std::string instance = a.name() + " in witness(" + a.name() + ")";
  if (!is_ideal(w.ambient, w.embedded_a))
    return report(id, instance, Verdict::fails, "witness ambient does not contain the algebra as an ideal");
  auto rows = basis_rows(w.embedded_a);
  bool rc = recheck::derivation(w.ambient, w.f.matrix()) &&
            recheck::lie_derivation(w.ambient, w.f.matrix()) &&
            recheck::escapes(w.ambient, w.f.matrix(), rows) &&
            recheck::ideal_link(w.ambient, rows, basis_rows(w.ambient.full_space()));
  json cert = witness_to_json(w);
  cert["converse"] = true;
  cert["recheck"] = rc;
  if (!rc) return report(id, instance, Verdict::fails, "witness failed independent revalidation", cert);
  return report(id, instance, Verdict::holds,
                "non-perfect algebra admits an ideal embedding moved by a Lie-derivation", cert);
}

VerificationReport verify_subideal_equivalence(Instances& inst) {
  const LeibnizAlgebra& a = inst.algebra();
  std::string id = "subideal-equivalence";
  if (is_perfect(a)) {
    const LieHolomorph& m = inst.m();
    std::string instance =
        a.name() + " in hol_lie(hol_lie(" + a.name() + ")), subideal vs ideal computed independently";
    Subspace a_m = inst.a_in_m();
    SubidealResult si = is_subideal(m.algebra, a_m);
    bool ideal = is_ideal(m.algebra, a_m);
    json cert;
    cert["subideal"] = si.subideal;
    cert["ideal"] = ideal;
    json chain = json::array();
    std::vector<std::vector<Vec>> chain_rows;
    for (const auto& s : si.chain) {
      chain.push_back(subspace_to_json(s));
      chain_rows.push_back(basis_rows(s));
    }
    cert["chain"] = chain;
    if (!(si.subideal && ideal))
      return report(id, instance, Verdict::fails, "subideal and ideal verdicts disagree", cert);
    bool rc = recheck::ideal_chain(m.algebra, chain_rows);
    cert["recheck"] = rc;
    if (!rc) return report(id, instance, Verdict::fails, "chain failed independent revalidation", cert);
    return report(id, instance, Verdict::holds, "subideal and ideal agree for the perfect algebra", cert);
  }
  const LieHolomorph& wh = inst.witness_holomorph();
  std::string instance = a.name() + " in hol_lie(witness(" + a.name() + "))";
  Subspace a_m = inst.a_in_witness_holomorph();
  SubidealResult si = is_subideal(wh.algebra, a_m);
  bool ideal = is_ideal(wh.algebra, a_m);
  json cert;
  cert["subideal"] = si.subideal;
  cert["ideal"] = ideal;
  json chain = json::array();
  std::vector<std::vector<Vec>> chain_rows;
  for (const auto& s : si.chain) {
    chain.push_back(subspace_to_json(s));
    chain_rows.push_back(basis_rows(s));
  }
  cert["chain"] = chain;
  if (!si.subideal || ideal)
    return report(id, instance, Verdict::fails,
                  "expected a subideal-but-not-ideal embedding for a non-perfect algebra", cert);
  bool rc = recheck::ideal_chain(wh.algebra, chain_rows) &&
            !recheck::ideal_link(wh.algebra, basis_rows(a_m), basis_rows(wh.algebra.full_space()));
  cert["recheck"] = rc;
  if (!rc) return report(id, instance, Verdict::fails, "chain failed independent revalidation", cert);
  return report(id, instance, Verdict::holds, "subideal embedding that is not an ideal confirmed",
                cert);
}

VerificationReport verify_normalizer_self_normalizing(Instances& inst) {
  const LeibnizAlgebra& a = inst.algebra();
  std::string id = "normalizer-self-normalizing";
  if (!is_perfect(a))
    return report(id, a.name(), Verdict::hypothesis_unmet, a.name() + " is not perfect");
  struct Case {
    const LeibnizAlgebra* ambient;
    Subspace sub;
    std::string label;
  };
  std::vector<Case> cases;
  cases.push_back({&inst.k().algebra, inst.a_in_k(), "hol_lie(" + a.name() + ")"});
  cases.push_back({&inst.m().algebra, inst.a_in_m(), "hol_lie(hol_lie(" + a.name() + "))"});
  json cert = json::array();
  for (const auto& c : cases) {
    Subspace n1 = normalizer(*c.ambient, c.sub);
    Subspace n2 = normalizer(*c.ambient, n1);
    json entry;
    entry["ambient"] = c.label;
    entry["normalizer_dim"] = n1.dim();
    entry["renormalizer_dim"] = n2.dim();
    entry["normalizer_basis"] = matrix_to_json(n1.basis());
    bool equal = n1 == n2;
    // Independent containment both ways plus the normalizing property.
    auto rows1 = basis_rows(n1), rows2 = basis_rows(n2);
    bool rc = equal;
    for (const Vec& v : rows2)
      if (rc && !recheck::member(rows1, v)) rc = false;
    for (const Vec& v : rows1)
      if (rc && !recheck::member(rows2, v)) rc = false;
    entry["recheck"] = rc;
    cert.push_back(entry);
    if (!equal || !rc)
      return report(id, a.name() + " in " + c.label, Verdict::fails,
                    "normalizer is not self-normalizing", json{{"cases", cert}});
  }
  return report(id, a.name() + " in both holomorph levels", Verdict::holds,
                "normalizer is self-normalizing", json{{"cases", cert}});
}

VerificationReport verify_derivation_restriction(Instances& inst) {
  const LeibnizAlgebra& a = inst.algebra();
  std::string id = "derivation-restriction";
  struct Attempt {
    std::string label;
    Subspace sub;
  };
  std::vector<Attempt> attempts;
  attempts.push_back({"identity ideal (K = A)", a.full_space()});
  Subspace leib = leibniz_kernel(a);
  if (leib.dim() > 0 && leib.dim() < a.dim()) attempts.push_back({"Leibniz kernel", leib});
  json cases = json::array();
  bool any_holds = false, all_checked = true;
  for (const auto& at : attempts) {
    json entry;
    entry["ideal"] = at.label;
    try {
      RestrictionEmbedding emb = restriction_embedding(a, at.sub);
      bool rc = recheck::hom(emb.hom.domain(), emb.hom.codomain(), emb.hom.matrix()) &&
                recheck::injective(emb.hom.matrix());
      entry["embedding"] = linmap_to_json(emb.hom.map());
      entry["status"] = rc ? "embedded" : "recheck_failed";
      entry["recheck"] = rc;
      if (!rc) all_checked = false;
      any_holds = any_holds || rc;
    } catch (const HypothesisError& e) {
      entry["status"] = "refused";
      entry["reason"] = e.what();
    }
    cases.push_back(entry);
  }
  json cert;
  cert["cases"] = cases;
  if (!all_checked)
    return report(id, a.name(), Verdict::fails, "an embedding failed independent revalidation", cert);
  if (any_holds)
    return report(id, a.name(), Verdict::holds, "restriction embeds the derivation algebra", cert);
  return report(id, a.name(), Verdict::hypothesis_unmet,
                "preconditions fail for every attempted ideal; reasons recorded", cert);
}

TowerEmbeddings tower_embeddings(const LeibnizAlgebra& a, std::size_t depth) {
  TowerEmbeddings out;
  out.quotient = quotient_algebra(a, leibniz_kernel(a), a.name() + "/leib");
  const LeibnizAlgebra& q = out.quotient.algebra;
  out.der_quotient = derivation_algebra(q);
  out.tower = derivation_tower(a, depth);

  DerivationAlgebra d = derivation_algebra(a);
  out.i_coords = ideal_I(a, d).coords;
  PhiToDL phi = phi_to_DL(a);
  out.phi_kernel = phi.kernel;

  // Identify the canonical quotient with L(A): x + Leib(A) -> L_x.
  Matrix mq = phi.lmult.rep.matrix() * out.quotient.section.matrix();
  AlgebraHom q_iso(q, phi.lmult.algebra.bracket, LinearMap(mq));
  HomCertificate iso_cert = certify_hom(q_iso);
  if (!iso_cert.product_preserving || !iso_cert.injective || !iso_cert.surjective)
    throw InternalError("A/Leib(A) and L(A) failed to identify for " + a.name());
  auto mq_inv = inverse(mq);
  if (!mq_inv) throw InternalError("quotient identification is singular");

  // Conjugation D(L(A)) -> D(A/Leib(A)).
  Matrix conj(a.field(), out.der_quotient.dim(), phi.der_l.dim());
  for (std::size_t t = 0; t < phi.der_l.dim(); ++t) {
    Matrix g = *mq_inv * phi.der_l.basis[t] * mq;
    Vec coords = out.der_quotient.coordinates_of(g);
    for (std::size_t r = 0; r < out.der_quotient.dim(); ++r) conj.at(r, t) = coords[r];
  }

  // Level 0: the induced map on D(A)/I, whose kernel must be exactly I.
  if (!(out.phi_kernel == out.i_coords))
    throw InternalError("kernel of the derivation transport differs from I for " + a.name());
  const TowerLevel& level0 = out.tower.levels[0];
  QuotientCoordinates qc = quotient_coordinates(d.dim(), out.i_coords);
  Matrix e0 = conj * phi.hom.matrix() * qc.section.matrix();
  {
    AlgebraHom h(level0.algebra, out.der_quotient.bracket, LinearMap(e0));
    HomCertificate c = certify_hom(h);
    if (!c.product_preserving || !c.injective)
      throw InternalError("level 0 failed to embed into D(A/Leib) for " + a.name());
  }
  out.level_maps.push_back(e0);

  // The image of the quotient inside each tower level, transported along
  // the level embeddings.
  Matrix t_prev = level0.embedding->matrix() * mq; // Q -> level-0 coordinates
  for (std::size_t kk = 1; kk < out.tower.levels.size(); ++kk) {
    const LeibnizAlgebra& h_prev = out.tower.levels[kk - 1].algebra;
    Subspace s_prev = Subspace::from_span(t_prev.transposed());
    RestrictionEmbedding rest = restriction_embedding(h_prev, s_prev);
    if (!rest.hom.domain().same_table(out.tower.levels[kk].algebra))
      throw InternalError("tower level and restriction domain disagree");
    // Identify the quotient with the embedded image.
    Matrix psi(a.field(), s_prev.dim(), q.dim());
    for (std::size_t j = 0; j < q.dim(); ++j) {
      auto coords = s_prev.coordinates_of(t_prev.col(j));
      if (!coords) throw InternalError("transported image lost a basis vector");
      for (std::size_t r = 0; r < s_prev.dim(); ++r) psi.at(r, j) = (*coords)[r];
    }
    AlgebraHom psi_hom(q, rest.sub.algebra, LinearMap(psi));
    HomCertificate psi_cert = certify_hom(psi_hom);
    if (!psi_cert.product_preserving || !psi_cert.injective || !psi_cert.surjective)
      throw InternalError("embedded copy of A/Leib stopped being isomorphic to it");
    auto psi_inv = inverse(psi);
    if (!psi_inv) throw InternalError("embedded quotient identification is singular");
    Matrix conj_k(a.field(), out.der_quotient.dim(), rest.der_sub.dim());
    for (std::size_t t = 0; t < rest.der_sub.dim(); ++t) {
      Matrix g = *psi_inv * rest.der_sub.basis[t] * psi;
      Vec coords = out.der_quotient.coordinates_of(g);
      for (std::size_t r = 0; r < out.der_quotient.dim(); ++r) conj_k.at(r, t) = coords[r];
    }
    Matrix ek = conj_k * rest.hom.matrix();
    AlgebraHom h(out.tower.levels[kk].algebra, out.der_quotient.bracket, LinearMap(ek));
    HomCertificate c = certify_hom(h);
    if (!c.product_preserving || !c.injective)
      throw InternalError("tower level " + std::to_string(kk) + " failed to embed");
    out.level_maps.push_back(ek);
    t_prev = out.tower.levels[kk].embedding->matrix() * t_prev;
  }
  return out;
}

VerificationReport verify_derivation_tower_embedding(Instances& inst, std::size_t depth) {
  const LeibnizAlgebra& a = inst.algebra();
  std::string id = "derivation-tower-embedding";
  if (!is_perfect(a))
    return report(id, a.name(), Verdict::hypothesis_unmet, a.name() + " is not perfect");
  if (!center_of_quotient_trivial(a))
    return report(id, a.name(), Verdict::hypothesis_unmet,
                  "center of " + a.name() + "/Leib is nontrivial");
  std::string instance = a.name() + ", tower depth " + std::to_string(depth);
  try {
    TowerEmbeddings te = tower_embeddings(a, depth);
    json levels = json::array();
    bool rc = true;
    for (std::size_t kk = 0; kk < te.level_maps.size(); ++kk) {
      const LeibnizAlgebra& dom = te.tower.levels[kk].algebra;
      json entry;
      entry["level"] = kk;
      entry["dim"] = dom.dim();
      entry["center_dim"] = te.tower.levels[kk].center_dim;
      entry["centralizer_dim"] = te.tower.levels[kk].centralizer_dim;
      entry["image_dim"] = rank(te.level_maps[kk]);
      entry["embedding"] = matrix_to_json(te.level_maps[kk]);
      rc = rc && recheck::hom(dom, te.der_quotient.bracket, te.level_maps[kk]) &&
           recheck::injective(te.level_maps[kk]);
      entry["recheck"] = rc;
      levels.push_back(entry);
    }
    json cert;
    cert["target"] = "D(" + te.quotient.algebra.name() + ")";
    cert["target_dim"] = te.der_quotient.dim();
    cert["kernel_equals_I"] = te.phi_kernel == te.i_coords;
    cert["I_dim"] = te.i_coords.dim();
    cert["levels"] = levels;
    if (!rc) return report(id, instance, Verdict::fails, "a level failed independent revalidation", cert);
    return report(id, instance, Verdict::holds,
                  "all tower levels embed into the derivation algebra of the Lie quotient", cert);
  } catch (const Error& e) {
    return report(id, instance, Verdict::fails, e.what());
  }
}

VerificationReport verify_derivations_complete(Instances& inst) {
  const LeibnizAlgebra& a = inst.algebra();
  std::string id = "derivations-complete";
  if (!is_lie(a)) return report(id, a.name(), Verdict::hypothesis_unmet, a.name() + " is not a Lie algebra");
  if (!is_perfect(a)) return report(id, a.name(), Verdict::hypothesis_unmet, a.name() + " is not perfect");
  if (left_center(a).dim() != 0)
    return report(id, a.name(), Verdict::hypothesis_unmet, a.name() + " has nontrivial center");
  DerivationAlgebra d = derivation_algebra(a);
  bool complete = is_complete(d.bracket);
  DerivationAlgebra d2 = derivation_algebra(d.bracket);
  json cert;
  cert["dim_derivations"] = d.dim();
  cert["dim_second_derivations"] = d2.dim();
  cert["center_dim"] = left_center(d.bracket).dim();
  std::string instance = "D(" + a.name() + ")";
  if (!complete) return report(id, instance, Verdict::fails, "derivation algebra is not complete", cert);
  // Independent: every second derivation is inner on D.
  std::vector<Vec> ad_rows;
  for (std::size_t i = 0; i < d.dim(); ++i) ad_rows.push_back(d.bracket.left_mult_basis(i).flatten());
  bool rc = true;
  for (std::size_t t = 0; t < d2.dim() && rc; ++t)
    rc = recheck::derivation(d.bracket, d2.basis[t]) &&
         recheck::member(ad_rows, d2.basis[t].flatten());
  cert["recheck"] = rc;
  if (!rc) return report(id, instance, Verdict::fails, "inner-derivation certificate failed revalidation", cert);
  return report(id, instance, Verdict::holds, "derivation algebra is complete", cert);
}

VerificationReport verify_second_derivation_quotient(Instances& inst) {
  const LeibnizAlgebra& a = inst.algebra();
  std::string id = "second-derivation-quotient";
  if (!is_perfect(a))
    return report(id, a.name(), Verdict::hypothesis_unmet, a.name() + " is not perfect");
  if (!center_of_quotient_trivial(a))
    return report(id, a.name(), Verdict::hypothesis_unmet,
                  "center of " + a.name() + "/Leib is nontrivial");
  std::string instance = "D^2(" + a.name() + ")/I^2";
  try {
    ISquaredEmbedding isq = I_squared_embedding(a);
    TowerEmbeddings te = tower_embeddings(a, 1);
    if (!isq.der_g.bracket.same_table(te.tower.levels[1].algebra))
      return report(id, instance, Verdict::fails, "tower level 1 and D(D/I) built differently");
    Matrix composite = te.level_maps[1] * isq.quotient_hom.matrix();
    AlgebraHom h(isq.quotient_hom.domain(), te.der_quotient.bracket, LinearMap(composite));
    HomCertificate c = certify_hom(h);
    Subspace end_to_end_kernel = null_space(te.level_maps[1] * isq.phi.matrix());
    json cert;
    cert["i_squared_dim"] = isq.i_squared.dim();
    cert["kernel_equals_I_squared"] = isq.phi_kernel == isq.i_squared;
    cert["end_to_end_kernel_equals_I_squared"] = end_to_end_kernel == isq.i_squared;
    cert["quotient_dim"] = isq.quotient_hom.domain().dim();
    cert["embedding"] = matrix_to_json(composite);
    bool ok = c.product_preserving && c.injective && (isq.phi_kernel == isq.i_squared) &&
              (end_to_end_kernel == isq.i_squared);
    bool rc = recheck::hom(isq.quotient_hom.domain(), te.der_quotient.bracket, composite) &&
              recheck::injective(composite);
    cert["recheck"] = rc;
    if (!ok || !rc)
      return report(id, instance, Verdict::fails, "second-derivation quotient failed to embed", cert);
    return report(id, instance, Verdict::holds,
                  "D^2/I^2 embeds into the derivation algebra of the Lie quotient with kernel I^2",
                  cert);
  } catch (const Error& e) {
    return report(id, instance, Verdict::fails, e.what());
  }
}

std::vector<VerificationReport> run_for_algebra(const LeibnizAlgebra& a, const SuiteOptions& opts) {
  Instances inst(a);
  auto selected = [&](const std::string& id) {
    if (opts.checks.empty()) return true;
    for (const auto& c : opts.checks)
      if (c == id) return true;
    return false;
  };
  std::vector<VerificationReport> out;
  auto run = [&](const std::string& id, auto&& fn) {
    if (!selected(id)) return;
    try {
      out.push_back(fn());
    } catch (const Error& e) {
      out.push_back(report(id, a.name(), Verdict::fails, std::string("unexpected error: ") + e.what()));
    }
  };
  run("leibniz-identity", [&] { return verify_leibniz_identity(inst); });
  run("ideal-transitivity", [&] { return verify_ideal_transitivity(inst); });
  run("characteristic-ideal", [&] { return verify_characteristic_ideal(inst); });
  run("subideal-equivalence", [&] { return verify_subideal_equivalence(inst); });
  run("normalizer-self-normalizing", [&] { return verify_normalizer_self_normalizing(inst); });
  run("derivation-restriction", [&] { return verify_derivation_restriction(inst); });
  run("derivation-tower-embedding",
      [&] { return verify_derivation_tower_embedding(inst, opts.tower_depth); });
  run("derivations-complete", [&] { return verify_derivations_complete(inst); });
  run("second-derivation-quotient", [&] { return verify_second_derivation_quotient(inst); });
  return out;
}

std::vector<VerificationReport> run_suite(const std::vector<std::string>& keys,
                                          const SuiteOptions& opts) {
  std::vector<VerificationReport> out;
  for (const auto& key : keys) {
    LeibnizAlgebra a = catalog_build(key);
    auto reports = run_for_algebra(a, opts);
    out.insert(out.end(), reports.begin(), reports.end());
  }
  return out;
}

bool any_fails(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::fails) return true;
  return false;
}

} // namespace leibniz
