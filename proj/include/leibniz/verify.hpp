#ifndef LEIBNIZ_VERIFY_HPP
#define LEIBNIZ_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "leibniz/io.hpp"

namespace leibniz {

enum class Verdict { holds, hypothesis_unmet, fails };

std::string verdict_str(Verdict v);

/// One executed check instance. A FAILS verdict is never produced by a
/// correct implementation on valid inputs; it signals a bug and breaks
/// the build. Every holds verdict carries a certificate payload that was
/// validated by the independent re-checker before being emitted.
struct VerificationReport {
  std::string check;
  std::string instance;
  Verdict verdict;
  std::string detail;
  json certificate;

  json to_json() const;
};

/// Lazily built standard instances for one base algebra: the Lie-holomorph
/// chain A in hol_lie(A) in hol_lie(hol_lie(A)) and, for non-perfect A,
/// the witness ambient and its Lie holomorph.
class Instances {
public:
  explicit Instances(LeibnizAlgebra a) : a_(std::move(a)) {}

  const LeibnizAlgebra& algebra() const { return a_; }
  const LieHolomorph& k();         // hol_lie(A)
  const LieHolomorph& m();         // hol_lie(hol_lie(A))
  const WitnessCertificate& witness();   // requires A non-perfect
  const LieHolomorph& witness_holomorph(); // hol_lie of the witness ambient
  Subspace a_in_k();
  Subspace a_in_m();
  Subspace k_in_m();
  Subspace a_in_witness_holomorph();
  Subspace witness_in_holomorph();

private:
  LeibnizAlgebra a_;
  std::optional<LieHolomorph> k_, m_, wh_;
  std::optional<WitnessCertificate> w_;
};

/// Names of all checks, in suite execution order.
const std::vector<std::string>& check_ids();

// The individual checks. Each re-derives its hypotheses from scratch and
// never trusts flags computed elsewhere.

/// Every catalog/constructed algebra attached to this base algebra
/// satisfies the Leibniz identity exactly.
VerificationReport verify_leibniz_identity(Instances& inst);

/// Perfect algebras sitting as an ideal of an ideal are ideals of the
/// whole algebra.
VerificationReport verify_ideal_transitivity(Instances& inst);

/// Perfect ideals are characteristic; non-perfect algebras route to the
/// witness construction, which exhibits an ambient algebra and a
/// Lie-derivation moving them.
VerificationReport verify_characteristic_ideal(Instances& inst);

/// Perfect algebras are subideals exactly when they are ideals;
/// non-perfect algebras admit a subideal-but-not-ideal embedding.
VerificationReport verify_subideal_equivalence(Instances& inst);

/// The normalizer of a perfect subalgebra is self-normalizing, both in
/// hol_lie(A) and in hol_lie(hol_lie(A)).
VerificationReport verify_normalizer_self_normalizing(Instances& inst);

/// Restriction of derivations embeds D(K) into D(A) for a characteristic
/// ideal A with vanishing left centralizer; reports which precondition
/// fails otherwise. Runs the identity instance and, when proper and
/// nonzero, the Leibniz-kernel instance.
VerificationReport verify_derivation_restriction(Instances& inst);

/// Explicit level maps into D(A/Leib(A)): level_maps[k] embeds the k-th
/// tower level (D(A)/I for k = 0, its iterated derivation algebras above)
/// as a subalgebra. Throws on any certification failure.
struct TowerEmbeddings {
  QuotientAlgebra quotient;        // A/Leib(A), canonical representatives
  DerivationAlgebra der_quotient;  // D(A/Leib(A))
  DerivationTower tower;
  std::vector<Matrix> level_maps;
  Subspace i_coords;
  Subspace phi_kernel;
};

TowerEmbeddings tower_embeddings(const LeibnizAlgebra& a, std::size_t depth);

/// Tower embeddings: D(A)/I and every D^n(D(A)/I) up to the given depth
/// embed into the derivation algebra of A/Leib(A), with explicit
/// matrices; the kernel of the level-0 map is exactly I.
VerificationReport verify_derivation_tower_embedding(Instances& inst, std::size_t depth = 2);

/// The derivation algebra of a perfect centerless Lie algebra is complete.
VerificationReport verify_derivations_complete(Instances& inst);

/// D^2(A)/I^2 embeds into the derivation algebra of A/Leib(A) with kernel
/// exactly I^2, composing through D(D(A)/I).
VerificationReport verify_second_derivation_quotient(Instances& inst);

struct SuiteOptions {
  std::size_t tower_depth = 2;
  std::vector<std::string> checks; // empty = all
};

/// Runs every applicable check on every selected catalog algebra.
std::vector<VerificationReport> run_suite(const std::vector<std::string>& keys,
                                          const SuiteOptions& opts = {});

/// Runs the selected checks for one algebra.
std::vector<VerificationReport> run_for_algebra(const LeibnizAlgebra& a,
                                                const SuiteOptions& opts = {});

bool any_fails(const std::vector<VerificationReport>& reports);

} // namespace leibniz

#endif
