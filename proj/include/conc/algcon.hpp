#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conc/basis.hpp"
#include "conc/factor.hpp"
#include "conc/signature.hpp"

namespace conc {

/// A nonzero coordinate of the midpoint signature vector.
struct SignatureWitness {
  std::size_t index;
  Integer value;
  Rational x_sample;
};

/// Certifies infinite order in the algebraic concordance group when present.
std::optional<SignatureWitness> infinite_algebraic_order(const LinearCombination& comb, const KnotTable& table);

/// Smallest prime p ≡ 3 (mod 4) dividing |Δ(-1)| to an odd power.
std::optional<long> four_torsion_witness(const LaurentPoly& delta);

/// Alexander polynomial of a combination: product of Δ_K^|c_K|.
LaurentPoly alexander_of(const LinearCombination& comb, const KnotTable& table);

struct AlgebraicOrderEvidence {
  std::optional<SignatureWitness> infinite_witness;
  std::optional<FoxMilnorResult> fox_milnor_fail;
  std::optional<long> four_torsion_witness;
};

AlgebraicOrderEvidence algebraic_evidence(const LinearCombination& comb, const KnotTable& table);

struct AuditEntry {
  std::string element;
  std::string label;
  std::string check;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditEntry> mismatches;
  /// Label-only claims the invariants here cannot certify.
  std::vector<AuditEntry> notes;
  std::size_t checks = 0;

  bool ok() const { return mismatches.empty(); }
};

/// Cross-checks every basis label against signatures, Fox–Milnor and the mod-4 witness.
AuditReport consistency_audit(const KnotTable& table, const BasisTable& basis);

}  // namespace conc
