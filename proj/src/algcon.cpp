#include "conc/algcon.hpp"

namespace conc {

namespace {

bool is_square(const LaurentPoly& delta) {
  for (const auto& f : factor_over_rationals(delta).factors)
    if (f.multiplicity % 2 != 0) return false;
  return true;
}

bool all_zero(const std::vector<Integer>& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace

std::optional<SignatureWitness> infinite_algebraic_order(const LinearCombination& comb, const KnotTable& table) {
  const SignatureAtlas& atlas = atlas_for(table);
  std::vector<Integer> v = atlas.midpoint_vector(comb);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return SignatureWitness{i, v[i], atlas.samples()[i].x()};
  return std::nullopt;
}

std::optional<long> four_torsion_witness(const LaurentPoly& delta) {
  Integer n = abs(Integer(delta(Rational(-1))));
  if (sgn(n) == 0) return std::nullopt;
  for (long p = 2; Integer(p) * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1 && p % 4 == 3) return p;
  }
  if (n > 1 && n % 4 == 3) return n.get_si();
  return std::nullopt;
}

LaurentPoly alexander_of(const LinearCombination& comb, const KnotTable& table) {
  LaurentPoly out = LaurentPoly::constant(Rational(1));
  for (const auto& [name, c] : comb.terms()) {
    const LaurentPoly& d = table.alexander(name);
    for (Integer k = abs(c); k > 0; --k) out = out * d;
  }
  return out;
}

AlgebraicOrderEvidence algebraic_evidence(const LinearCombination& comb, const KnotTable& table) {
  AlgebraicOrderEvidence ev;
  ev.infinite_witness = infinite_algebraic_order(comb, table);
  // Symmetric Δ² is already of the form f(t) f(1/t), and Δ(-1)² is a square,
  // so only the parity of each coefficient matters.
  LinearCombination odd;
  for (const auto& [name, c] : comb.terms())
    if (mpz_odd_p(c.get_mpz_t())) odd.add(name, Integer(1));
  LaurentPoly delta = alexander_of(odd, table);
  FoxMilnorResult fm = fox_milnor_test(delta);
  if (!fm.pass) ev.fox_milnor_fail = fm;
  ev.four_torsion_witness = four_torsion_witness(delta);
  return ev;
}

AuditReport consistency_audit(const KnotTable& table, const BasisTable& basis) {
  AuditReport report;
  const SignatureAtlas& atlas = atlas_for(table);
  for (const auto& e : basis.elements()) {
    const std::string label = to_string(e.label);
    auto mismatch = [&](const std::string& check, const std::string& detail) {
      report.mismatches.push_back({e.expression, label, check, detail});
    };
    const bool sig_zero = all_zero(atlas.midpoint_vector(e.comb));
    const LaurentPoly delta = alexander_of(e.comb, table);
    const bool fm_pass = fox_milnor_test(delta).pass;
    const auto witness = four_torsion_witness(delta);

    ++report.checks;
    if (e.label == Label::Finf_inf) {
      if (sig_zero) mismatch("nonzero signature vector", "all midpoint signatures vanish");
      continue;
    }
    if (!sig_zero) mismatch("zero signature vector", "a midpoint signature is nonzero");

    if (e.label == Label::F4_inf) {
      ++report.checks;
      if (!witness) mismatch("mod-4 witness present", "no prime 3 mod 4 divides |Δ(-1)| to an odd power");
      continue;
    }
    ++report.checks;
    if (witness) mismatch("no mod-4 witness", "prime " + std::to_string(*witness) + " divides |Δ(-1)| to an odd power");

    if (g_order(e.label) == 2) {
      ++report.checks;
      if (fm_pass) {
        if (is_square(delta))
          report.notes.push_back({e.expression, label, "Fox–Milnor fails",
                                  "Alexander polynomial is a square; nontriviality rests on the basis label"});
        else
          mismatch("Fox–Milnor fails", "Alexander polynomial factors as f(t)f(1/t)");
      }
    } else if (e.label == Label::F1_1) {
      ++report.checks;
      if (!fm_pass) mismatch("Fox–Milnor passes", "Alexander polynomial is not of the form f(t)f(1/t)");
    }
  }
  return report;
}

}  // namespace conc
