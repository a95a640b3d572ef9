#include "conc/verify.hpp"

#include "conc/algcon.hpp"
#include "conc/basis.hpp"
#include "conc/covers.hpp"
#include "conc/exact_linear.hpp"
#include "conc/signature.hpp"

namespace conc {

namespace {

LaurentPoly product_of(const KnotTable& table, const std::string& key, bool& in_scope) {
  LaurentPoly out = LaurentPoly::constant(Rational(1));
  std::size_t start = 0;
  in_scope = true;
  while (start <= key.size()) {
    std::size_t end = key.find('+', start);
    if (end == std::string::npos) end = key.size();
    const std::string name = key.substr(start, end - start);
    if (!table.contains(name)) {
      in_scope = false;
      return out;
    }
    out = out * table.alexander(name);
    start = end + 1;
  }
  return out;
}

}  // namespace

std::size_t circle_root_count(Scope scope) { return atlas_for(shipped_table(scope)).root_count(); }

std::optional<std::size_t> expected_circle_root_count(Scope scope) {
  if (scope == Scope::nine) return 70;
  return std::nullopt;
}

std::vector<VerificationCheck> verify_tables(Scope scope) {
  std::vector<VerificationCheck> out;
  const KnotTable& table = shipped_table(scope);
  out.push_back({"knot table", table.size() == expected_names(scope).size(),
                 std::to_string(table.size()) + " records, Seifert and PD data validated"});

  for (const auto& [key, ref] : reference_alexander()) {
    bool in_scope = false;
    LaurentPoly d = product_of(table, key, in_scope);
    if (!in_scope) continue;
    out.push_back({"Alexander polynomial " + key, equal_up_to_units(d, ref), to_string(conway_normalize(d))});
  }
  for (const auto& ref : reference_cover_orders()) {
    if (!table.contains(ref.knot)) continue;
    Integer got = homology_order(table, ref.knot, ref.q);
    out.push_back({"|H1(M" + std::to_string(ref.q) + "(" + ref.knot + "))|", got == ref.order,
                   got.get_str() + " (expected " + std::to_string(ref.order) + ")"});
  }
  {
    std::size_t bad = 0;
    std::string first;
    for (const auto& r : table.records()) {
      Integer det = abs(Integer(table.alexander(r.name)(Rational(-1))));
      if (homology_order(table, r.name, 2) != det || two_fold_structure(r).order != det) {
        if (bad++ == 0) first = r.name;
      }
    }
    out.push_back({"|H1(M2)| = |Delta(-1)| = |coker(V + V^T)|", bad == 0,
                   bad == 0 ? std::to_string(table.size()) + " knots" : std::to_string(bad) + " failures, first " + first});
  }

  const BasisTable& basis = shipped_basis(scope);
  const Integer det = determinant(basis.matrix());
  out.push_back({"basis unimodular", abs(det) == 1,
                 std::to_string(basis.matrix().rows()) + "x" + std::to_string(basis.matrix().cols()) +
                     ", determinant " + det.get_str()});
  const std::vector<Label> labels{Label::Finf_inf, Label::F4_inf, Label::F2_inf, Label::F2_2,
                                  Label::F1_inf,   Label::F1_2,   Label::F1_1};
  const auto ranks = expected_ranks(scope);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::size_t got = basis.indices(labels[i]).size();
    out.push_back({"rank " + to_string(labels[i]), got == ranks[i],
                   std::to_string(got) + " (expected " + std::to_string(ranks[i]) + ")"});
  }
  out.push_back({"open-span elements", basis.bold_indices().size() == expected_bold_count(scope),
                 std::to_string(basis.bold_indices().size())});

  const AuditReport audit = consistency_audit(table, basis);
  out.push_back({"label audit", audit.ok(),
                 std::to_string(audit.checks) + " checks, " + std::to_string(audit.mismatches.size()) + " mismatches, " +
                     std::to_string(audit.notes.size()) + " notes"});
  for (const auto& m : audit.mismatches)
    out.push_back({"audit " + m.element + " (" + m.label + ")", false, m.check + ": " + m.detail});
  for (const auto& n : audit.notes)
    out.push_back({"audit " + n.element + " (" + n.label + ")", true, n.check + ": " + n.detail, true});

  const std::size_t roots = circle_root_count(scope);
  const auto expected = expected_circle_root_count(scope);
  std::string detail = std::to_string(roots) + " distinct roots on the open upper half circle";
  if (expected) detail += " (expected " + std::to_string(*expected) + ")";
  else detail += " (no reference count)";
  out.push_back({"unit-circle root count", !expected || *expected == roots, detail, !expected.has_value()});
  return out;
}

}  // namespace conc
