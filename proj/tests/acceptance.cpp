// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "conc/algcon.hpp"
#include "conc/classifier.hpp"
#include "conc/covers.hpp"
#include "conc/exact_linear.hpp"
#include "conc/signature.hpp"
#include "conc/verify.hpp"
#include "oracles.hpp"

using namespace conc;
using testing_helpers::P;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::vector<std::string> split_sum(const std::string& key) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t plus = key.find('+', start);
    out.push_back(key.substr(start, plus - start));
    if (plus == std::string::npos) return out;
    start = plus + 1;
  }
}

std::size_t index_of(const BasisTable& b, const std::string& expression) {
  for (std::size_t i = 0; i < b.elements().size(); ++i)
    if (b.elements()[i].expression == expression) return i;
  throw DomainError("basis is missing '" + expression + "'");
}

bool coefficients_are(const BasisTable& b, const std::vector<Integer>& x,
                      const std::vector<std::pair<std::string, long>>& want) {
  std::vector<Integer> expect(b.elements().size(), Integer(0));
  for (const auto& [e, c] : want) expect[index_of(b, e)] = c;
  return x == expect;
}

bool is_zero(const std::vector<Integer>& v) {
  for (const auto& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

Outcome alexander_table() {
  Outcome o;
  const KnotTable& table = shipped_table(Scope::eight);
  int matched = 0;
  for (const auto& [key, ref] : reference_alexander()) {
    LaurentPoly prod = P("1");
    for (const auto& k : split_sum(key)) prod = prod * alexander_from_seifert(table.at(k).seifert);
    o.require(equal_up_to_units(prod, ref), "mismatch for " + key);
    matched += equal_up_to_units(prod, ref);
  }
  const LaurentPoly a = P("1 - t + t^2"), b = P("3 - 5*t + 3*t^2");
  LaurentPoly combined = P("1");
  for (const char* k : {"8_15", "7_2", "3_1"}) combined = combined * alexander_from_seifert(table.at(k).seifert);
  o.require(equal_up_to_units(combined, a * a * b * b), "combined entry differs");
  if (o.pass) o.detail = std::to_string(matched) + " reference polynomials, combined square entry exact";
  return o;
}

Outcome cover_homology() {
  Outcome o;
  const KnotTable& table = shipped_table(Scope::nine);
  for (const auto& c : reference_cover_orders())
    o.require(homology_order(table, c.knot, c.q) == c.order,
              c.knot + " q=" + std::to_string(c.q) + " gives " + homology_order(table, c.knot, c.q).get_str());
  o.require(homology_order(table, "8_18", 2) == 45, "8_18 q=2");
  o.require(homology_order(table, "8_17", 3) == 169, "8_17 q=3");
  for (const auto& r : table.records()) {
    const LaurentPoly& d = table.alexander(r.name);
    o.require(homology_order(d, 2) == abs(Integer(d(Rational(-1)))), "|Delta(-1)| differs for " + r.name);
  }
  if (o.pass)
    o.detail = std::to_string(reference_cover_orders().size()) + " listed orders; |H1(M2)| = |Delta(-1)| for " +
               std::to_string(table.size()) + " knots";
  return o;
}

Outcome worked_examples() {
  Outcome o;
  const BasisTable& b = shipped_basis(Scope::eight);
  const ClassificationReport a = classify("8_10 + 8_21", Scope::eight);
  o.require(a.order_G == Order::two && a.order_C == Order::infinite,
            "8_10 + 8_21 gives (" + to_string(a.order_G) + ", " + to_string(a.order_C) + ")");
  o.require(coefficients_are(b, a.coefficients, {{"8_10 + 3_1", 1}, {"8_21 - 8_18 - 3_1", 1}, {"8_18", 1}}),
            "8_10 + 8_21 decomposition");
  const ClassificationReport c = classify("8_17^r + 8_21 - 3_1", Scope::eight);
  o.require(c.order_G == Order::two && c.order_C == Order::infinite,
            "8_17^r + 8_21 - 3_1 gives (" + to_string(c.order_G) + ", " + to_string(c.order_C) + ")");
  o.require(coefficients_are(b, c.coefficients,
                             {{"8_17 - 8_17^r", -1}, {"8_17", 1}, {"8_21 - 8_18 - 3_1", 1}, {"8_18", 1}}),
            "8_17^r + 8_21 - 3_1 decomposition");
  if (o.pass) o.detail = "both examples (2, inf) with matching decompositions";
  return o;
}

Outcome basis_integrity() {
  Outcome o;
  for (Scope s : {Scope::eight, Scope::nine}) {
    const BasisTable& b = shipped_basis(s);
    const std::string tag = to_string(s) + "-scope";
    const Integer det = determinant(b.matrix());
    o.require(abs(det) == 1, tag + " determinant " + det.get_str());
    o.require(b.matrix().rows() == static_cast<Eigen::Index>(s == Scope::eight ? 36 : 87), tag + " size");
    std::vector<std::size_t> ranks;
    for (Label l : {Label::Finf_inf, Label::F4_inf, Label::F2_inf, Label::F2_2, Label::F1_inf, Label::F1_2, Label::F1_1})
      ranks.push_back(b.indices(l).size());
    o.require(ranks == expected_ranks(s), tag + " ranks");
    o.require(b.bold_indices().size() == expected_bold_count(s), tag + " open-span count");
  }
  o.require(expected_ranks(Scope::eight) == std::vector<std::size_t>{18, 1, 3, 6, 1, 1, 6}, "eight-scope reference ranks");
  if (o.pass) o.detail = "36x36 and 87x87 unimodular; ranks 18,1,3+6,1+1+6 and the nine-scope partition";
  return o;
}

Outcome signature_certification() {
  Outcome o;
  std::size_t checked = 0;
  for (Scope s : {Scope::eight, Scope::nine}) {
    const KnotTable& table = shipped_table(s);
    for (const auto& e : shipped_basis(s).elements()) {
      const bool zero = is_zero(midpoint_vector(e.comb, table));
      o.require(zero == (e.label != Label::Finf_inf), e.expression + " has the wrong midpoint vector");
      ++checked;
    }
  }
  const KnotTable& eight = shipped_table(Scope::eight);
  const SignatureProfile t = signature_profile(eight.at("3_1").seifert);
  const SignatureProfile p810 = signature_profile(eight.at("8_10").seifert);
  const SignatureProfile p821 = signature_profile(eight.at("8_21").seifert);
  const bool literal = p810 == t && p821 == -t;
  const bool swapped = p810 == -t && p821 == t;
  o.require(literal, swapped ? "profile(8_10) = -profile(3_1) and profile(8_21) = profile(3_1), the reverse of the "
                               "stated relation"
                             : "8_10 / 8_21 profiles do not match the trefoil");
  if (o.pass) o.detail = std::to_string(checked) + " basis vectors certified; 8_10 / 8_21 profiles as stated";
  return o;
}

Outcome root_count() {
  Outcome o;
  const std::size_t n = atlas_for(shipped_table(Scope::nine)).root_count();
  o.require(n == 70, "found " + std::to_string(n) + " distinct roots, expected 70");
  o.require(circle_root_count(Scope::nine) == n, "verify-tables count disagrees");
  if (o.pass) o.detail = "70 distinct roots on the open upper half circle";
  return o;
}

Outcome torsion_witnesses() {
  Outcome o;
  for (Scope s : {Scope::eight, Scope::nine}) {
    const KnotTable& table = shipped_table(s);
    for (const auto& e : shipped_basis(s).elements()) {
      if (e.comb.terms().size() != 1 || e.label == Label::Finf_inf) continue;
      const std::string& k = e.comb.terms().begin()->first;
      const bool fires = four_torsion_witness(table.alexander(k)).has_value();
      const bool expected = k == "7_7" || (s == Scope::nine && k == "9_34");
      o.require(fires == expected, k + (fires ? " fires" : " does not fire"));
    }
  }
  for (const char* k : {"8_1", "8_13"}) {
    const ClassificationReport r = classify(k, Scope::eight);
    o.require(r.order_G == Order::two, std::string(k) + " has order " + to_string(r.order_G) + " in G");
  }
  if (o.pass) o.detail = "witness only on 7_7 and 9_34 among torsion generators; 8_1, 8_13 of order 2";
  return o;
}

Outcome slice_identities() {
  Outcome o;
  const BasisTable& b = shipped_basis(Scope::eight);
  const auto f11 = b.indices(Label::F1_1);
  o.require(f11.size() == 6, "expected six F1^1 generators");
  for (std::size_t i : f11) {
    const ClassificationReport r = classify(b.elements()[i].comb, Scope::eight);
    o.require(r.order_C == Order::one, b.elements()[i].expression + " is not slice");
  }
  for (const auto& r : shipped_table(Scope::eight).records()) {
    const ClassificationReport c = classify(r.name + " + (-" + r.name + ")", Scope::eight);
    o.require(c.order_C == Order::one, r.name + " + (-" + r.name + ") is not slice");
  }
  if (o.pass) o.detail = "6 generators slice; K + (-K) slice for 36 knots";
  return o;
}

Outcome twisted_suite() {
  Outcome o;
  const KnotTable& table = shipped_table(Scope::nine);
  std::size_t knots = 0;
  for (const auto& r : table.records()) {
    o.require(oracles::abelian_wada_matches(table, r), "abelian Wada invariant differs for " + r.name);
    ++knots;
  }
  int leibniz_failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Word u = oracles::random_word(4, 8), v = oracles::random_word(4, 8);
    leibniz_failures += !oracles::leibniz_holds(u, v, static_cast<int>(testing_helpers::uniform(0, 3)));
  }
  o.require(leibniz_failures == 0, std::to_string(leibniz_failures) + " Leibniz failures");
  int rejected = 0, trials = 0;
  for (int p : {3, 5, 7})
    for (int k = 0; k < 67; ++k, ++trials)
      rejected += twisted_fox_milnor_necessary(oracles::random_norm(p), p).verdict == TwistedVerdict::fail;
  o.require(rejected == 0, std::to_string(rejected) + " norms rejected");
  if (o.pass)
    o.detail = std::to_string(knots) + " knots match Delta/(t-1); 10000 Leibniz words; " + std::to_string(trials) +
               " norms never rejected";
  return o;
}

Outcome metabolizer_oracle() {
  Outcome o;
  int nonempty = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const oracles::MetabolizerTrial t = oracles::metabolizer_trial();
    o.require(t.agree, "trial " + std::to_string(trial) + " disagrees with the subgroup scan");
    nonempty += t.nonempty;
  }
  if (o.pass) o.detail = "50 random forms agree (" + std::to_string(nonempty) + " with metabolizers)";
  return o;
}

Outcome open_span() {
  Outcome o;
  const BasisTable& b = shipped_basis(Scope::nine);
  const auto bold = b.bold_indices();
  for (std::size_t i : bold) {
    const ClassificationReport r = classify(b.elements()[i].comb, Scope::nine);
    o.require(r.order_C == Order::infinite && r.determinacy == Determinacy::determined,
              b.elements()[i].expression + " alone is not determined infinite");
  }
  const auto& el = b.elements();
  for (std::size_t a = 0; a < bold.size(); ++a)
    for (std::size_t c = a + 1; c < bold.size(); ++c)
      for (long m : {1L, 2L}) {
        const LinearCombination comb = Integer(m) * el[bold[a]].comb + el[bold[c]].comb;
        const ClassificationReport r = classify(comb, Scope::nine);
        const std::string tag = std::to_string(m) + "*(" + el[bold[a]].expression + ") + (" + el[bold[c]].expression + ")";
        o.require(r.order_C == Order::undetermined && r.determinacy == Determinacy::open_span, tag + " not open span");
        const bool odd_j1 = a == 0 && m == 1;
        o.require(r.nontrivial == (odd_j1 || r.order_G != Order::one), tag + " nontrivial flag");
        if (odd_j1) o.require(r.nontrivial, tag + " lacks the odd-coefficient upgrade");
      }
  if (o.pass) o.detail = "single bold elements infinite; pairs open span, odd first coefficient nontrivial";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Alexander table", 1, alexander_table},
      {2, "cover homology", 1, cover_homology},
      {3, "worked examples", 0, worked_examples},
      {4, "basis integrity", 0, basis_integrity},
      {5, "signature certification", 60, signature_certification},
      {6, "root count", 0, root_count},
      {7, "torsion witnesses", 0, torsion_witnesses},
      {8, "slice identities", 0, slice_identities},
      {9, "twisted suite", 300, twisted_suite},
      {10, "metabolizer oracle", 0, metabolizer_oracle},
      {11, "nine-crossing open span", 0, open_span},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) o.require(false, "over the time budget");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.number << ". " << c.title << ": " << o.detail << " ("
              << timing << ")\n";
    failed += !o.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
