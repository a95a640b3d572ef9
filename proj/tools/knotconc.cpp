#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "conc/algcon.hpp"
#include "conc/classifier.hpp"
#include "conc/covers.hpp"
#include "conc/signature.hpp"
#include "conc/twisted.hpp"
#include "conc/verify.hpp"

using namespace conc;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Scope scope_of(int s) {
  if (s == 8) return Scope::eight;
  if (s == 9) return Scope::nine;
  throw UsageError("--scope must be 8 or 9");
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

std::vector<long> parse_values(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (item.empty() || used != item.size()) throw UsageError("--char expects comma-separated integers");
    out.push_back(v);
  }
  return out;
}

// A single knot token, possibly reversed or mirrored.
struct OrientedKnot {
  const KnotRecord* record;
  int sign;
};

OrientedKnot single_knot(const std::string& text, const KnotTable& table) {
  LinearCombination comb = parse_expression(text, table);
  if (comb.terms().size() != 1 || abs(comb.terms().begin()->second) != 1)
    throw DomainError("expected a single knot, got '" + text + "'");
  const auto& [name, c] = *comb.terms().begin();
  return {&table.at(name), sgn(c)};
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string interval(const RootInterval& iv) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.6f, %.6f)", iv.lo.get_d(), iv.hi.get_d());
  return buf;
}

int run_classify(const std::vector<std::string>& exprs, Scope scope, const std::string& format) {
  std::vector<std::string> docs;
  for (const auto& e : exprs) {
    ClassificationReport r = classify(e, scope);
    docs.push_back(format == "json" ? render_json(r) : render_text(r));
  }
  if (format == "json" && docs.size() != 1) {
    std::cout << "[\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
      std::string d = docs[i];
      d.pop_back();
      std::cout << d << (i + 1 < docs.size() ? ",\n" : "\n");
    }
    std::cout << "]\n";
  } else {
    for (std::size_t i = 0; i < docs.size(); ++i) std::cout << (i ? "\n" : "") << docs[i];
  }
  return 0;
}

int run_invariants(const std::string& text, Scope scope) {
  const KnotTable& table = shipped_table(scope);
  const OrientedKnot k = single_knot(text, table);
  const KnotRecord& r = *k.record;
  const LaurentPoly& delta = table.alexander(r.name);
  SignatureProfile prof = signature_profile(r.seifert);
  if (k.sign < 0) prof = -prof;
  std::cout << "knot:            " << (k.sign < 0 ? "-" : "") << r.name << "\n";
  std::cout << "crossings:       " << r.crossing_number << "\n";
  std::cout << "Seifert genus:   " << r.genus() << " (matrix " << r.seifert.rows() << "x" << r.seifert.cols() << ")\n";
  std::cout << "reversible:      " << (r.reversible ? "yes" : "no") << "\n";
  std::cout << "amphicheiral:    " << (r.amphicheiral ? "yes" : "no") << "\n";
  std::cout << "Alexander:       " << to_string(delta) << "\n";
  std::cout << "determinant:     " << Integer(abs(Integer(delta(Rational(-1))))).get_str() << "\n";
  std::cout << "signature:       " << prof.value_at_minus_one << "\n";
  std::cout << "signature jumps:";
  if (prof.jumps.empty()) std::cout << " none";
  std::cout << "\n";
  for (std::size_t i = 0; i < prof.jumps.size(); ++i)
    std::cout << "  x in " << interval(prof.sites[i]) << ": " << (prof.jumps[i] > 0 ? "+" : "") << prof.jumps[i]
              << "  (" << to_string(prof.site_factors[i]) << ")\n";
  std::cout << "plateaus:       ";
  for (int v : prof.plateaus) std::cout << " " << v;
  std::cout << "\n";
  std::cout << "cover orders:   ";
  for (int q : {2, 3, 4, 5}) std::cout << " q=" << q << ":" << homology_order(delta, q).get_str();
  std::cout << "\n";
  const CoverHomology h = two_fold_structure(r);
  std::cout << "H1(M2):          ";
  if (h.invariant_factors.empty()) std::cout << "0";
  for (std::size_t i = 0; i < h.invariant_factors.size(); ++i)
    std::cout << (i ? " + " : "") << "Z/" << h.invariant_factors[i].get_str();
  std::cout << "\n";
  const FoxMilnorResult fm = fox_milnor_test(delta);
  std::cout << "Fox-Milnor:      " << (fm.pass ? "pass" : "fail") << "\n";
  const auto w = four_torsion_witness(delta);
  std::cout << "mod-4 witness:   " << (w ? std::to_string(*w) : std::string("none")) << "\n";
  return 0;
}

int run_verify(Scope scope) {
  bool ok = true;
  for (const auto& c : verify_tables(scope)) {
    const char* tag = c.note ? "NOTE" : c.pass ? "PASS" : "FAIL";
    std::cout << tag << "  " << c.name << ": " << c.detail << "\n";
    ok = ok && c.pass;
  }
  std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok ? 0 : 1;
}

int run_signature_csv(const std::string& text, Scope scope) {
  const KnotTable& table = shipped_table(scope);
  std::cout << signature_csv(parse_expression(text, table), table);
  return 0;
}

int run_twisted(const std::string& text, Scope scope, int q, long p, const std::string& chars, int column) {
  const KnotTable& table = shipped_table(scope);
  const OrientedKnot k = single_knot(text, table);
  const KnotRecord& r = *k.record;
  if (k.sign < 0) throw DomainError("twisted polynomials are computed for table diagrams only");
  const GroupPresentation pres = wirtinger(r.pd);
  std::vector<std::vector<long>> labels;
  if (!chars.empty()) {
    labels.push_back(parse_values(chars));
  } else if (q == 2) {
    // One coloring per line through the origin.
    for (auto& c : fox_colorings(r.pd, p)) {
      long lead = 0;
      for (long v : c)
        if (v != 0) {
          lead = v;
          break;
        }
      if (lead == 1) labels.push_back(std::move(c));
    }
  } else {
    throw UsageError("--char is required when --q is not 2");
  }
  std::cout << "knot:        " << r.name << " (" << pres.generators << " generators, " << pres.relators.size()
            << " relators)\n";
  std::cout << "q = " << q << ", p = " << p << "\n";
  if (labels.empty()) std::cout << "no nontrivial characters\n";
  for (const auto& c : labels) {
    const Representation rho = metabelian_representation(r.pd, q, p, c);
    const TwistedPolynomial tp =
        column >= 0 ? wada_invariant(pres, rho, column) : wada_invariant(pres, rho);
    const TwistedFoxMilnorResult fm = twisted_fox_milnor_necessary(tp.numerator, rho.field_order);
    std::cout << "character:   " << join(c) << "\n";
    std::cout << "  polynomial: " << to_string(tp) << "\n";
    std::cout << "  test:       " << (fm.verdict == TwistedVerdict::fail ? "fail" : "inconclusive") << " (" << fm.reason
              << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concordance calculator for prime knots with at most nine crossings"};
  app.require_subcommand(1);

  int scope = 8;
  std::string format = "text";
  std::string expr, file;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a linear combination of knots");
  classify_cmd->add_option("expression", expr, "e.g. \"8_10 + 8_21\"");
  classify_cmd->add_option("--scope", scope, "8 or 9")->check(CLI::IsMember({8, 9}));
  classify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  classify_cmd->add_option("--file", file, "One expression per line")->check(CLI::ExistingFile);

  std::string knot;
  auto* inv_cmd = app.add_subcommand("invariants", "Classical invariants of one knot");
  inv_cmd->add_option("knot", knot)->required();
  inv_cmd->add_option("--scope", scope, "8 or 9")->check(CLI::IsMember({8, 9}));

  auto* verify_cmd = app.add_subcommand("verify-tables", "Audit the shipped tables");
  verify_cmd->add_option("--scope", scope, "8 or 9")->check(CLI::IsMember({8, 9}));

  auto* csv_cmd = app.add_subcommand("signature-csv", "Midpoint signatures of a combination as CSV");
  csv_cmd->add_option("expression", expr)->required();
  csv_cmd->add_option("--scope", scope, "8 or 9")->check(CLI::IsMember({8, 9}));

  int q = 2, column = -1;
  long p = 0;
  std::string chars;
  auto* tw_cmd = app.add_subcommand("twisted", "Twisted Alexander polynomial for a metabelian character");
  tw_cmd->add_option("knot", knot)->required();
  tw_cmd->add_option("--q", q, "Cover degree")->check(CLI::Range(2, 16));
  tw_cmd->add_option("--p", p, "Character modulus")->required()->check(CLI::Range(2L, 1000L));
  tw_cmd->add_option("--char", chars, "Comma-separated character values on arcs");
  tw_cmd->add_option("--column", column, "Generator column to delete (0-based)");
  tw_cmd->add_option("--scope", scope, "8 or 9")->check(CLI::IsMember({8, 9}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Scope s = scope_of(scope);
    if (*classify_cmd) {
      std::vector<std::string> exprs;
      if (!file.empty()) {
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line)) {
          line = trim(line);
          if (!line.empty() && line[0] != '#') exprs.push_back(line);
        }
      }
      if (!expr.empty()) exprs.insert(exprs.begin(), expr);
      if (exprs.empty()) throw UsageError("classify needs an expression or --file");
      return run_classify(exprs, s, format);
    }
    if (*inv_cmd) return run_invariants(knot, s);
    if (*verify_cmd) return run_verify(s);
    if (*csv_cmd) return run_signature_csv(expr, s);
    if (*tw_cmd) return run_twisted(knot, s, q, p, chars, column);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
