#include "conc/classifier.hpp"

#include <cstdio>

#include "json.hpp"

namespace conc {

namespace {

bool odd(const Integer& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

bool is_inf_superscript(Label l) { return c_order(l) == 0; }

std::string signed_coefficient(const Integer& c) { return (sgn(c) > 0 ? "+" : "") + c.get_str(); }

std::string format_x(const Rational& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8f", x.get_d());
  return buf;
}

}  // namespace

std::string to_string(Order o) {
  switch (o) {
    case Order::one: return "1";
    case Order::two: return "2";
    case Order::four: return "4";
    case Order::infinite: return "inf";
    case Order::undetermined: return "undetermined";
  }
  return "?";
}

std::string to_string(Determinacy d) { return d == Determinacy::determined ? "determined" : "open_span"; }

Order order_in_G(const std::vector<Integer>& coeffs, const BasisTable& basis) {
  const auto& el = basis.elements();
  bool four = false, two = false;
  for (std::size_t i = 0; i < el.size(); ++i) {
    const Integer& c = coeffs[i];
    if (sgn(c) == 0) continue;
    switch (g_order(el[i].label)) {
      case 0: return Order::infinite;
      case 4:
        if (odd(c)) four = true;
        else if (Integer(c % 4) != 0) two = true;
        break;
      case 2:
        if (odd(c)) two = true;
        break;
      default: break;
    }
  }
  return four ? Order::four : two ? Order::two : Order::one;
}

ConcordanceOrder order_in_C(const std::vector<Integer>& coeffs, const BasisTable& basis) {
  const auto& el = basis.elements();
  std::size_t plain_inf = 0, bold_inf = 0;
  bool two = false;
  for (std::size_t i = 0; i < el.size(); ++i) {
    const Integer& c = coeffs[i];
    if (sgn(c) == 0) continue;
    if (is_inf_superscript(el[i].label)) {
      ++(el[i].bold ? bold_inf : plain_inf);
    } else if (c_order(el[i].label) == 2 && odd(c)) {
      two = true;
    }
  }
  ConcordanceOrder out;
  if (plain_inf > 0 || bold_inf == 1) {
    out.order = Order::infinite;
  } else if (bold_inf >= 2) {
    // Only relations with an even multiple of the first bold element can hold.
    out.order = Order::undetermined;
    out.determinacy = Determinacy::open_span;
    const auto bold = basis.bold_indices();
    out.nontrivial = (!bold.empty() && odd(coeffs[bold.front()])) || order_in_G(coeffs, basis) != Order::one;
    return out;
  } else {
    out.order = two ? Order::two : Order::one;
  }
  out.nontrivial = out.order != Order::one;
  return out;
}

ClassificationReport classify(const LinearCombination& comb, const KnotTable& table, const BasisTable& basis,
                              std::string input) {
  ClassificationReport r;
  r.input = input.empty() ? render(comb, table) : std::move(input);
  r.scope = table.scope();
  r.comb = comb;
  r.combination = render(comb, table);
  r.coefficients = basis.decompose(comb);
  for (std::size_t i = 0; i < r.coefficients.size(); ++i)
    if (sgn(r.coefficients[i]) != 0) {
      const auto& e = basis.elements()[i];
      r.decomposition.push_back({i, e.expression, e.label, e.bold, r.coefficients[i]});
    }
  r.order_G = order_in_G(r.coefficients, basis);
  const ConcordanceOrder c = order_in_C(r.coefficients, basis);
  r.order_C = c.order;
  r.determinacy = c.determinacy;
  r.nontrivial = c.nontrivial;

  const AlgebraicOrderEvidence ev = algebraic_evidence(comb, table);
  if (ev.infinite_witness)
    r.witnesses.push_back("signature " + ev.infinite_witness->value.get_str() + " at x = " +
                          format_x(ev.infinite_witness->x_sample) + " (midpoint " +
                          std::to_string(ev.infinite_witness->index) + ")");
  if (ev.fox_milnor_fail) {
    std::string w = "Fox-Milnor fails";
    for (const auto& f : ev.fox_milnor_fail->obstruction)
      w += "; unpaired factor " + to_string(LaurentPoly(to_rational(f.poly))) + " with multiplicity " +
           std::to_string(f.multiplicity);
    r.witnesses.push_back(w);
  }
  if (ev.four_torsion_witness)
    r.witnesses.push_back("prime " + std::to_string(*ev.four_torsion_witness) +
                          " = 3 mod 4 divides |Delta(-1)| to an odd power");

  const auto& el = basis.elements();
  if (r.order_C == Order::infinite || r.order_C == Order::two) {
    for (std::size_t i = 0; i < el.size(); ++i) {
      const int co = c_order(el[i].label);
      const Integer& k = r.coefficients[i];
      if ((co == 0 && sgn(k) != 0) || (r.order_C == Order::two && co == 2 && odd(k)))
        r.witnesses.push_back("coefficient " + k.get_str() + " on " + el[i].expression + " (" +
                              to_string(el[i].label) + (el[i].bold ? ", open-span element" : "") + ")");
    }
  } else if (r.order_C == Order::undetermined) {
    const auto bold = basis.bold_indices();
    std::string w = "open span: nonzero coefficients";
    const char* sep = " ";
    for (std::size_t i : bold)
      if (sgn(r.coefficients[i]) != 0) {
        w += sep + r.coefficients[i].get_str() + " on (" + el[i].expression + ")";
        sep = ", ";
      }
    r.witnesses.push_back(w);
    if (!bold.empty() && odd(r.coefficients[bold.front()]))
      r.witnesses.push_back("odd coefficient on " + el[bold.front()].expression +
                            ": every relation in the span uses an even multiple of it");
  } else {
    std::string w = "slice: ";
    bool first = true;
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (sgn(r.coefficients[i]) == 0) continue;
      w += (first ? "" : " + ") + r.coefficients[i].get_str() + "*(" + el[i].expression + ")";
      first = false;
    }
    r.witnesses.push_back(first ? "slice: trivial combination" : w);
  }
  return r;
}

ClassificationReport classify(const LinearCombination& comb, Scope scope, std::string input) {
  return classify(comb, shipped_table(scope), shipped_basis(scope), std::move(input));
}

ClassificationReport classify(const std::string& expression, Scope scope) {
  const KnotTable& table = shipped_table(scope);
  return classify(parse_expression(expression, table), table, shipped_basis(scope), expression);
}

std::string render_text(const ClassificationReport& r) {
  std::string out;
  out += "input:        " + r.input + "\n";
  out += "scope:        " + to_string(r.scope) + "\n";
  out += "combination:  " + r.combination + "\n";
  out += "decomposition:\n";
  for (const auto& t : r.decomposition) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "  %6s  %-9s ", signed_coefficient(t.coefficient).c_str(), to_string(t.label).c_str());
    out += buf + t.element + (t.bold ? "  [open span]" : "") + "\n";
  }
  if (r.decomposition.empty()) out += "  (zero)\n";
  out += "order in G:   " + to_string(r.order_G) + "\n";
  out += "order in C:   " + to_string(r.order_C) +
         (r.order_C == Order::undetermined && r.nontrivial ? " (nontrivial)" : "") + "\n";
  out += "determinacy:  " + to_string(r.determinacy) + "\n";
  out += "witnesses:\n";
  for (const auto& w : r.witnesses) out += "  - " + w + "\n";
  return out;
}

std::string render_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["input"] = r.input;
  j["scope"] = r.scope == Scope::eight ? 8 : 9;
  j["combination"] = r.combination;
  nlohmann::ordered_json dec = nlohmann::ordered_json::array();
  for (const auto& t : r.decomposition) {
    nlohmann::ordered_json item;
    item["index"] = t.index;
    item["element"] = t.element;
    item["label"] = to_string(t.label);
    item["bold"] = t.bold;
    if (t.coefficient.fits_slong_p()) item["coefficient"] = t.coefficient.get_si();
    else item["coefficient"] = t.coefficient.get_str();
    dec.push_back(std::move(item));
  }
  j["decomposition"] = std::move(dec);
  j["order_G"] = to_string(r.order_G);
  j["order_C"] = to_string(r.order_C);
  j["determinacy"] = to_string(r.determinacy);
  j["nontrivial"] = r.nontrivial;
  j["witnesses"] = r.witnesses;
  return j.dump(2) + "\n";
}

}  // namespace conc
