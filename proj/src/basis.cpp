#include "conc/basis.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "conc/exact_linear.hpp"

namespace conc {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const std::string& text, const KnotTable& table) : s_(text), table_(table) {}

  LinearCombination parse() {
    skip();
    if (i_ >= s_.size()) fail("empty expression");
    LinearCombination out = sum();
    skip();
    if (i_ < s_.size()) fail(s_[i_] == ')' ? "unbalanced ')'" : "unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, static_cast<int>(i_) + 1); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip();
    return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
  }
  std::string digits() {
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return s_.substr(start, i_ - start);
  }

  LinearCombination sum() {
    LinearCombination acc;
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    acc += Integer(sign) * term();
    while (true) {
      if (eat('+') || eat('#')) acc += term();
      else if (eat('-')) acc += -term();
      else return acc;
    }
  }

  LinearCombination term() {
    skip();
    if (peek_digit()) {
      std::size_t start = i_;
      std::string n = digits();
      if (i_ < s_.size() && s_[i_] == '_') {
        i_ = start;
        return knot();
      }
      Integer mult(n);
      eat('*');
      if (eat('-')) mult = -mult;
      skip();
      if (i_ >= s_.size() || !(s_[i_] == '(' || std::isdigit(static_cast<unsigned char>(s_[i_])))) {
        // A bare integer: only 0 (the trivial class) is meaningful.
        if (sgn(mult) != 0) fail("integer without a knot");
        return {};
      }
      return mult * factor();
    }
    return factor();
  }

  LinearCombination factor() {
    if (eat('(')) {
      LinearCombination inner = sum();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (peek_digit()) return knot();
    fail(i_ < s_.size() ? "expected a knot name" : "unexpected end of expression");
  }

  LinearCombination knot() {
    std::size_t start = i_;
    std::string name = digits();
    if (i_ >= s_.size() || s_[i_] != '_') fail("expected '_' in knot name");
    ++i_;
    std::string index = digits();
    if (index.empty()) fail("expected knot index");
    name += "_" + index;
    bool reversed = false;
    if (i_ < s_.size() && s_[i_] == 'r') {
      ++i_;
      if (!table_.contains(name + "r")) {
        if (table_.contains(name))
          throw ParseError("'" + name + "r' is not a distinct record; " + name + " is reversible", 1,
                           static_cast<int>(start) + 1);
        throw UnknownKnot(name + "r", hint(name));
      }
      name += "r";
    }
    if (i_ + 1 < s_.size() && s_[i_] == '^' && s_[i_ + 1] == 'r') {
      i_ += 2;
      reversed = true;
    }
    if (!table_.contains(name)) throw UnknownKnot(name, hint(name));
    return LinearCombination(reversed ? reverse_name(table_, name) : name);
  }

  std::string hint(const std::string& name) const {
    if (table_.scope() == Scope::eight && name.rfind("9_", 0) == 0) return "use --scope 9 for nine-crossing knots";
    return "";
  }

  const std::string& s_;
  const KnotTable& table_;
  std::size_t i_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

LinearCombination parse_expression(const std::string& text, const KnotTable& table) {
  return ExpressionParser(text, table).parse();
}

std::string render(const LinearCombination& comb, const KnotTable& table) {
  std::string out;
  for (const auto& r : table.records()) {
    Integer c = comb.coeff(r.name);
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Integer mag = abs(c);
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (mag != 1) out += mag.get_str() + "*";
    out += r.name;
  }
  for (const auto& [name, c] : comb.terms())
    if (!table.contains(name)) throw UnknownKnot(name, "");
  return out.empty() ? "0" : out;
}

std::string to_string(Label l) {
  switch (l) {
    case Label::Finf_inf: return "Finf^inf";
    case Label::F4_inf: return "F4^inf";
    case Label::F2_inf: return "F2^inf";
    case Label::F2_2: return "F2^2";
    case Label::F1_inf: return "F1^inf";
    case Label::F1_2: return "F1^2";
    case Label::F1_1: return "F1^1";
  }
  return "?";
}

Label parse_label(const std::string& text) {
  for (Label l : {Label::Finf_inf, Label::F4_inf, Label::F2_inf, Label::F2_2, Label::F1_inf, Label::F1_2, Label::F1_1})
    if (to_string(l) == text) return l;
  throw DomainError("unknown subgroup label '" + text + "'");
}

int g_order(Label l) {
  switch (l) {
    case Label::Finf_inf: return 0;
    case Label::F4_inf: return 4;
    case Label::F2_inf:
    case Label::F2_2: return 2;
    default: return 1;
  }
}

int c_order(Label l) {
  switch (l) {
    case Label::F2_2:
    case Label::F1_2: return 2;
    case Label::F1_1: return 1;
    default: return 0;
  }
}

BasisTable::BasisTable(const KnotTable& table, std::vector<BasisElement> elements)
    : scope_(table.scope()), elements_(std::move(elements)) {
  for (const auto& r : table.records()) generators_.push_back(r.name);
  const auto n = static_cast<Eigen::Index>(generators_.size());
  if (static_cast<Eigen::Index>(elements_.size()) != n)
    throw DomainError("basis has " + std::to_string(elements_.size()) + " elements for " + std::to_string(n) +
                      " generators");
  B_ = zeros<Integer>(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) B_(i, j) = elements_[static_cast<std::size_t>(j)].comb.coeff(generators_[static_cast<std::size_t>(i)]);
  Binv_ = unimodular_inverse(B_);
}

std::vector<Integer> BasisTable::decompose(const LinearCombination& comb) const {
  const auto n = static_cast<Eigen::Index>(generators_.size());
  IntVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = comb.coeff(generators_[static_cast<std::size_t>(i)]);
  for (const auto& [name, c] : comb.terms())
    if (std::find(generators_.begin(), generators_.end(), name) == generators_.end()) throw UnknownKnot(name, "");
  std::vector<Integer> x(static_cast<std::size_t>(n), Integer(0));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) x[static_cast<std::size_t>(i)] += Binv_(i, k) * v(k);
  return x;
}

LinearCombination BasisTable::recompose(const std::vector<Integer>& coeffs) const {
  LinearCombination out;
  for (std::size_t j = 0; j < coeffs.size() && j < elements_.size(); ++j) out += coeffs[j] * elements_[j].comb;
  return out;
}

std::vector<std::size_t> BasisTable::indices(Label l) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < elements_.size(); ++j)
    if (elements_[j].label == l) out.push_back(j);
  return out;
}

std::vector<std::size_t> BasisTable::bold_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < elements_.size(); ++j)
    if (elements_[j].bold) out.push_back(j);
  return out;
}

BasisTable load_basis(const std::string& text, const KnotTable& table) {
  std::vector<BasisElement> elements;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    std::size_t a = s.find('|'), b = a == std::string::npos ? a : s.find('|', a + 1);
    if (b == std::string::npos) throw ParseError("expected 'label | bold | expression'", line, 0);
    BasisElement e;
    try {
      e.label = parse_label(trim(s.substr(0, a)));
    } catch (const DomainError& err) {
      throw ParseError(err.what(), line, 1);
    }
    std::string flag = trim(s.substr(a + 1, b - a - 1));
    if (flag != "bold" && flag != "-") throw ParseError("bold flag must be 'bold' or '-'", line, static_cast<int>(a) + 2);
    e.bold = flag == "bold";
    e.expression = trim(s.substr(b + 1));
    try {
      e.comb = parse_expression(e.expression, table);
    } catch (const ParseError& err) {
      throw ParseError(err.what(), line, static_cast<int>(b) + 1 + err.column());
    }
    elements.push_back(std::move(e));
  }
  return BasisTable(table, std::move(elements));
}

const BasisTable& shipped_basis(Scope scope) {
  static std::mutex m;
  static std::map<Scope, std::unique_ptr<BasisTable>> cache;
  const KnotTable& table = shipped_table(scope);
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[scope];
  if (!slot) {
    std::string file = data_directory() + (scope == Scope::eight ? "/basis8.dat" : "/basis9.dat");
    slot = std::make_unique<BasisTable>(load_basis(read_text_file(file), table));
  }
  return *slot;
}

std::vector<std::size_t> expected_ranks(Scope scope) {
  if (scope == Scope::eight) return {18, 1, 3, 6, 1, 1, 6};
  return {46, 2, 13, 6, 8, 1, 11};
}

std::size_t expected_bold_count(Scope scope) { return scope == Scope::eight ? 0 : 5; }

}  // namespace conc
