#include "conc/knot_table.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <regex>
#include <sstream>

#include "conc/exact_linear.hpp"

#ifndef CONC_DATA_DIR
#define CONC_DATA_DIR "data"
#endif

namespace conc {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

bool has_distinct_reverse(const std::string& base) {
  return base == "8_17" || base == "9_32" || base == "9_33";
}

int crossings_of(const std::string& name) { return std::stoi(name.substr(0, name.find('_'))); }

long parse_int(const std::string& text, int line, const std::string& what) {
  std::string t = trim(text);
  static const std::regex number(R"(-?\d+)");
  if (!std::regex_match(t, number)) throw ParseError("expected integer in " + what + ": '" + t + "'", line, 0);
  return std::stol(t);
}

bool parse_bool(const std::string& text, int line, const std::string& what) {
  std::string t = trim(text);
  if (t == "true") return true;
  if (t == "false") return false;
  throw ParseError("expected true/false for " + what + ": '" + t + "'", line, 0);
}

IntMatrix parse_seifert(const std::string& field, int line) {
  std::string body = trim(field);
  if (body.rfind("seifert:", 0) != 0) throw ParseError("expected 'seifert:' field", line, 0);
  body = trim(body.substr(8));
  if (body.empty()) return IntMatrix(0, 0);
  auto rows = split(body, ';');
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix V(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto cols = split(rows[static_cast<std::size_t>(i)], ',');
    if (static_cast<Eigen::Index>(cols.size()) != n) throw ParseError("Seifert matrix is not square", line, 0);
    for (Eigen::Index j = 0; j < n; ++j) V(i, j) = parse_int(cols[static_cast<std::size_t>(j)], line, "Seifert matrix");
  }
  return V;
}

std::vector<PdCrossing> parse_pd(const std::string& field, int line) {
  std::string body = trim(field);
  if (body.rfind("pd:", 0) != 0) throw ParseError("expected 'pd:' field", line, 0);
  body = trim(body.substr(3));
  std::vector<PdCrossing> out;
  static const std::regex tuple(R"(\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))");
  auto it = std::sregex_iterator(body.begin(), body.end(), tuple);
  std::size_t consumed = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (!trim(body.substr(consumed, static_cast<std::size_t>(m.position()) - consumed)).empty())
      throw ParseError("malformed PD code", line, 0);
    out.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])});
    consumed = static_cast<std::size_t>(m.position() + m.length());
  }
  if (!trim(body.substr(consumed)).empty()) throw ParseError("malformed PD code", line, 0);
  return out;
}

[[noreturn]] void violation(const std::string& name, const std::string& check) {
  throw DomainError("record " + name + ": " + check);
}

void validate(const KnotRecord& r, const LaurentPoly& delta) {
  const IntMatrix& V = r.seifert;
  if (V.rows() % 2 != 0) violation(r.name, "Seifert matrix has odd dimension");
  if (determinant(IntMatrix(V - V.transpose())) != 1) violation(r.name, "det(V - V^T) != 1");
  if (abs(delta(Rational(1))) != 1) violation(r.name, "Alexander polynomial is not +-1 at t = 1");
  if (!r.pd.empty() && static_cast<int>(r.pd.size()) != r.crossing_number)
    violation(r.name, "PD code has the wrong number of crossings");
  if (r.crossing_number != crossings_of(r.name)) violation(r.name, "crossing number does not match the name");
  std::string base = r.name.back() == 'r' ? r.name.substr(0, r.name.size() - 1) : r.name;
  if (r.reversible == has_distinct_reverse(base)) violation(r.name, "reversibility flag disagrees with the table convention");
}

}  // namespace

Scope parse_scope(const std::string& text) {
  if (text == "8" || text == "eight") return Scope::eight;
  if (text == "9" || text == "nine") return Scope::nine;
  throw DomainError("unknown scope '" + text + "' (expected 8 or 9)");
}

std::string to_string(Scope s) { return s == Scope::eight ? "8" : "9"; }

std::vector<std::string> expected_names(Scope scope) {
  static const int counts[] = {0, 0, 0, 1, 1, 2, 3, 7, 21, 49};
  const int top = scope == Scope::eight ? 8 : 9;
  std::vector<std::string> out;
  for (int n = 3; n <= top; ++n)
    for (int k = 1; k <= counts[n]; ++k) {
      std::string name = std::to_string(n) + "_" + std::to_string(k);
      out.push_back(name);
      if (has_distinct_reverse(name)) out.push_back(name + "r");
    }
  return out;
}

KnotTable::KnotTable(Scope scope, std::vector<KnotRecord> records) : scope_(scope), records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    index_[records_[i].name] = i;
    alexander_.push_back(alexander_from_seifert(records_[i].seifert));
  }
}

const KnotRecord& KnotTable::at(const std::string& name) const {
  auto it = index_.find(name);
  if (it != index_.end()) return records_[it->second];
  std::string hint;
  static const std::regex nine(R"(9_\d+r?)");
  if (scope_ == Scope::eight && std::regex_match(name, nine)) hint = "use --scope 9 for nine-crossing knots";
  throw UnknownKnot(name, hint);
}

const LaurentPoly& KnotTable::alexander(const std::string& name) const {
  at(name);
  return alexander_[index_.at(name)];
}

KnotTable load_table(const std::string& text, Scope scope) {
  std::vector<KnotRecord> records;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    auto fields = split(s, '|');
    if (fields.size() != 6) throw ParseError("expected 6 '|'-separated fields", line, 0);
    KnotRecord r;
    r.name = trim(fields[0]);
    static const std::regex name_re(R"(\d+_\d+r?)");
    if (!std::regex_match(r.name, name_re)) throw ParseError("malformed knot name '" + r.name + "'", line, 0);
    r.crossing_number = static_cast<int>(parse_int(fields[1], line, "crossing number"));
    if (r.crossing_number <= 0) throw ParseError("crossing number must be positive", line, 0);
    r.reversible = parse_bool(fields[2], line, "reversible");
    r.amphicheiral = parse_bool(fields[3], line, "amphicheiral");
    r.seifert = parse_seifert(fields[4], line);
    r.pd = parse_pd(fields[5], line);
    records.push_back(std::move(r));
  }
  const auto names = expected_names(scope);
  if (records.size() != names.size())
    throw DomainError("scope " + to_string(scope) + " needs " + std::to_string(names.size()) + " records, found " +
                      std::to_string(records.size()));
  std::map<std::string, int> seen;
  for (const auto& r : records)
    if (++seen[r.name] > 1) violation(r.name, "duplicate record");
  for (const auto& n : names)
    if (!seen.count(n)) throw DomainError("scope " + to_string(scope) + " is missing knot " + n);

  KnotTable table(scope, std::move(records));
  for (const auto& r : table.records()) validate(r, table.alexander(r.name));

  for (const auto& [key, poly] : reference_alexander()) {
    LaurentPoly prod = LaurentPoly::constant(Rational(1));
    for (const auto& part : split(key, '+')) prod = prod * table.alexander(part);
    if (!equal_up_to_units(prod, poly)) violation(key, "Alexander polynomial differs from the reference value");
  }
  for (const auto& c : reference_cover_orders()) {
    RatPoly d = shift_to_origin(table.alexander(c.knot)).body();
    RatPoly cyc(std::vector<Rational>(static_cast<std::size_t>(c.q), Rational(1)));
    if (abs(resultant(d, cyc)) != c.order) violation(c.knot, "branched cover order differs from the reference value");
  }
  return table;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

KnotTable load_table_file(const std::string& path, Scope scope) { return load_table(read_text_file(path), scope); }

std::string data_directory() {
  if (const char* env = std::getenv("KNOTCONC_DATA_DIR"); env && *env) return env;
  return CONC_DATA_DIR;
}

const KnotTable& shipped_table(Scope scope) {
  static std::mutex m;
  static std::map<Scope, KnotTable> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(scope);
  if (it == cache.end()) {
    std::string file = data_directory() + (scope == Scope::eight ? "/knots8.dat" : "/knots9.dat");
    it = cache.emplace(scope, load_table_file(file, scope)).first;
  }
  return it->second;
}

LaurentPoly alexander_from_seifert(const IntMatrix& V) {
  const auto n = static_cast<std::size_t>(V.rows());
  std::vector<std::vector<RatPoly>> M(n, std::vector<RatPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = static_cast<Eigen::Index>(i), b = static_cast<Eigen::Index>(j);
      M[i][j] = RatPoly{Rational(V(a, b)), Rational(-V(b, a))};
    }
  return conway_normalize(LaurentPoly(polynomial_determinant(M)));
}

std::string reverse_name(const KnotTable& table, const std::string& name) {
  const KnotRecord& r = table.at(name);
  if (r.reversible) return name;
  if (name.back() == 'r') return name.substr(0, name.size() - 1);
  return name + "r";
}

std::string mirror_reverse(const KnotTable& table, const std::string& name, int sign, bool reversed) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  const KnotRecord& r = table.at(name);
  if (name.back() == 'r' && !table.contains(name.substr(0, name.size() - 1)))
    throw UnknownKnot(name, "");
  std::string token = reversed ? reverse_name(table, r.name) : r.name;
  return (sign < 0 ? "-" : "") + token;
}

const std::vector<std::pair<std::string, LaurentPoly>>& reference_alexander() {
  static const std::vector<std::pair<std::string, LaurentPoly>> table = [] {
    std::vector<std::pair<std::string, LaurentPoly>> v;
    auto add = [&](const char* k, const char* p) { v.emplace_back(k, parse_laurent(p)); };
    add("7_7", "1 - 5t + 9t^2 - 5t^3 + t^4");
    add("8_1", "3 - 7t + 3t^2");
    // Printed with a repeated t^2 term; the symmetric reading is 7t^3.
    add("8_13", "2 - 7t + 11t^2 - 7t^3 + 2t^4");
    LaurentPoly a = parse_laurent("1 - t + t^2"), b = parse_laurent("3 - 5t + 3t^2");
    v.emplace_back("8_15+7_2+3_1", a * a * b * b);
    add("4_1", "1 - 3t + t^2");
    add("6_3", "1 - 3t + 5t^2 - 3t^3 + t^4");
    add("8_3", "4 - 9t + 4t^2");
    add("8_12", "1 - 7t + 13t^2 - 7t^3 + t^4");
    add("8_17", "1 - 4t + 8t^2 - 11t^3 + 8t^4 - 4t^5 + t^6");
    add("8_18", "1 - 5t + 10t^2 - 13t^3 + 10t^4 - 5t^5 + t^6");
    return v;
  }();
  return table;
}

const std::vector<CoverOrder>& reference_cover_orders() {
  static const std::vector<CoverOrder> table = {
      {"7_7", 2, 21}, {"8_1", 2, 13},  {"8_13", 2, 29}, {"8_15", 2, 33},  {"7_2", 2, 11},
      {"3_1", 2, 3},  {"8_21", 2, 15}, {"8_18", 2, 45}, {"8_17", 2, 37}, {"8_17", 3, 169},
  };
  return table;
}

}  // namespace conc
