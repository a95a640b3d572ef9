#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conc/laurent.hpp"
#include "conc/scalar.hpp"

namespace conc {

enum class Scope { eight = 8, nine = 9 };

Scope parse_scope(const std::string& text);
std::string to_string(Scope s);

using PdCrossing = std::array<int, 4>;

struct KnotRecord {
  std::string name;
  int crossing_number = 0;
  IntMatrix seifert;
  std::vector<PdCrossing> pd;
  bool reversible = true;
  bool amphicheiral = false;

  int genus() const { return static_cast<int>(seifert.rows() / 2); }
};

/// Immutable name-indexed table of prime knots.
class KnotTable {
 public:
  KnotTable() = default;
  KnotTable(Scope scope, std::vector<KnotRecord> records);

  Scope scope() const { return scope_; }
  std::size_t size() const { return records_.size(); }
  const std::vector<KnotRecord>& records() const { return records_; }
  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  /// Throws UnknownKnot, with a scope hint when the name is a nine-crossing knot.
  const KnotRecord& at(const std::string& name) const;
  const LaurentPoly& alexander(const std::string& name) const;

 private:
  Scope scope_ = Scope::eight;
  std::vector<KnotRecord> records_;
  std::map<std::string, std::size_t> index_;
  std::vector<LaurentPoly> alexander_;
};

/// Names a scope must contain, in table order.
std::vector<std::string> expected_names(Scope scope);

/// Parses the line-oriented knot data format and validates every record.
KnotTable load_table(const std::string& text, Scope scope);
KnotTable load_table_file(const std::string& path, Scope scope);

/// Directory holding the shipped data files; KNOTCONC_DATA_DIR overrides the build default.
std::string data_directory();
std::string read_text_file(const std::string& path);

/// Table loaded once per process from `data_directory()`.
const KnotTable& shipped_table(Scope scope);

/// det(V - t V^T), Conway-normalized.
LaurentPoly alexander_from_seifert(const IntMatrix& V);

/// Canonical oriented-knot token: "-" prefix for negative sign, "r" suffix for
/// a distinct reverse. Reversible knots absorb the reversal.
std::string mirror_reverse(const KnotTable& table, const std::string& name, int sign, bool reversed);

/// Name of the distinct reverse record, or `name` itself for reversible knots.
std::string reverse_name(const KnotTable& table, const std::string& name);

/// Polynomials the table must reproduce up to units, keyed by the knot
/// (or connected sum, written "8_15+7_2+3_1").
const std::vector<std::pair<std::string, LaurentPoly>>& reference_alexander();

struct CoverOrder {
  std::string knot;
  int q;
  long order;
};
const std::vector<CoverOrder>& reference_cover_orders();

}  // namespace conc
