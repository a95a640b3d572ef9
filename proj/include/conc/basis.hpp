#pragma once

#include <string>
#include <vector>

#include "conc/combination.hpp"
#include "conc/knot_table.hpp"

namespace conc {

/// Parses `<n>_<k>` tokens with optional `^r` / `r`, integer multipliers
/// (`2(...)`, `2*...`), `+`, `-`, `#` (a synonym for `+`) and parentheses.
/// Throws ParseError with a 1-based column, UnknownKnot for names outside the table.
LinearCombination parse_expression(const std::string& text, const KnotTable& table);

/// Inverse of `parse_expression`, terms in table order; "0" for the empty combination.
std::string render(const LinearCombination& comb, const KnotTable& table);

/// Subgroup labels: F<order in the algebraic group>^<order in the concordance group>.
enum class Label { Finf_inf, F4_inf, F2_inf, F2_2, F1_inf, F1_2, F1_1 };

std::string to_string(Label l);
Label parse_label(const std::string& text);
/// 0 encodes infinite order.
int g_order(Label l);
int c_order(Label l);

struct BasisElement {
  Label label;
  bool bold = false;
  std::string expression;
  LinearCombination comb;
};

/// Change of basis between the prime-knot generators and a subgroup-adapted basis.
class BasisTable {
 public:
  BasisTable(const KnotTable& table, std::vector<BasisElement> elements);

  Scope scope() const { return scope_; }
  const std::vector<BasisElement>& elements() const { return elements_; }
  const std::vector<std::string>& generators() const { return generators_; }
  /// Column j holds element j over the generators.
  const IntMatrix& matrix() const { return B_; }

  /// Unique integer x with B x = v.
  std::vector<Integer> decompose(const LinearCombination& comb) const;
  LinearCombination recompose(const std::vector<Integer>& coeffs) const;
  /// Elements with a given label, in table order.
  std::vector<std::size_t> indices(Label l) const;
  std::vector<std::size_t> bold_indices() const;

 private:
  Scope scope_;
  std::vector<BasisElement> elements_;
  std::vector<std::string> generators_;
  IntMatrix B_;
  IntMatrix Binv_;
};

/// Reads `label | bold-or-dash | expression` lines; checks unimodularity.
BasisTable load_basis(const std::string& text, const KnotTable& table);

const BasisTable& shipped_basis(Scope scope);

/// Subgroup ranks in label order Finf^inf, F4^inf, F2^inf, F2^2, F1^inf, F1^2, F1^1.
std::vector<std::size_t> expected_ranks(Scope scope);
/// Number of open-span elements (0 in eight-scope).
std::size_t expected_bold_count(Scope scope);

}  // namespace conc
