#pragma once

#include <string>
#include <vector>

#include "conc/algcon.hpp"
#include "conc/basis.hpp"

namespace conc {

enum class Order { one, two, four, infinite, undetermined };

/// "1", "2", "4", "inf", "undetermined".
std::string to_string(Order o);

enum class Determinacy { determined, open_span };

std::string to_string(Determinacy d);

/// Order of a decomposed class in the algebraic concordance group.
Order order_in_G(const std::vector<Integer>& coeffs, const BasisTable& basis);

struct ConcordanceOrder {
  Order order = Order::one;
  Determinacy determinacy = Determinacy::determined;
  /// Known not to be slice. Meaningful mostly for open-span results.
  bool nontrivial = false;
};

ConcordanceOrder order_in_C(const std::vector<Integer>& coeffs, const BasisTable& basis);

/// A nonzero basis coordinate.
struct DecompositionTerm {
  std::size_t index = 0;
  std::string element;
  Label label = Label::F1_1;
  bool bold = false;
  Integer coefficient;
};

struct ClassificationReport {
  std::string input;
  Scope scope = Scope::eight;
  LinearCombination comb;
  std::string combination;  // canonical rendering of comb
  std::vector<Integer> coefficients;
  std::vector<DecompositionTerm> decomposition;
  Order order_G = Order::one;
  Order order_C = Order::one;
  Determinacy determinacy = Determinacy::determined;
  bool nontrivial = false;
  std::vector<std::string> witnesses;
};

ClassificationReport classify(const std::string& expression, Scope scope);
ClassificationReport classify(const LinearCombination& comb, Scope scope, std::string input = "");
ClassificationReport classify(const LinearCombination& comb, const KnotTable& table, const BasisTable& basis,
                              std::string input = "");

std::string render_text(const ClassificationReport& r);
/// Two-space indented JSON, keys in a fixed order (schema in README.md).
std::string render_json(const ClassificationReport& r);

}  // namespace conc
