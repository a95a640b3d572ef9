#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conc/knot_table.hpp"

namespace conc {

struct VerificationCheck {
  std::string name;
  bool pass = true;
  std::string detail;
  /// Informational lines (e.g. label claims no invariant here can certify).
  bool note = false;
};

/// Reruns every table-level check: reference polynomials and cover orders,
/// cover orders against |Δ(-1)|, basis unimodularity and ranks, the label audit,
/// and the unit-circle root count.
std::vector<VerificationCheck> verify_tables(Scope scope);

/// Distinct roots of table Alexander polynomials on the open upper half circle.
std::size_t circle_root_count(Scope scope);
/// Count stated for the nine-crossing table; no stated value for eight.
std::optional<std::size_t> expected_circle_root_count(Scope scope);

}  // namespace conc
