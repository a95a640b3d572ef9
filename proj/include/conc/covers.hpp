#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conc/knot_table.hpp"

namespace conc {

/// |H_1| of the q-fold branched cover: |Res(Δ, 1 + t + ... + t^{q-1})|.
Integer homology_order(const LaurentPoly& delta, int q);
Integer homology_order(const KnotTable& table, const std::string& knot, int q);

struct CoverHomology {
  std::string knot;
  int q = 2;
  Integer order{1};
  /// Invariant factors greater than one.
  std::vector<Integer> invariant_factors;
};

/// coker(V + Vᵗ) by Smith normal form.
CoverHomology two_fold_structure(const KnotRecord& knot);

/// Element of ⊕ Z/d_i as residues 0 <= r_i < d_i.
using GroupElement = std::vector<long>;

/// Symmetric Q/Z-valued form on ⊕ Z/d_i, stored as λ(e_i, e_j) reduced to [0, 1).
class LinkingForm {
 public:
  LinkingForm(std::vector<long> orders, RatMatrix values);

  /// The form x^T A^{-1} y on coker(A) for symmetric nonsingular A, in
  /// invariant-factor coordinates.
  static LinkingForm from_presentation(const IntMatrix& A);

  const std::vector<long>& orders() const { return orders_; }
  const RatMatrix& values() const { return L_; }
  long group_order() const;
  std::size_t rank() const { return orders_.size(); }
  /// λ(x, y) in [0, 1).
  Rational operator()(const GroupElement& x, const GroupElement& y) const;
  bool is_nondegenerate() const;

 private:
  std::vector<long> orders_;
  RatMatrix L_;
};

LinkingForm two_fold_linking_form(const KnotRecord& knot);

/// A subgroup as its sorted element list.
using Subgroup = std::vector<GroupElement>;

/// All subgroups H with |H|^2 = |G|, λ(H, H) = 0 and action(H) = H (when an
/// action matrix on coordinates is given). Sorted, deterministic.
std::vector<Subgroup> metabolizers(const LinkingForm& form, const std::optional<IntMatrix>& action = std::nullopt,
                                   long max_order = 100000);

struct CharacterSpec {
  int q = 2;
  long p = 0;
  std::vector<GroupElement> subgroup_generators;
  GroupElement element;     // h with χ = λ(h, ·)
  std::vector<long> values;  // χ(e_i) in Z_p
};

/// Characters λ(h, ·) into Z_p for h ∈ H of order p, identifying χ with -χ
/// (their twisted polynomials are complex conjugates). Empty for trivial H.
std::vector<CharacterSpec> characters_from_metabolizer(const Subgroup& H, const LinkingForm& form, long p);

/// Minimal generating set of a subgroup (greedy, deterministic).
std::vector<GroupElement> generators_of(const Subgroup& H, const std::vector<long>& orders);

long element_order(const GroupElement& x, const std::vector<long>& orders);

}  // namespace conc
