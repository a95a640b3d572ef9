#pragma once

#include <string>
#include <vector>

#include "conc/combination.hpp"
#include "conc/exact_linear.hpp"
#include "conc/knot_table.hpp"

namespace conc {

/// ω(s) = ((1 - s²) + 2s i) / (1 + s²) on the open upper half circle, s > 0.
struct CirclePoint {
  Rational s;

  explicit CirclePoint(Rational param);
  /// ω + ω̄ = 2(1 - s²)/(1 + s²), strictly decreasing in s.
  Rational x() const;
  GaussianRational omega() const;
  /// A parameter whose x lies strictly inside (lo, hi), with -2 <= lo < hi <= 2.
  static CirclePoint inside(const Rational& lo, const Rational& hi);
};

/// s(V + Vᵗ) - i(V - Vᵗ): a positive multiple of (1 - ω)V + (1 - ω̄)Vᵗ.
GaussianMatrix tristram_levine_form(const IntMatrix& V, const Rational& s);

/// Signature at a point off the Alexander roots; throws DomainError naming
/// the isolating interval of the offending root otherwise.
int signature_at(const IntMatrix& V, const CirclePoint& p);

/// Signature of V + Vᵗ (ω = -1).
int classical_signature(const IntMatrix& V);

/// p(x) with Δ(t) = t^d p(t + 1/t) for symmetric Δ of span 2d (up to sign).
RatPoly symmetrize_in_x(const LaurentPoly& delta);

/// Signature function along the upper half circle, traversed from ω = 1
/// (x = 2) toward ω = -1 (x = -2).
struct SignatureProfile {
  std::vector<RootInterval> sites;  // descending in x
  std::vector<IntPoly> site_factors;  // irreducible factor vanishing at each site
  std::vector<int> jumps;             // σ(after) - σ(before)
  std::vector<int> plateaus;          // sites.size() + 1 values, starting next to x = 2
  int value_at_minus_one = 0;

  bool operator==(const SignatureProfile& o) const {
    return site_factors == o.site_factors && jumps == o.jumps && plateaus == o.plateaus &&
           value_at_minus_one == o.value_at_minus_one;
  }
  bool operator!=(const SignatureProfile& o) const { return !(*this == o); }
};

SignatureProfile signature_profile(const IntMatrix& V);
/// Profile of the mirror-reverse: jumps and plateaus negated.
SignatureProfile operator-(SignatureProfile p);

/// The common refinement of all Alexander roots of a table, with one sample
/// parameter in each gap.
class SignatureAtlas {
 public:
  explicit SignatureAtlas(const KnotTable& table);

  /// Distinct roots on the open upper half circle across the table.
  std::size_t root_count() const { return roots_.size(); }
  const std::vector<RootInterval>& roots() const { return roots_; }
  const std::vector<CirclePoint>& samples() const { return samples_; }
  /// Signatures of one record at every sample.
  const std::vector<int>& vector_of(const std::string& name) const;
  std::vector<Integer> midpoint_vector(const LinearCombination& comb) const;

 private:
  std::vector<RootInterval> roots_;
  std::vector<CirclePoint> samples_;
  std::map<std::string, std::vector<int>> vectors_;
};

/// Atlas for a table, built once per table object.
const SignatureAtlas& atlas_for(const KnotTable& table);

std::vector<Integer> midpoint_vector(const LinearCombination& comb, const KnotTable& table);

/// "x_sample,signature" rows, one per atlas sample, x printed in decimal.
std::string signature_csv(const LinearCombination& comb, const KnotTable& table);

}  // namespace conc
