#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conc/cyclotomic.hpp"
#include "conc/knot_table.hpp"

namespace conc {

/// Word in a free group; letter +(g+1) is generator g, -(g+1) its inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;
};

/// One generator per arc and one relator x_k^{-1} x_j^{ε} x_i x_j^{-ε} per
/// crossing (under arcs i -> k, over arc j); the last relator is dropped when
/// `deficiency_one` is set.
GroupPresentation wirtinger(const std::vector<PdCrossing>& pd, bool deficiency_one = true);

/// Arc of each PD edge label (1-based labels; entry 0 unused).
std::vector<int> arc_of_edges(const std::vector<PdCrossing>& pd);

/// Integer group ring of the free group, words kept freely reduced.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(const Word& w, Integer c = 1) { add(w, c); }

  void add(const Word& w, const Integer& c);
  const std::map<Word, Integer>& terms() const { return terms_; }
  /// Sum of coefficients after mapping every generator to t (an integer Laurent polynomial).
  LaurentPoly abelianize() const;

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b);
  /// Left multiplication by a group element.
  friend GroupRingElement operator*(const Word& w, const GroupRingElement& a);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Word, Integer> terms_;
};

/// Fox derivative ∂w/∂x_generator.
GroupRingElement fox_derivative(const Word& w, int generator);

using LaurentMatrix = MatrixX<CyclotomicLaurent>;

LaurentMatrix laurent_identity(Eigen::Index n);
LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b);

/// Matrices for each generator with t carried by the Laurent variable.
struct Representation {
  int dimension = 1;
  int field_order = 0;  // 0 for rational coefficients
  std::vector<LaurentMatrix> images;
  std::vector<LaurentMatrix> inverses;

  LaurentMatrix evaluate(const Word& w) const;
};

/// x_i -> (t) for every generator.
Representation abelian_representation(int generators);

/// Checks every relator maps to the identity and each inverse is correct.
void check_representation(const GroupPresentation& pres, const Representation& rho);

/// ρ(x_i) = diag(ζ_p^{c_{i,0}}, ..., ζ_p^{c_{i,q-1}}) · C with C e_{m+1} = e_m,
/// C e_0 = t e_{q-1}. `labels` lists c_{i,m} arc by arc (q entries each), or one
/// entry per arc when q = 2 (read as c_{i,1} = -c_{i,0}, a Fox p-coloring).
/// Throws when the labels violate a crossing relation.
Representation metabelian_representation(const std::vector<PdCrossing>& pd, int q, long p,
                                         const std::vector<long>& labels);

/// Fox p-colorings c with c_k + c_i = 2 c_j mod p at every crossing, up to
/// adding a constant (normalized with c_0 = 0), excluding the zero coloring.
std::vector<std::vector<long>> fox_colorings(const std::vector<PdCrossing>& pd, long p);

/// det(Fox matrix without column j) / det(ρ(x_j) - I), reduced.
struct TwistedPolynomial {
  CyclotomicLaurent numerator;
  CyclotomicLaurent denominator;
  int deleted_column = 0;
};

/// Uses the first generator with nonsingular ρ(x_j) - I unless `column` is given.
TwistedPolynomial wada_invariant(const GroupPresentation& pres, const Representation& rho,
                                 std::optional<int> column = std::nullopt);

/// Determinant of a square matrix of Laurent polynomials.
CyclotomicLaurent laurent_determinant(const LaurentMatrix& M);

/// a / b ≐ c / d up to units ±ζ^k t^m (cross-multiplied).
bool equal_up_to_units(const TwistedPolynomial& a, const TwistedPolynomial& b);
bool equal_up_to_cyclotomic_units(const CyclotomicLaurent& a, const CyclotomicLaurent& b);

enum class TwistedVerdict { fail, inconclusive };

struct TwistedFoxMilnorResult {
  TwistedVerdict verdict = TwistedVerdict::inconclusive;
  std::string reason;
};

/// Necessary conditions for Δ = a · f(t) · conj(f)(1/t) once powers of (t - 1)
/// are removed: even span, and a rational Fox–Milnor pairing of the field norm.
TwistedFoxMilnorResult twisted_fox_milnor_necessary(const CyclotomicLaurent& delta, int field_order);

/// Canonical text with ζ-vector coefficients, e.g. "[1,0,2] + [0,1,0]*t".
std::string to_string(const TwistedPolynomial& tp);

}  // namespace conc

namespace Eigen {
template <>
struct NumTraits<conc::CyclotomicLaurent> : GenericNumTraits<conc::CyclotomicLaurent> {
  using Real = conc::CyclotomicLaurent;
  using NonInteger = conc::CyclotomicLaurent;
  using Nested = conc::CyclotomicLaurent;
  using Literal = conc::CyclotomicLaurent;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 400,
    MulCost = 4000
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
