#pragma once

#include <optional>
#include <vector>

#include "conc/laurent.hpp"

namespace conc {

struct Factor {
  IntPoly poly;  // primitive, irreducible over Q, positive leading coefficient
  int multiplicity = 1;
};

/// f = constant * t^shift * prod poly_i^m_i, factors in deterministic order
/// (by degree, then coefficients from the constant term up).
struct Factorization {
  Rational constant{1};
  long shift = 0;
  std::vector<Factor> factors;

  LaurentPoly expand() const;
};

Factorization factor_over_rationals(const LaurentPoly& f);

/// Irreducible factors of a squarefree primitive integer polynomial of
/// positive degree, each with positive leading coefficient, sorted.
std::vector<IntPoly> factor_squarefree(const IntPoly& f);

/// Primitive integer polynomial proportional to `p`, with positive leading coefficient.
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);
Integer content(const IntPoly& p);

/// Lexicographic order used for factor lists: degree, then coefficients.
bool factor_less(const IntPoly& a, const IntPoly& b);

/// x^deg p(1/x) normalized to a primitive polynomial with positive leading coefficient.
IntPoly reciprocal_partner(const IntPoly& p);
bool is_self_reciprocal(const IntPoly& p);

struct FoxMilnorResult {
  bool pass = false;
  /// On pass: f with f(t) f(t^{-1}) equal to the input up to ±t^k (and a constant
  /// when the input is not primitive).
  LaurentPoly witness;
  /// On failure: factors whose multiplicity pattern blocks a pairing.
  std::vector<Factor> obstruction;
};

/// Fox–Milnor test for an Alexander-type polynomial: symmetric with Δ(1) = ±1.
FoxMilnorResult fox_milnor_test(const LaurentPoly& delta);

/// The pairing criterion behind `fox_milnor_test` without its preconditions:
/// pass iff f = c t^k g(t) g(t^{-1}) for a rational constant c and rational g.
FoxMilnorResult reciprocal_pairing(const LaurentPoly& f);

}  // namespace conc
