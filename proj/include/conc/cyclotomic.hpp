#pragma once

#include <string>
#include <vector>

#include "conc/laurent.hpp"

namespace conc {

/// n-th cyclotomic polynomial Φ_n as an integer polynomial (cached).
const IntPoly& cyclotomic_polynomial(int n);

/// Euler's totient.
int totient(int n);

/// Element of the cyclotomic field Q(ζ_n), stored in the power basis
/// 1, ζ, ..., ζ^{φ(n)-1}.
///
/// Order 0 marks a plain rational that has not been bound to a field yet
/// (default-constructed zeros, integer literals); it combines with any order.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& v);                   // NOLINT(google-explicit-constructor)
  Cyclotomic(int order, std::vector<Rational> coeffs);

  /// ζ_n^power.
  static Cyclotomic zeta(int order, long power = 1);

  int order() const { return order_; }
  /// Power-basis coordinates, padded to φ(n) entries (a single entry for order 0).
  std::vector<Rational> coordinates() const;
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;

  /// Same value viewed in Q(ζ_order); `order` must be 0 or a multiple compatible with this.
  Cyclotomic in_field(int order) const;

  /// ζ -> ζ^k, k coprime to n.
  Cyclotomic galois(long k) const;
  /// Complex conjugation ζ -> ζ^{-1}.
  Cyclotomic conj() const { return galois(-1); }
  /// Field norm to Q.
  Rational norm() const;
  Cyclotomic inverse() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  static int common_order(const Cyclotomic& a, const Cyclotomic& b);
  void reduce();

  int order_ = 0;
  std::vector<Rational> c_;  // trimmed; reduced modulo Φ_order
};

inline bool is_zero(const Cyclotomic& v) { return v.is_zero(); }
std::string coefficient_string(const Cyclotomic& v);
inline bool coefficient_negative(const Cyclotomic& v) {
  return v.is_rational() && !v.is_zero() && sgn(v.rational_value()) < 0;
}

using CyclotomicLaurent = Laurent<Cyclotomic>;

/// f(ζ_q^j) in Q(ζ_q); requires 0 < j < q.
Cyclotomic evaluate_at_root_of_unity(const LaurentPoly& f, int q, long j);

CyclotomicLaurent to_cyclotomic(const LaurentPoly& f, int order);

/// Coefficientwise ζ -> ζ^k.
CyclotomicLaurent galois(const CyclotomicLaurent& f, long k);
/// conj(f)(t^{-1}): complex-conjugate coefficients and invert t.
CyclotomicLaurent conjugate_reciprocal(const CyclotomicLaurent& f);
/// Field norm N(f) = prod_σ σ(f) in Q[t^±1]; `order` fixes the field.
LaurentPoly field_norm(const CyclotomicLaurent& f, int order);

/// Order of the field the coefficients are bound to (0 when none is bound).
int field_order(const CyclotomicLaurent& f);

}  // namespace conc

namespace Eigen {
template <>
struct NumTraits<conc::Cyclotomic> : GenericNumTraits<conc::Cyclotomic> {
  using Real = conc::Cyclotomic;
  using NonInteger = conc::Cyclotomic;
  using Nested = conc::Cyclotomic;
  using Literal = conc::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 200,
    MulCost = 2000
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
