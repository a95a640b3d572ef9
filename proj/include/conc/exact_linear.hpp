#pragma once

#include <utility>
#include <vector>

#include "conc/poly.hpp"
#include "conc/scalar.hpp"

namespace conc {

/// a + b i with rational a, b.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.norm();
    GaussianRational p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline bool is_zero(const GaussianRational& v) { return sgn(v.re) == 0 && sgn(v.im) == 0; }

using GaussianMatrix = MatrixX<GaussianRational>;

/// U * M * W = D with U, W unimodular and d_1 | d_2 | ... on the diagonal of D.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix W;

  /// Diagonal entries of D (nonnegative), including zeros and ones.
  std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& M);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& M);

/// Inverse of a unimodular integer matrix; throws when |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& M);

struct SignatureNullity {
  int signature = 0;
  int nullity = 0;
};

/// Signature and nullity of a Hermitian matrix from its (real-rooted)
/// characteristic polynomial by Descartes' rule.
SignatureNullity hermitian_signature(const GaussianMatrix& H);

/// Open interval (lo, hi) holding exactly one real root.
struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Number of distinct real roots in (a, b] by Sturm's theorem.
int sturm_count(const RatPoly& p, const Rational& a, const Rational& b);

/// Isolates every distinct real root of p strictly inside (lo, hi).
/// Roots sitting exactly on lo or hi are excluded.
std::vector<RootInterval> sturm_isolate(const RatPoly& p, const Rational& lo, const Rational& hi);

/// Halves an isolating interval of a squarefree p until hi - lo <= width.
RootInterval refine(const RatPoly& p, RootInterval iv, const Rational& width);

Rational resultant(const RatPoly& a, const RatPoly& b);

/// Determinant over any field by Gaussian elimination.
template <typename F>
F field_determinant(MatrixX<F> A) {
  using conc::is_zero;
  const Eigen::Index n = A.rows();
  F det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && is_zero(A(piv, c))) ++piv;
    if (piv == n) return F(0);
    if (piv != c) {
      A.row(piv).swap(A.row(c));
      det = -det;
    }
    det = det * A(c, c);
    const F inv = F(1) / A(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (is_zero(A(r, c))) continue;
      F f = A(r, c) * inv;
      for (Eigen::Index k = c; k < n; ++k) A(r, k) = A(r, k) - f * A(c, k);
    }
  }
  return det;
}

/// Characteristic polynomial det(x I - A) via Hessenberg reduction.
template <typename F>
Poly<F> characteristic_polynomial(MatrixX<F> H) {
  using conc::is_zero;
  const Eigen::Index n = H.rows();
  for (Eigen::Index m = 1; m + 1 < n; ++m) {
    Eigen::Index i = m;
    while (i < n && is_zero(H(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      H.row(i).swap(H.row(m));
      H.col(i).swap(H.col(m));
    }
    const F inv = F(1) / H(m, m - 1);
    for (Eigen::Index j = m + 1; j < n; ++j) {
      if (is_zero(H(j, m - 1))) continue;
      F u = H(j, m - 1) * inv;
      for (Eigen::Index k = 0; k < n; ++k) H(j, k) = H(j, k) - u * H(m, k);
      for (Eigen::Index k = 0; k < n; ++k) H(k, m) = H(k, m) + u * H(k, j);
    }
  }
  std::vector<Poly<F>> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  p.push_back(Poly<F>::constant(F(1)));
  const Poly<F> x = Poly<F>::x();
  for (Eigen::Index m = 1; m <= n; ++m) {
    Poly<F> next = (x - Poly<F>::constant(H(m - 1, m - 1))) * p[static_cast<std::size_t>(m - 1)];
    F prod(1);
    for (Eigen::Index i = m - 1; i >= 1; --i) {
      prod = prod * H(i, i - 1);
      F coef = H(i - 1, m - 1) * prod;
      if (!is_zero(coef)) next = next - coef * p[static_cast<std::size_t>(i - 1)];
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

/// Determinant of a square polynomial matrix by evaluation at 0, 1, 2, ...
/// and Newton interpolation; exact over any field of characteristic zero.
template <typename F>
Poly<F> polynomial_determinant(const std::vector<std::vector<Poly<F>>>& M) {
  const std::size_t n = M.size();
  if (n == 0) return Poly<F>::constant(F(1));
  long bound = 0;
  for (const auto& row : M) {
    long d = -1;
    for (const auto& e : row) d = std::max(d, e.degree());
    if (d < 0) return {};
    bound += d;
  }
  std::vector<F> xs, ys;
  for (long k = 0; k <= bound; ++k) {
    F xk(k);
    MatrixX<F> A(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = M[i][j](xk);
    xs.push_back(xk);
    ys.push_back(field_determinant(std::move(A)));
  }
  // Divided differences in place, then Horner-style Newton expansion.
  std::vector<F> c = ys;
  for (std::size_t j = 1; j < c.size(); ++j)
    for (std::size_t i = c.size() - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  Poly<F> result = Poly<F>::constant(c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    result = result * (Poly<F>::x() - Poly<F>::constant(xs[i])) + Poly<F>::constant(c[i]);
  }
  return result;
}

}  // namespace conc

namespace Eigen {
template <>
struct NumTraits<conc::GaussianRational> : GenericNumTraits<conc::GaussianRational> {
  using Real = conc::GaussianRational;
  using NonInteger = conc::GaussianRational;
  using Nested = conc::GaussianRational;
  using Literal = conc::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 80,
    MulCost = 320
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
