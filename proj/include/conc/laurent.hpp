#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conc/poly.hpp"

namespace conc {

/// Laurent polynomial sum_k c_k t^k stored as t^low * body(t).
///
/// Canonical form: the body has nonzero constant and leading coefficients,
/// or the whole polynomial is zero (low = 0, empty body).
template <typename T>
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Poly<T>& body, long low = 0) : low_(low), body_(body) { normalize(); }
  Laurent(std::initializer_list<T> coeffs) : low_(0), body_(std::vector<T>(coeffs)) { normalize(); }

  static Laurent constant(const T& v) { return Laurent(Poly<T>::constant(v)); }
  static Laurent monomial(const T& v, long exponent) {
    return Laurent(Poly<T>::constant(v), exponent);
  }
  /// Coefficients listed from exponent `low` upward.
  static Laurent from_coeffs(std::vector<T> coeffs, long low = 0) {
    return Laurent(Poly<T>(std::move(coeffs)), low);
  }

  bool is_zero() const { return body_.is_zero(); }
  long low() const { return low_; }
  long high() const { return low_ + body_.degree(); }
  /// high - low; 0 for monomials, -1 for zero.
  long span() const { return is_zero() ? -1 : body_.degree(); }
  const Poly<T>& body() const { return body_; }

  T coeff(long exponent) const { return body_.coeff(exponent - low_); }
  T leading() const { return body_.lc(); }
  T trailing() const { return body_.coeff(0); }
  bool is_monomial() const { return !is_zero() && body_.degree() == 0; }

  /// f(t) -> f(1/t).
  Laurent reciprocal() const {
    if (is_zero()) return {};
    return Laurent(body_.reversed(), -high());
  }

  Laurent shifted(long k) const {
    if (is_zero()) return {};
    return Laurent(body_, low_ + k);
  }

  template <typename U>
  U operator()(const U& t) const;

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long low = std::min(a.low_, b.low_);
    Poly<T> s = a.body_.shifted(static_cast<std::size_t>(a.low_ - low)) +
                b.body_.shifted(static_cast<std::size_t>(b.low_ - low));
    return Laurent(s, low);
  }
  friend Laurent operator-(const Laurent& a) { return Laurent(-a.body_, a.low_); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return Laurent(a.body_ * b.body_, a.low_ + b.low_);
  }
  friend Laurent operator*(const T& s, const Laurent& a) { return Laurent(s * a.body_, a.low_); }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.body_ == b.body_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  template <typename F>
  auto map(F&& f) const -> Laurent<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    return Laurent<U>(body_.map(std::forward<F>(f)), low_);
  }

 private:
  void normalize() {
    if (body_.is_zero()) {
      low_ = 0;
      return;
    }
    std::size_t z = 0;
    while (is_zero(body_[z])) ++z;
    if (z > 0) {
      std::vector<T> c(body_.coeffs().begin() + static_cast<long>(z), body_.coeffs().end());
      body_ = Poly<T>(std::move(c));
      low_ += static_cast<long>(z);
    }
  }
  static bool is_zero(const T& v) {
    using conc::is_zero;
    return is_zero(v);
  }

  long low_ = 0;
  Poly<T> body_;
};

template <typename T>
template <typename U>
U Laurent<T>::operator()(const U& t) const {
  if (is_zero()) return U(0);
  U v = body_(t);
  if (low_ >= 0) {
    for (long i = 0; i < low_; ++i) v = v * t;
  } else {
    U inv = U(1) / t;
    for (long i = 0; i < -low_; ++i) v = v * inv;
  }
  return v;
}

/// Renders `c0 + c1*t + c2*t^2 ...` with `t^-k` for negative exponents.
template <typename T>
std::string to_string(const Laurent<T>& f, const std::string& var = "t") {
  if (f.is_zero()) return "0";
  std::string out;
  for (long e = f.low(); e <= f.high(); ++e) {
    T c = f.coeff(e);
    if (!is_zero(c)) detail::append_term(out, c, e, var);
  }
  return out;
}

using LaurentPoly = Laurent<Rational>;

/// f(t^{-1}) renormalized to start at exponent 0.
template <typename T>
Laurent<T> reciprocal_conjugate(const Laurent<T>& f) {
  Laurent<T> r = f.reciprocal();
  return r.shifted(-r.low());
}

/// Moves the lowest exponent to 0.
template <typename T>
Laurent<T> shift_to_origin(const Laurent<T>& f) {
  return f.shifted(-f.low());
}

/// True when a = u * t^k * b for some nonzero constant u and integer k.
template <typename T>
bool equal_up_to_units(const Laurent<T>& a, const Laurent<T>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.span() != b.span()) return false;
  T ratio = a.trailing() / b.trailing();
  return shift_to_origin(a) == ratio * shift_to_origin(b);
}

/// Parses the canonical string form, e.g. "2 - 5*t + 2*t^2" or "t^-1 - 1 + t".
/// Accepts `t`, rational coefficients `p/q`, optional `*`, whitespace.
LaurentPoly parse_laurent(const std::string& text, char var = 't');

/// Integer evaluation helper for rational Laurent polynomials.
Rational evaluate(const LaurentPoly& f, const Rational& t);

/// Coefficient-wise conversion from integers.
LaurentPoly from_integers(const std::vector<long>& coeffs, long low = 0);

/// True when f is in the "symmetric" form c_k = c_{-k} after centering, with even span.
bool is_symmetric(const LaurentPoly& f);

/// Centers a symmetric-span polynomial at exponent 0 and fixes the sign so f(1) > 0
/// (Conway normalization when f(1) = ±1). Odd spans are only shifted to start at 0.
LaurentPoly conway_normalize(const LaurentPoly& f);

}  // namespace conc
