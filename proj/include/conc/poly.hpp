#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "conc/error.hpp"
#include "conc/scalar.hpp"

namespace conc {

/// Dense univariate polynomial with coefficients in `T`, lowest degree first.
///
/// `T` must be a commutative ring with `T(0)`, `T(1)`, `+`, `-`, `*`, `==`
/// and an `is_zero(const T&)` overload. Division, `gcd` and `divmod` further
/// require `T` to be a field with `operator/`.
template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(T(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return T(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& lc() const { return c_.back(); }

  void set_coeff(std::size_t i, const T& v) {
    if (i >= c_.size()) c_.resize(i + 1, T(0));
    c_[i] = v;
    trim();
  }

  template <typename U>
  U operator()(const U& x) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(d));
  }

  /// p(x) -> x^deg p(1/x).
  Poly reversed() const {
    std::vector<T> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
  }

  /// p(x) -> p(-x).
  Poly negated_argument() const {
    std::vector<T> r = c_;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Poly(std::move(r));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (conc_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, Poly a) {
    for (auto& v : a.c_) v = s * v;
    a.trim();
    return a;
  }
  friend Poly operator*(Poly a, const T& s) { return s * std::move(a); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Multiply by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> r(k, T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  /// Make monic (field coefficients).
  Poly monic() const {
    if (is_zero()) return {};
    T inv = T(1) / lc();
    return inv * *this;
  }

  template <typename F>
  auto map(F&& f) const -> Poly<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    std::vector<U> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(f(v));
    return Poly<U>(std::move(r));
  }

 private:
  static bool conc_is_zero(const T& v) { return is_zero_scalar(v); }
  static bool is_zero_scalar(const T& v) {
    using conc::is_zero;
    return is_zero(v);
  }
  void trim() {
    while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

/// Quotient and remainder of `a` by nonzero `b` over a field.
template <typename T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<T> r = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {Poly<T>{}, a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T(0));
  const T inv = T(1) / b.lc();
  for (long i = a.degree(); i >= db; --i) {
    const T& top = r[static_cast<std::size_t>(i)];
    if (is_zero(top)) continue;
    T f = top * inv;
    q[static_cast<std::size_t>(i - db)] = f;
    for (long j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      r[idx] = r[idx] - f * b[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <typename T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).second;
}

/// Exact quotient; throws when `b` does not divide `a`.
template <typename T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

/// Monic greatest common divisor over a field; gcd(0, 0) = 0.
template <typename T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Squarefree part (field of characteristic zero).
template <typename T>
Poly<T> squarefree_part(const Poly<T>& p) {
  if (p.degree() <= 0) return p.monic();
  return exact_div(p.monic(), gcd(p, p.derivative()));
}

inline std::string coefficient_string(const Rational& v) { return v.get_str(); }
inline std::string coefficient_string(const Integer& v) { return v.get_str(); }
inline bool coefficient_negative(const Rational& v) { return sgn(v) < 0; }
inline bool coefficient_negative(const Integer& v) { return sgn(v) < 0; }

namespace detail {

template <typename T>
void append_term(std::string& out, const T& c, long exponent, const std::string& var) {
  bool neg = coefficient_negative(c);
  T mag = neg ? T(-c) : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  std::string cs = coefficient_string(mag);
  if (exponent == 0) {
    out += cs;
    return;
  }
  if (cs != "1") out += cs + "*";
  out += var;
  if (exponent != 1) out += "^" + std::to_string(exponent);
}

}  // namespace detail

/// Renders `c0 + c1*x + c2*x^2 ...`, skipping zero terms.
template <typename T>
std::string to_string(const Poly<T>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!is_zero(p[i])) detail::append_term(out, p[i], static_cast<long>(i), var);
  return out;
}

using RatPoly = Poly<Rational>;
using IntPoly = Poly<Integer>;

inline RatPoly to_rational(const IntPoly& p) {
  return p.map([](const Integer& v) { return Rational(v); });
}

}  // namespace conc
