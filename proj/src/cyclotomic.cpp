#include "conc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace conc {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

// Reduces a power-basis vector of any length modulo the monic Φ_n.
void reduce_mod(std::vector<Rational>& c, int n) {
  const IntPoly& phi = cyclotomic_polynomial(n);
  const auto d = static_cast<std::size_t>(phi.degree());
  for (std::size_t i = c.size(); i-- > d;) {
    if (sgn(c[i]) == 0) continue;
    Rational f = c[i];
    for (std::size_t j = 0; j <= d; ++j) c[i - d + j] -= f * phi[j];
  }
  if (c.size() > d) c.resize(d);
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

}  // namespace

const IntPoly& cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<Integer> xn(static_cast<std::size_t>(n) + 1, Integer(0));
  xn[0] = -1;
  xn[static_cast<std::size_t>(n)] = 1;
  RatPoly p = to_rational(IntPoly(std::move(xn)));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = exact_div(p, to_rational(cyclotomic_polynomial(d)));
  IntPoly phi = p.map([](const Rational& v) { return Integer(v); });
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache.emplace(n, std::move(phi)).first->second;
}

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic(const Rational& v) {
  if (sgn(v) != 0) c_.push_back(v);
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 0) throw DomainError("cyclotomic order must be nonnegative");
  reduce();
}

Cyclotomic Cyclotomic::zeta(int order, long power) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  std::vector<Rational> c(static_cast<std::size_t>(mod(power, order)) + 1, Rational(0));
  c.back() = 1;
  return Cyclotomic(order, std::move(c));
}

void Cyclotomic::reduce() {
  if (order_ == 0) {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    if (c_.size() > 1) throw DomainError("unbound cyclotomic value must be rational");
    return;
  }
  reduce_mod(c_, order_);
}

std::vector<Rational> Cyclotomic::coordinates() const {
  std::vector<Rational> out = c_;
  out.resize(order_ == 0 ? 1 : static_cast<std::size_t>(totient(order_)), Rational(0));
  return out;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic value is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

Cyclotomic Cyclotomic::in_field(int order) const {
  if (order == order_) return *this;
  if (order_ != 0) throw DomainError("mixing cyclotomic fields of different orders");
  Cyclotomic out = *this;
  out.order_ = order;
  return out;
}

int Cyclotomic::common_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == 0) return b.order_;
  if (b.order_ == 0 || a.order_ == b.order_) return a.order_;
  throw DomainError("mixing cyclotomic fields of different orders");
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  int n = Cyclotomic::common_order(a, b);
  std::vector<Rational> c = a.c_;
  if (b.c_.size() > c.size()) c.resize(b.c_.size(), Rational(0));
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  Cyclotomic out;
  out.order_ = n;
  out.c_ = std::move(c);
  while (!out.c_.empty() && sgn(out.c_.back()) == 0) out.c_.pop_back();
  return out;
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic out = a;
  for (auto& v : out.c_) v = -v;
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  int n = Cyclotomic::common_order(a, b);
  Cyclotomic out;
  out.order_ = n;
  if (a.c_.empty() || b.c_.empty()) return out;
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  out.c_ = std::move(c);
  out.reduce();
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_ && a.order_ != 0 && b.order_ != 0) return false;
  return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (order_ <= 2 || c_.size() <= 1) return *this;
  if (std::gcd(mod(k, order_), static_cast<long>(order_)) != 1)
    throw DomainError("Galois exponent must be coprime to the field order");
  std::vector<Rational> c(static_cast<std::size_t>(order_), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    c[static_cast<std::size_t>(mod(static_cast<long>(i) * k, order_))] += c_[i];
  return Cyclotomic(order_, std::move(c));
}

Rational Cyclotomic::norm() const {
  if (is_rational()) {
    Rational v = rational_value();
    Rational out(1);
    for (int i = 0, d = order_ == 0 ? 1 : totient(order_); i < d; ++i) out *= v;
    return out;
  }
  Cyclotomic prod(Rational(1));
  for (long k = 1; k < order_; ++k)
    if (std::gcd(k, static_cast<long>(order_)) == 1) prod *= galois(k);
  return prod.rational_value();
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("division by zero in cyclotomic field");
  if (is_rational()) {
    Cyclotomic out(Rational(1) / c_[0]);
    out.order_ = order_;
    return out;
  }
  Cyclotomic others(Rational(1));
  others.order_ = order_;
  for (long k = 2; k < order_; ++k)
    if (std::gcd(k, static_cast<long>(order_)) == 1) others *= galois(k);
  Rational n = (others * *this).rational_value();
  return others * Cyclotomic(Rational(1) / n);
}

std::string coefficient_string(const Cyclotomic& v) {
  if (v.is_rational()) return v.rational_value().get_str();
  std::string out = "[";
  auto c = v.coordinates();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += c[i].get_str();
  }
  return out + "]";
}

Cyclotomic evaluate_at_root_of_unity(const LaurentPoly& f, int q, long j) {
  if (q < 1 || j <= 0 || j >= q) throw DomainError("root of unity index out of range");
  Cyclotomic acc(Rational(0));
  acc = acc.in_field(q);
  for (long e = f.low(); e <= f.high(); ++e) {
    const Rational c = f.coeff(e);
    if (sgn(c) == 0) continue;
    acc += Cyclotomic(c) * Cyclotomic::zeta(q, e * j);
  }
  return acc.in_field(q);
}

CyclotomicLaurent to_cyclotomic(const LaurentPoly& f, int order) {
  return f.map([order](const Rational& v) { return Cyclotomic(v).in_field(v == 0 ? 0 : order); });
}

CyclotomicLaurent galois(const CyclotomicLaurent& f, long k) {
  return f.map([k](const Cyclotomic& v) { return v.galois(k); });
}

CyclotomicLaurent conjugate_reciprocal(const CyclotomicLaurent& f) {
  return galois(f, -1).reciprocal();
}

int field_order(const CyclotomicLaurent& f) {
  int n = 0;
  for (const auto& c : f.body().coeffs()) {
    if (c.order() == 0) continue;
    if (n != 0 && n != c.order()) throw DomainError("mixing cyclotomic fields of different orders");
    n = c.order();
  }
  return n;
}

LaurentPoly field_norm(const CyclotomicLaurent& f, int order) {
  CyclotomicLaurent prod = CyclotomicLaurent::constant(Cyclotomic(1));
  if (order <= 2) {
    prod = f;
  } else {
    for (long k = 1; k < order; ++k)
      if (std::gcd(k, static_cast<long>(order)) == 1) prod *= galois(f, k);
  }
  return prod.map([](const Cyclotomic& v) { return v.rational_value(); });
}

}  // namespace conc
