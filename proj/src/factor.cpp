#include "conc/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <tuple>

namespace conc {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, p < 2^31, lowest degree first, trimmed.

using ModPoly = std::vector<std::int64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t g = p, x = 0, x1 = 1, b = mod(a, p);
  while (b != 0) {
    std::int64_t q = g / b;
    std::tie(g, b) = std::make_pair(b, g - q * b);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw DomainError("non-invertible residue");
  return mod(x, p);
}

ModPoly reduce(const IntPoly& f, std::int64_t p) {
  ModPoly r(f.size());
  Integer pp(static_cast<long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer v = f[i] % pp;
    if (v < 0) v += pp;
    r[i] = v.get_si();
  }
  trim(r);
  return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

ModPoly sub(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (b.empty()) throw DomainError("division by zero polynomial mod p");
  if (a.size() < b.size()) return {ModPoly{}, a};
  const long db = static_cast<long>(b.size()) - 1;
  ModPoly q(a.size() - b.size() + 1, 0);
  std::int64_t inv = inv_mod(b.back(), p);
  for (long i = static_cast<long>(a.size()) - 1; i >= db; --i) {
    std::int64_t f = a[static_cast<std::size_t>(i)] * inv % p;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == 0) continue;
    for (long j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      a[idx] = mod(a[idx] - f * b[static_cast<std::size_t>(j)], p);
    }
  }
  a.resize(static_cast<std::size_t>(db));
  trim(a);
  trim(q);
  return {q, a};
}

ModPoly add(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

ModPoly rem(const ModPoly& a, const ModPoly& b, std::int64_t p) { return divmod(a, b, p).second; }

ModPoly make_monic(ModPoly a, std::int64_t p) {
  if (a.empty()) return a;
  std::int64_t inv = inv_mod(a.back(), p);
  for (auto& v : a) v = v * inv % p;
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, std::int64_t p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

// s*a + t*b = gcd(a, b) (monic).
ModPoly xgcd(const ModPoly& a, const ModPoly& b, std::int64_t p, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::int64_t inv = inv_mod(r0.back(), p);
  for (auto& v : s0) v = v * inv % p;
  for (auto& v : t0) v = v * inv % p;
  for (auto& v : r0) v = v * inv % p;
  s = s0;
  t = t0;
  return r0;
}

ModPoly powmod(ModPoly base, Integer e, const ModPoly& m, std::int64_t p) {
  ModPoly result{1};
  base = rem(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base, p), m, p);
    e >>= 1;
    if (e > 0) base = rem(mul(base, base, p), m, p);
  }
  return result;
}

ModPoly derivative(const ModPoly& a, std::int64_t p) {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<std::int64_t>(i % p) % p;
  trim(d);
  return d;
}

// Distinct-degree then equal-degree (Cantor–Zassenhaus) factorization of a
// monic squarefree polynomial over F_p, p odd.
std::vector<ModPoly> factor_mod_p(const ModPoly& f, std::int64_t p, std::mt19937_64& rng) {
  std::vector<std::pair<ModPoly, int>> dd;
  ModPoly rest = f;
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  for (int d = 1; 2 * d <= static_cast<int>(rest.size()) - 1; ++d) {
    h = powmod(h, Integer(static_cast<long>(p)), rest, p);
    ModPoly g = gcd(rest, sub(h, x, p), p);
    if (g.size() > 1) {
      dd.emplace_back(g, d);
      rest = divmod(rest, g, p).first;
      h = rem(h, rest, p);
    }
  }
  if (rest.size() > 1) dd.emplace_back(rest, static_cast<int>(rest.size()) - 1);

  std::vector<ModPoly> out;
  for (auto& [g, d] : dd) {
    std::vector<ModPoly> stack{g};
    while (!stack.empty()) {
      ModPoly u = stack.back();
      stack.pop_back();
      if (static_cast<int>(u.size()) - 1 == d) {
        out.push_back(u);
        continue;
      }
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      while (true) {
        ModPoly a(u.size() - 1);
        std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
        for (auto& v : a) v = dist(rng);
        trim(a);
        if (a.size() <= 1) continue;
        ModPoly w = sub(powmod(a, e, u, p), ModPoly{1}, p);
        ModPoly g2 = gcd(u, w, p);
        if (g2.size() > 1 && g2.size() < u.size()) {
          stack.push_back(g2);
          stack.push_back(make_monic(divmod(u, g2, p).first, p));
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials modulo m = p^k.

IntPoly reduce_sym(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c(f.size());
  Integer half = m / 2;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer v = f[i] % m;
    if (v < 0) v += m;
    if (v > half) v -= m;
    c[i] = v;
  }
  return IntPoly(std::move(c));
}

IntPoly lift_int(const ModPoly& a) {
  std::vector<Integer> c;
  for (auto v : a) c.emplace_back(static_cast<long>(v));
  return IntPoly(std::move(c));
}

IntPoly reduce_pos(const IntPoly& f, const Integer& m) {
  std::vector<Integer> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer v = f[i] % m;
    if (v < 0) v += m;
    c[i] = v;
  }
  return IntPoly(std::move(c));
}

// Lifts F ≡ G*H (mod p) to (mod p^k), with G monic.
void hensel_lift(const IntPoly& F, IntPoly& G, IntPoly& H, std::int64_t p, int k) {
  ModPoly g = reduce(G, p), h = reduce(H, p), s, t;
  xgcd(g, h, p, s, t);
  Integer pj(static_cast<long>(p));
  Integer pl(static_cast<long>(p));
  for (int j = 1; j < k; ++j) {
    Integer next = pj * pl;
    IntPoly diff = reduce_pos(F - G * H, next);
    // diff is divisible by p^j.
    std::vector<Integer> ec(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i) ec[i] = diff[i] / pj;
    ModPoly e = reduce(IntPoly(ec), p);
    ModPoly et = mul(e, t, p);
    auto [q, sigma] = divmod(et, g, p);
    ModPoly tau = add(mul(e, s, p), mul(q, h, p), p);
    G = reduce_pos(G + Integer(pj) * lift_int(sigma), next);
    H = reduce_pos(H + Integer(pj) * lift_int(tau), next);
    pj = next;
  }
}

bool divides_exactly(const IntPoly& f, const IntPoly& g, IntPoly& quotient) {
  if (g.degree() > f.degree()) return false;
  if (sgn(g[0]) != 0 && sgn(f[0]) != 0 && !mpz_divisible_p(f[0].get_mpz_t(), g[0].get_mpz_t()))
    return false;
  auto [q, r] = divmod(to_rational(f), to_rational(g));
  if (!r.is_zero()) return false;
  std::vector<Integer> c;
  for (const auto& v : q.coeffs()) {
    if (v.get_den() != 1) return false;
    c.push_back(v.get_num());
  }
  quotient = IntPoly(std::move(c));
  return true;
}

bool is_prime_small(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer norm2_bound(const IntPoly& f) {
  Integer s(0);
  for (const auto& c : f.coeffs()) s += c * c;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

// Reduced-degree subsets of {0..r-1} of a given size, lexicographic.
bool next_subset(std::vector<int>& idx, int r) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < r - k + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Integer content(const IntPoly& p) {
  Integer g(0);
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (sgn(p.lc()) < 0) g = -g;
  std::vector<Integer> c;
  for (const auto& v : p.coeffs()) c.push_back(v / g);
  return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  Integer l(1);
  for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> c;
  for (const auto& v : p.coeffs()) c.push_back(Integer(v * l));
  return primitive_part(IntPoly(std::move(c)));
}

bool factor_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

IntPoly reciprocal_partner(const IntPoly& p) { return primitive_part(p.reversed()); }

bool is_self_reciprocal(const IntPoly& p) { return reciprocal_partner(p) == primitive_part(p); }

std::vector<IntPoly> factor_squarefree(const IntPoly& f_in) {
  IntPoly f = primitive_part(f_in);
  if (f.degree() <= 0) throw DomainError("factor_squarefree: constant input");
  if (f.degree() == 1) return {f};
  if (sgn(f[0]) == 0) {
    // x divides f.
    std::vector<IntPoly> rest = f.degree() > 1 ? factor_squarefree(IntPoly(std::vector<Integer>(
                                                     f.coeffs().begin() + 1, f.coeffs().end())))
                                               : std::vector<IntPoly>{};
    rest.push_back(IntPoly{Integer(0), Integer(1)});
    std::sort(rest.begin(), rest.end(), factor_less);
    return rest;
  }

  std::mt19937_64 rng(0x5eed);
  // Pick, among the first few usable primes, the one with fewest modular factors.
  std::int64_t best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (std::int64_t p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_prime_small(p)) continue;
    if (mpz_divisible_ui_p(f.lc().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    ModPoly fp = reduce(f, p);
    if (gcd(fp, derivative(fp, p), p).size() != 1) continue;
    auto facs = factor_mod_p(make_monic(fp, p), p, rng);
    ++tried;
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw DomainError("factor_squarefree: no usable prime");
  if (best.size() == 1) return {f};

  const std::int64_t p = best_p;
  const Integer lc = f.lc();
  Integer bound = Integer(2) * abs(lc) * norm2_bound(f);
  for (long i = 0; i < f.degree(); ++i) bound *= 2;
  int k = 1;
  Integer m(static_cast<long>(p));
  while (m <= bound) {
    m *= p;
    ++k;
  }

  // Multifactor lifting by peeling one monic factor at a time.
  std::vector<IntPoly> lifted;
  IntPoly F = f;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    IntPoly G = lift_int(best[i]);
    ModPoly rest_mod{1};
    for (std::size_t j = i + 1; j < best.size(); ++j) rest_mod = mul(rest_mod, best[j], p);
    Integer lr = F.lc() % Integer(static_cast<long>(p));
    if (lr < 0) lr += p;
    const std::int64_t lcp = lr.get_si();
    for (auto& v : rest_mod) v = v * lcp % p;
    IntPoly H = lift_int(rest_mod);
    hensel_lift(F, G, H, p, k);
    lifted.push_back(G);
    F = H;
  }
  {
    // Last factor: F ≡ lc * g_last, made monic modulo m.
    Integer inv;
    Integer lcm_ = F.lc() % m;
    if (lcm_ < 0) lcm_ += m;
    mpz_invert(inv.get_mpz_t(), lcm_.get_mpz_t(), m.get_mpz_t());
    lifted.push_back(reduce_pos(inv * F, m));
  }

  // Zassenhaus recombination.
  std::vector<IntPoly> result;
  std::vector<IntPoly> remaining = lifted;
  IntPoly cur = f;
  int size = 1;
  while (2 * size <= static_cast<int>(remaining.size())) {
    bool found = false;
    int r = static_cast<int>(remaining.size());
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    do {
      IntPoly cand = IntPoly::constant(cur.lc());
      for (int i : idx) cand = reduce_sym(cand * remaining[static_cast<std::size_t>(i)], m);
      cand = primitive_part(reduce_sym(cand, m));
      IntPoly q;
      if (cand.degree() > 0 && divides_exactly(cur, cand, q)) {
        result.push_back(cand);
        cur = primitive_part(q);
        std::vector<IntPoly> keep;
        for (int i = 0; i < r; ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end())
            keep.push_back(remaining[static_cast<std::size_t>(i)]);
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (next_subset(idx, r));
    if (!found) ++size;
  }
  if (cur.degree() > 0) result.push_back(primitive_part(cur));
  std::sort(result.begin(), result.end(), factor_less);
  return result;
}

LaurentPoly Factorization::expand() const {
  RatPoly acc = RatPoly::constant(constant);
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) acc = acc * to_rational(f.poly);
  return LaurentPoly(acc, shift);
}

Factorization factor_over_rationals(const LaurentPoly& f) {
  if (f.is_zero()) throw DomainError("factor_over_rationals: zero polynomial");
  Factorization out;
  out.shift = f.low();
  RatPoly body = f.body();
  if (body.degree() == 0) {
    out.constant = body[0];
    return out;
  }
  // Yun's squarefree decomposition over Q.
  RatPoly a = body.monic();
  RatPoly b = a.derivative();
  RatPoly c = gcd(a, b);
  RatPoly w = exact_div(a, c);
  RatPoly y = exact_div(b, c);
  int i = 1;
  while (w.degree() > 0) {
    RatPoly z = y - w.derivative();
    RatPoly g = gcd(w, z);
    if (g.degree() > 0) {
      for (auto& irr : factor_squarefree(primitive_part(g))) out.factors.push_back({irr, i});
    }
    w = exact_div(w, g);
    y = exact_div(z, g);
    ++i;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& x, const Factor& y2) { return factor_less(x.poly, y2.poly); });
  RatPoly prod = RatPoly::constant(Rational(1));
  for (const auto& fc : out.factors)
    for (int k = 0; k < fc.multiplicity; ++k) prod = prod * to_rational(fc.poly);
  out.constant = body.lc() / prod.lc();
  if (LaurentPoly(body) != LaurentPoly(out.constant * prod))
    throw DomainError("factor_over_rationals: reconstruction mismatch");
  return out;
}

FoxMilnorResult reciprocal_pairing(const LaurentPoly& f) {
  Factorization fac = factor_over_rationals(f);
  FoxMilnorResult res;
  res.pass = true;
  RatPoly witness = RatPoly::constant(Rational(1));
  std::vector<bool> used(fac.factors.size(), false);
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    if (used[i]) continue;
    const Factor& fi = fac.factors[i];
    IntPoly partner = reciprocal_partner(fi.poly);
    if (partner == fi.poly) {
      used[i] = true;
      if (fi.multiplicity % 2 != 0) {
        res.pass = false;
        res.obstruction.push_back(fi);
        continue;
      }
      for (int k = 0; k < fi.multiplicity / 2; ++k) witness = witness * to_rational(fi.poly);
      continue;
    }
    std::size_t j = i + 1;
    while (j < fac.factors.size() && (used[j] || fac.factors[j].poly != partner)) ++j;
    used[i] = true;
    if (j == fac.factors.size()) {
      res.pass = false;
      res.obstruction.push_back(fi);
      continue;
    }
    used[j] = true;
    const Factor& fj = fac.factors[j];
    if (fj.multiplicity != fi.multiplicity) {
      res.pass = false;
      res.obstruction.push_back(fi);
      res.obstruction.push_back(fj);
      continue;
    }
    for (int k = 0; k < fi.multiplicity; ++k) witness = witness * to_rational(fi.poly);
  }
  if (res.pass) res.witness = LaurentPoly(witness);
  return res;
}

FoxMilnorResult fox_milnor_test(const LaurentPoly& delta) {
  if (!is_symmetric(delta)) throw DomainError("fox_milnor_test: input is not symmetric");
  Rational at_one = delta(Rational(1));
  if (at_one != 1 && at_one != -1) throw DomainError("fox_milnor_test: Δ(1) ≠ ±1");
  FoxMilnorResult res = reciprocal_pairing(delta);
  if (res.pass) {
    LaurentPoly check = res.witness * res.witness.reciprocal();
    if (!equal_up_to_units(check, delta)) throw DomainError("fox_milnor_test: witness mismatch");
  }
  return res;
}

}  // namespace conc
