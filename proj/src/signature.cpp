#include "conc/signature.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <mutex>

#include "conc/factor.hpp"

namespace conc {

CirclePoint::CirclePoint(Rational param) : s(std::move(param)) {
  if (sgn(s) <= 0) throw DomainError("circle parameter must be positive");
}

Rational CirclePoint::x() const {
  Rational s2 = s * s;
  return 2 * (1 - s2) / (1 + s2);
}

GaussianRational CirclePoint::omega() const {
  Rational s2 = s * s;
  return {(1 - s2) / (1 + s2), 2 * s / (1 + s2)};
}

CirclePoint CirclePoint::inside(const Rational& lo, const Rational& hi) {
  if (!(lo < hi) || lo < -2 || hi > 2) throw DomainError("invalid x-interval for a circle sample");
  const Rational m = (lo + hi) / 2;
  const Rational r = (2 - m) / (2 + m);
  for (unsigned k = 2;; k += 2) {
    Integer scale = Integer(1) << k;
    Integer scaled = Integer(r.get_num() * scale * scale / r.get_den());
    Integer root = sqrt(scaled);
    if (sgn(root) == 0) continue;
    CirclePoint p(Rational(root, scale));
    Rational x = p.x();
    if (lo < x && x < hi) return p;
  }
}

GaussianMatrix tristram_levine_form(const IntMatrix& V, const Rational& s) {
  const Eigen::Index n = V.rows();
  GaussianMatrix H(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      H(i, j) = GaussianRational(s * Rational(V(i, j) + V(j, i)), Rational(V(j, i) - V(i, j)));
  return H;
}

int classical_signature(const IntMatrix& V) {
  const Eigen::Index n = V.rows();
  GaussianMatrix H(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) H(i, j) = GaussianRational(Rational(V(i, j) + V(j, i)));
  return hermitian_signature(H).signature;
}

RatPoly symmetrize_in_x(const LaurentPoly& delta) {
  if (delta.is_zero()) throw DomainError("cannot symmetrize the zero polynomial");
  if (delta.span() % 2 != 0) throw DomainError("polynomial has odd span");
  const long d = delta.span() / 2;
  const long mid = delta.low() + d;
  for (long k = 1; k <= d; ++k)
    if (delta.coeff(mid + k) != delta.coeff(mid - k)) throw DomainError("polynomial is not symmetric");
  // t^k + t^-k = P_k(x), P_0 = 2, P_1 = x, P_{k+1} = x P_k - P_{k-1}.
  const RatPoly x = RatPoly::x();
  RatPoly prev = RatPoly::constant(Rational(2)), cur = x;
  RatPoly out = RatPoly::constant(delta.coeff(mid));
  for (long k = 1; k <= d; ++k) {
    out += delta.coeff(mid + k) * cur;
    RatPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

namespace {

struct Site {
  RootInterval iv;
  IntPoly factor;
};

// Irreducible factors of p(x) with a root strictly inside (-2, 2).
std::vector<IntPoly> circle_factors(const RatPoly& p) {
  std::vector<IntPoly> out;
  if (p.degree() <= 0) return out;
  for (const auto& f : factor_over_rationals(LaurentPoly(p)).factors)
    if (!sturm_isolate(to_rational(f.poly), Rational(-2), Rational(2)).empty()) out.push_back(f.poly);
  return out;
}

// Isolates the roots of distinct irreducible factors and refines them until
// the intervals are pairwise separated; returned in descending x.
std::vector<Site> separated_sites(const std::vector<IntPoly>& factors) {
  std::vector<Site> sites;
  for (const auto& f : factors)
    for (auto iv : sturm_isolate(to_rational(f), Rational(-2), Rational(2))) {
      // Gaps at both ends of the arc need room, so pull intervals off x = ±2.
      while (iv.hi == 2 || iv.lo == -2) iv = refine(to_rational(f), iv, (iv.hi - iv.lo) / 2);
      sites.push_back({iv, f});
    }
  auto by_lo = [](const Site& a, const Site& b) { return a.iv.lo < b.iv.lo; };
  std::sort(sites.begin(), sites.end(), by_lo);
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < sites.size(); ++i) {
      if (sites[i].iv.hi < sites[i + 1].iv.lo) continue;
      again = true;
      for (std::size_t k : {i, i + 1}) {
        RatPoly f = to_rational(sites[k].factor);
        sites[k].iv = refine(f, sites[k].iv, (sites[k].iv.hi - sites[k].iv.lo) / 2);
      }
    }
    std::sort(sites.begin(), sites.end(), by_lo);
  }
  std::reverse(sites.begin(), sites.end());
  return sites;
}

// One sample per gap, from the x = 2 end toward x = -2.
std::vector<CirclePoint> gap_samples(const std::vector<Site>& sites) {
  std::vector<CirclePoint> out;
  Rational upper(2);
  for (const auto& s : sites) {
    out.push_back(CirclePoint::inside(s.iv.hi, upper));
    upper = s.iv.lo;
  }
  out.push_back(CirclePoint::inside(Rational(-2), upper));
  return out;
}

std::string describe(const RootInterval& iv) {
  return "(" + iv.lo.get_str() + ", " + iv.hi.get_str() + ")";
}

}  // namespace

int signature_at(const IntMatrix& V, const CirclePoint& p) {
  SignatureNullity sn = hermitian_signature(tristram_levine_form(V, p.s));
  if (sn.nullity == 0) return sn.signature;
  const Rational x = p.x();
  RatPoly sym = symmetrize_in_x(alexander_from_seifert(V));
  Rational w(1, 1 << 20);
  RootInterval iv{x - w, x + w};
  for (const auto& r : sturm_isolate(sym, Rational(-2), Rational(2)))
    if (r.lo < x && x < r.hi) iv = r;
  throw DomainError("signature requested at an Alexander root in x-interval " + describe(iv));
}

SignatureProfile signature_profile(const IntMatrix& V) {
  SignatureProfile prof;
  const std::vector<Site> sites = separated_sites(circle_factors(symmetrize_in_x(alexander_from_seifert(V))));
  for (const auto& s : sites) {
    prof.sites.push_back(s.iv);
    prof.site_factors.push_back(s.factor);
  }
  for (const auto& p : gap_samples(sites)) prof.plateaus.push_back(signature_at(V, p));
  for (std::size_t i = 0; i + 1 < prof.plateaus.size(); ++i) prof.jumps.push_back(prof.plateaus[i + 1] - prof.plateaus[i]);
  prof.value_at_minus_one = classical_signature(V);
  return prof;
}

SignatureProfile operator-(SignatureProfile p) {
  for (auto& j : p.jumps) j = -j;
  for (auto& v : p.plateaus) v = -v;
  p.value_at_minus_one = -p.value_at_minus_one;
  return p;
}

SignatureAtlas::SignatureAtlas(const KnotTable& table) {
  std::vector<IntPoly> factors;
  for (const auto& r : table.records())
    for (auto& f : circle_factors(symmetrize_in_x(table.alexander(r.name))))
      if (std::find(factors.begin(), factors.end(), f) == factors.end()) factors.push_back(std::move(f));
  const std::vector<Site> sites = separated_sites(factors);
  for (const auto& s : sites) roots_.push_back(s.iv);
  samples_ = gap_samples(sites);
  for (const auto& r : table.records()) {
    std::vector<int> v;
    v.reserve(samples_.size());
    for (const auto& p : samples_) v.push_back(signature_at(r.seifert, p));
    vectors_.emplace(r.name, std::move(v));
  }
}

const std::vector<int>& SignatureAtlas::vector_of(const std::string& name) const {
  auto it = vectors_.find(name);
  if (it == vectors_.end()) throw UnknownKnot(name, "");
  return it->second;
}

std::vector<Integer> SignatureAtlas::midpoint_vector(const LinearCombination& comb) const {
  std::vector<Integer> out(samples_.size(), Integer(0));
  for (const auto& [name, c] : comb.terms()) {
    const auto& v = vector_of(name);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += c * v[i];
  }
  return out;
}

const SignatureAtlas& atlas_for(const KnotTable& table) {
  // Keyed by contents so that a table rebuilt at a reused address is not confused.
  std::string key = to_string(table.scope());
  for (const auto& r : table.records()) {
    key += "|" + r.name + ":";
    for (Eigen::Index i = 0; i < r.seifert.size(); ++i) key += r.seifert.data()[i].get_str() + ",";
  }
  static std::mutex m;
  static std::map<std::string, std::unique_ptr<SignatureAtlas>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<SignatureAtlas>(table);
  return *slot;
}

std::vector<Integer> midpoint_vector(const LinearCombination& comb, const KnotTable& table) {
  return atlas_for(table).midpoint_vector(comb);
}

std::string signature_csv(const LinearCombination& comb, const KnotTable& table) {
  const SignatureAtlas& atlas = atlas_for(table);
  std::vector<Integer> v = atlas.midpoint_vector(comb);
  std::string out = "x_sample,signature\n";
  char buf[64];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.8f", atlas.samples()[i].x().get_d());
    out += std::string(buf) + "," + v[i].get_str() + "\n";
  }
  return out;
}

}  // namespace conc
