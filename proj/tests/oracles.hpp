#pragma once

// Independent reference computations and random generators shared by the
// unit tests and the acceptance run.

#include <cmath>
#include <set>

#include "conc/covers.hpp"
#include "conc/twisted.hpp"
#include "helpers.hpp"

namespace oracles {

using namespace conc;
using testing_helpers::uniform;

inline GroupElement add(const GroupElement& a, const GroupElement& b, const std::vector<long>& orders) {
  GroupElement c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % orders[i];
  return c;
}

inline std::vector<GroupElement> all_elements(const std::vector<long>& orders) {
  std::vector<GroupElement> out{GroupElement(orders.size(), 0)};
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<GroupElement> next;
    for (const auto& e : out)
      for (long r = 0; r < orders[i]; ++r) {
        GroupElement f = e;
        f[i] = r;
        next.push_back(f);
      }
    out = std::move(next);
  }
  return out;
}

inline Subgroup span(const std::vector<GroupElement>& gens, const std::vector<long>& orders) {
  std::set<GroupElement> h{GroupElement(orders.size(), 0)};
  for (const auto& g : gens) {
    std::set<GroupElement> next = h;
    for (const auto& e : h) {
      GroupElement x = add(e, g, orders);
      while (next.insert(x).second) x = add(x, g, orders);
    }
    h = std::move(next);
  }
  return {h.begin(), h.end()};
}

// Every subgroup of a group of rank <= 2 is generated by two elements; keep
// those generated by mutually isotropic pairs with the right order.
inline std::vector<Subgroup> brute_force_metabolizers(const LinkingForm& form) {
  const auto& orders = form.orders();
  const long n = form.group_order();
  const long root = std::lround(std::sqrt(static_cast<double>(n)));
  if (root * root != n) return {};
  std::vector<GroupElement> iso;
  for (const auto& x : all_elements(orders))
    if (form(x, x) == 0) iso.push_back(x);
  std::set<Subgroup> found;
  for (std::size_t i = 0; i < iso.size(); ++i)
    for (std::size_t j = i; j < iso.size(); ++j) {
      if (form(iso[i], iso[j]) != 0) continue;
      Subgroup h = span({iso[i], iso[j]}, orders);
      if (static_cast<long>(h.size()) == root) found.insert(h);
    }
  return {found.begin(), found.end()};
}

// Symmetric 2x2 presentation with odd |det| <= 1000. Half of the draws are
// conjugated hyperbolic forms, which always have metabolizers.
inline IntMatrix random_presentation() {
  for (;;) {
    IntMatrix a(2, 2);
    if (uniform(0, 1)) {
      const long k = uniform(-6, 6), m = 2 * uniform(0, 15) + 1;
      IntMatrix h(2, 2), p(2, 2);
      h << k, m, m, 0;
      p << 1, uniform(-2, 2), 0, 1;
      if (uniform(0, 1)) p.col(0).swap(p.col(1));
      a = p.transpose() * h * p;
    } else {
      a << uniform(-30, 30), 0, 0, uniform(-30, 30);
      a(0, 1) = a(1, 0) = uniform(-30, 30);
    }
    const Integer det = abs(Integer(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)));
    if (sgn(det) != 0 && det % 2 == 1 && det <= 1000) return a;
  }
}

struct MetabolizerTrial {
  bool agree = false;
  bool nonempty = false;
};

inline MetabolizerTrial metabolizer_trial() {
  const LinkingForm form = LinkingForm::from_presentation(random_presentation());
  const auto want = brute_force_metabolizers(form);
  return {metabolizers(form) == want, !want.empty()};
}

inline Word random_word(int generators, long max_len) {
  Word w;
  for (long i = 0, n = uniform(0, max_len); i < n; ++i) {
    const int g = static_cast<int>(uniform(1, generators));
    w.push_back(uniform(0, 1) ? g : -g);
  }
  return w;
}

inline bool leibniz_holds(const Word& u, const Word& v, int generator) {
  return fox_derivative(concat(u, v), generator) == fox_derivative(u, generator) + u * fox_derivative(v, generator);
}

inline Cyclotomic random_coefficient(int p) {
  std::vector<Rational> c;
  for (int i = 0; i < p - 1; ++i) c.emplace_back(uniform(-2, 2));
  return Cyclotomic(p, c);
}

inline CyclotomicLaurent random_laurent(int p) {
  std::vector<Cyclotomic> c;
  for (long i = 0, n = uniform(1, 3); i < n; ++i) c.push_back(random_coefficient(p));
  if (c.back().is_zero()) c.back() = Cyclotomic(1).in_field(p);
  if (c.front().is_zero()) c.front() = Cyclotomic::zeta(p, uniform(0, p - 1));
  return CyclotomicLaurent::from_coeffs(c, uniform(-2, 2));
}

// f · conj(f)(1/t), optionally times (t - 1) and a root of unity.
inline CyclotomicLaurent random_norm(int p) {
  const CyclotomicLaurent f = random_laurent(p);
  CyclotomicLaurent delta = f * conjugate_reciprocal(f);
  if (uniform(0, 1)) delta = delta * to_cyclotomic(testing_helpers::P("t - 1"), p);
  if (uniform(0, 1)) delta = delta * CyclotomicLaurent::constant(Cyclotomic::zeta(p, uniform(1, p - 1)));
  return delta;
}

inline TwistedPolynomial alexander_over_t_minus_one(const LaurentPoly& delta) {
  return {to_cyclotomic(delta, 0), to_cyclotomic(testing_helpers::P("t - 1"), 0), 0};
}

inline bool abelian_wada_matches(const KnotTable& table, const KnotRecord& r) {
  const GroupPresentation g = wirtinger(r.pd);
  const TwistedPolynomial tp = wada_invariant(g, abelian_representation(g.generators));
  return equal_up_to_units(tp, alexander_over_t_minus_one(alexander_from_seifert(r.seifert))) &&
         table.alexander(r.name) == alexander_from_seifert(r.seifert);
}

}  // namespace oracles
