#include "conc/twisted.hpp"

#include <algorithm>
#include <numeric>

#include "conc/exact_linear.hpp"
#include "conc/factor.hpp"

namespace conc {

namespace {

using CPoly = Poly<Cyclotomic>;

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

CyclotomicLaurent constant(const Cyclotomic& c) { return CyclotomicLaurent::constant(c); }
CyclotomicLaurent monomial(const Cyclotomic& c, long e) { return CyclotomicLaurent::monomial(c, e); }

LaurentMatrix zero_matrix(Eigen::Index r, Eigen::Index c) {
  LaurentMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = CyclotomicLaurent();
  return m;
}

void add_block(LaurentMatrix& big, Eigen::Index r0, Eigen::Index c0, const LaurentMatrix& block, int sign) {
  for (Eigen::Index i = 0; i < block.rows(); ++i)
    for (Eigen::Index j = 0; j < block.cols(); ++j)
      big(r0 + i, c0 + j) = sign > 0 ? big(r0 + i, c0 + j) + block(i, j) : big(r0 + i, c0 + j) - block(i, j);
}

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

// Positive when the over strand runs d -> b.
int crossing_sign(const PdCrossing& c) {
  const int b = c[1], d = c[3];
  return (b - d == 1 || d - b > 1) ? 1 : -1;
}

CPoly cyclotomic_body(const CyclotomicLaurent& f) { return shift_to_origin(f).body(); }

}  // namespace

Word free_reduce(Word w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return free_reduce(std::move(w));
}

std::vector<int> arc_of_edges(const std::vector<PdCrossing>& pd) {
  const int edges = static_cast<int>(2 * pd.size());
  std::vector<int> parent(static_cast<std::size_t>(edges) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& c : pd) {
    for (int e : c)
      if (e < 1 || e > edges) throw DomainError("PD label " + std::to_string(e) + " out of range");
    parent[static_cast<std::size_t>(find(parent, c[1]))] = find(parent, c[3]);
  }
  std::vector<int> arc(static_cast<std::size_t>(edges) + 1, -1);
  std::map<int, int> ids;
  for (int e = 1; e <= edges; ++e) {
    int root = find(parent, e);
    auto it = ids.try_emplace(root, static_cast<int>(ids.size())).first;
    arc[static_cast<std::size_t>(e)] = it->second;
  }
  return arc;
}

GroupPresentation wirtinger(const std::vector<PdCrossing>& pd, bool deficiency_one) {
  GroupPresentation pres;
  if (pd.empty()) {
    pres.generators = 1;
    return pres;
  }
  std::vector<int> count(2 * pd.size() + 1, 0);
  for (const auto& c : pd)
    for (int e : c)
      if (e >= 1 && e <= static_cast<int>(2 * pd.size())) ++count[static_cast<std::size_t>(e)];
  for (std::size_t e = 1; e < count.size(); ++e)
    if (count[e] != 2) throw DomainError("inconsistent PD code: edge " + std::to_string(e) + " appears " +
                                         std::to_string(count[e]) + " times");
  const auto arc = arc_of_edges(pd);
  pres.generators = *std::max_element(arc.begin(), arc.end()) + 1;
  if (pres.generators != static_cast<int>(pd.size()))
    throw DomainError("inconsistent PD code: " + std::to_string(pres.generators) + " arcs for " +
                      std::to_string(pd.size()) + " crossings");
  for (const auto& c : pd) {
    const int i = arc[static_cast<std::size_t>(c[0])] + 1;
    const int k = arc[static_cast<std::size_t>(c[2])] + 1;
    const int j = arc[static_cast<std::size_t>(c[1])] + 1;
    const int e = crossing_sign(c);
    pres.relators.push_back(free_reduce({-k, e * j, i, -e * j}));
  }
  if (deficiency_one) pres.relators.pop_back();
  return pres;
}

void GroupRingElement::add(const Word& w, const Integer& c) {
  if (sgn(c) == 0) return;
  Word r = free_reduce(w);
  Integer& v = terms_[r];
  v += c;
  if (sgn(v) == 0) terms_.erase(r);
}

LaurentPoly GroupRingElement::abelianize() const {
  LaurentPoly out;
  for (const auto& [w, c] : terms_) {
    long deg = 0;
    for (int l : w) deg += l > 0 ? 1 : -1;
    out += LaurentPoly::monomial(Rational(c), deg);
  }
  return out;
}

GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
  for (const auto& [w, c] : b.terms_) a.add(w, c);
  return a;
}

GroupRingElement operator*(const Word& w, const GroupRingElement& a) {
  GroupRingElement out;
  for (const auto& [u, c] : a.terms_) out.add(concat(w, u), c);
  return out;
}

GroupRingElement fox_derivative(const Word& w, int generator) {
  if (generator < 0) throw DomainError("unknown generator");
  GroupRingElement out;
  Word prefix;
  const int g = generator + 1;
  for (int l : w) {
    if (l == g) out.add(prefix, Integer(1));
    prefix.push_back(l);
    if (l == -g) out.add(prefix, Integer(-1));
  }
  return out;
}

LaurentMatrix laurent_identity(Eigen::Index n) {
  LaurentMatrix m = zero_matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = constant(Cyclotomic(1));
  return m;
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix out = zero_matrix(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

LaurentMatrix Representation::evaluate(const Word& w) const {
  LaurentMatrix acc = laurent_identity(dimension);
  for (int l : w) {
    const auto g = static_cast<std::size_t>(std::abs(l) - 1);
    if (g >= images.size()) throw DomainError("word uses an unknown generator");
    acc = multiply(acc, l > 0 ? images[g] : inverses[g]);
  }
  return acc;
}

Representation abelian_representation(int generators) {
  Representation rho;
  rho.dimension = 1;
  for (int g = 0; g < generators; ++g) {
    LaurentMatrix m(1, 1), inv(1, 1);
    m(0, 0) = monomial(Cyclotomic(1), 1);
    inv(0, 0) = monomial(Cyclotomic(1), -1);
    rho.images.push_back(m);
    rho.inverses.push_back(inv);
  }
  return rho;
}

void check_representation(const GroupPresentation& pres, const Representation& rho) {
  if (static_cast<int>(rho.images.size()) != pres.generators || rho.inverses.size() != rho.images.size())
    throw DomainError("representation does not cover every generator");
  const LaurentMatrix id = laurent_identity(rho.dimension);
  for (std::size_t g = 0; g < rho.images.size(); ++g)
    if (multiply(rho.images[g], rho.inverses[g]) != id) throw DomainError("generator image has a wrong inverse");
  for (std::size_t r = 0; r < pres.relators.size(); ++r)
    if (rho.evaluate(pres.relators[r]) != id)
      throw DomainError("relator " + std::to_string(r + 1) + " does not map to the identity");
}

Representation metabelian_representation(const std::vector<PdCrossing>& pd, int q, long p,
                                         const std::vector<long>& labels) {
  if (q < 2) throw DomainError("cover degree must be at least 2");
  if (p < 2) throw DomainError("character modulus must be at least 2");
  const GroupPresentation full = wirtinger(pd, false);
  const auto n = static_cast<std::size_t>(full.generators);
  std::vector<std::vector<long>> c(n, std::vector<long>(static_cast<std::size_t>(q), 0));
  for (long v : labels)
    if (v < 0 || v >= p) throw DomainError("character value " + std::to_string(v) + " is not in Z_" + std::to_string(p));
  if (q == 2 && labels.size() == n) {
    for (std::size_t i = 0; i < n; ++i) {
      c[i][0] = labels[i];
      c[i][1] = mod(-labels[i], p);
    }
  } else if (labels.size() == n * static_cast<std::size_t>(q)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < static_cast<std::size_t>(q); ++m) c[i][m] = labels[i * static_cast<std::size_t>(q) + m];
  } else {
    throw DomainError("expected " + std::to_string(n) + (q == 2 ? " or " + std::to_string(2 * n) : std::string()) +
                      " character values, got " + std::to_string(labels.size()));
  }
  if (!pd.empty()) {
    const auto arc = arc_of_edges(pd);
    for (std::size_t x = 0; x < pd.size(); ++x) {
      const auto i = static_cast<std::size_t>(arc[static_cast<std::size_t>(pd[x][0])]);
      const auto k = static_cast<std::size_t>(arc[static_cast<std::size_t>(pd[x][2])]);
      const auto j = static_cast<std::size_t>(arc[static_cast<std::size_t>(pd[x][1])]);
      const int e = crossing_sign(pd[x]);
      for (long m = 0; m < q; ++m) {
        const long s = e > 0 ? mod(m + 1, q) : mod(m - 1, q);
        const long want = e > 0 ? c[j][static_cast<std::size_t>(m)] + c[i][static_cast<std::size_t>(s)] - c[j][static_cast<std::size_t>(s)]
                                : c[i][static_cast<std::size_t>(s)] - c[j][static_cast<std::size_t>(s)] + c[j][static_cast<std::size_t>(m)];
        if (mod(want - c[k][static_cast<std::size_t>(m)], p) != 0)
          throw DomainError("character is inconsistent with the knot group at crossing " + std::to_string(x + 1));
      }
    }
  }
  Representation rho;
  rho.dimension = q;
  rho.field_order = static_cast<int>(p);
  const int qi = q;
  for (std::size_t i = 0; i < n; ++i) {
    LaurentMatrix m = zero_matrix(qi, qi), inv = zero_matrix(qi, qi);
    for (int r = 0; r + 1 < qi; ++r) {
      m(r, r + 1) = constant(Cyclotomic::zeta(rho.field_order, c[i][static_cast<std::size_t>(r)]));
      inv(r + 1, r) = constant(Cyclotomic::zeta(rho.field_order, -c[i][static_cast<std::size_t>(r)]));
    }
    m(qi - 1, 0) = monomial(Cyclotomic::zeta(rho.field_order, c[i][static_cast<std::size_t>(qi - 1)]), 1);
    inv(0, qi - 1) = monomial(Cyclotomic::zeta(rho.field_order, -c[i][static_cast<std::size_t>(qi - 1)]), -1);
    rho.images.push_back(std::move(m));
    rho.inverses.push_back(std::move(inv));
  }
  check_representation(full, rho);
  return rho;
}

std::vector<std::vector<long>> fox_colorings(const std::vector<PdCrossing>& pd, long p) {
  const GroupPresentation pres = wirtinger(pd, false);
  const auto n = static_cast<std::size_t>(pres.generators);
  std::vector<std::vector<long>> rows;
  if (!pd.empty()) {
    const auto arc = arc_of_edges(pd);
    for (const auto& x : pd) {
      std::vector<long> row(n, 0);
      const auto i = static_cast<std::size_t>(arc[static_cast<std::size_t>(x[0])]);
      const auto k = static_cast<std::size_t>(arc[static_cast<std::size_t>(x[2])]);
      const auto j = static_cast<std::size_t>(arc[static_cast<std::size_t>(x[1])]);
      row[i] += 1;
      row[k] += 1;
      row[j] -= 2;
      for (auto& v : row) v = mod(v, p);
      rows.push_back(row);
    }
  }
  // c_0 = 0 normalizes away the constant colorings.
  std::vector<long> zero0(n, 0);
  zero0[0] = 1;
  rows.push_back(zero0);
  // Row reduction over F_p.
  auto inv = [p](long a) {
    long r = 1;
    for (long e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][col] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    const long f = inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = v * f % p;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == rank || rows[o][col] == 0) continue;
      const long g = rows[o][col];
      for (std::size_t k = 0; k < n; ++k) rows[o][k] = mod(rows[o][k] - g * rows[rank][k], p);
    }
    pivots.push_back(col);
    ++rank;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t col = 0; col < n; ++col)
    if (std::find(pivots.begin(), pivots.end(), col) == pivots.end()) free_cols.push_back(col);
  std::vector<std::vector<long>> out;
  long total = 1;
  for (std::size_t f = 0; f < free_cols.size(); ++f) total *= p;
  for (long code = 1; code < total; ++code) {
    std::vector<long> c(n, 0);
    long rest = code;
    for (std::size_t f : free_cols) {
      c[f] = rest % p;
      rest /= p;
    }
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      long v = 0;
      for (std::size_t f : free_cols) v += rows[r][f] * c[f];
      c[pivots[r]] = mod(-v, p);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CyclotomicLaurent laurent_determinant(const LaurentMatrix& M) {
  const auto n = static_cast<std::size_t>(M.rows());
  if (n == 0) return constant(Cyclotomic(1));
  long shift = 0;
  std::vector<std::vector<CPoly>> P(n, std::vector<CPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    long low = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (e.is_zero()) continue;
      low = any ? std::min(low, e.low()) : e.low();
      any = true;
    }
    if (!any) return CyclotomicLaurent();
    shift += low;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (!e.is_zero()) P[i][j] = e.body().shifted(static_cast<std::size_t>(e.low() - low));
    }
  }
  return CyclotomicLaurent(polynomial_determinant(P), shift);
}

TwistedPolynomial wada_invariant(const GroupPresentation& pres, const Representation& rho, std::optional<int> column) {
  const int n = pres.generators;
  const int d = rho.dimension;
  if (static_cast<int>(rho.images.size()) != n) throw DomainError("representation does not cover every generator");
  const LaurentMatrix id = laurent_identity(d);
  for (std::size_t r = 0; r < pres.relators.size(); ++r)
    if (rho.evaluate(pres.relators[r]) != id)
      throw DomainError("relator " + std::to_string(r + 1) + " does not map to the identity");
  if (static_cast<int>(pres.relators.size()) != n - 1)
    throw DomainError("presentation must have deficiency one");

  auto denominator = [&](int j) {
    LaurentMatrix m = rho.images[static_cast<std::size_t>(j)];
    for (int i = 0; i < d; ++i) m(i, i) -= constant(Cyclotomic(1));
    return laurent_determinant(m);
  };
  int j = -1;
  CyclotomicLaurent den;
  if (column) {
    if (*column < 0 || *column >= n) throw DomainError("deleted column out of range");
    j = *column;
    den = denominator(j);
    if (den.is_zero()) throw DomainError("det(rho(x_j) - I) vanishes for the requested column");
  } else {
    for (int g = 0; g < n && j < 0; ++g) {
      den = denominator(g);
      if (!den.is_zero()) j = g;
    }
    if (j < 0) throw DomainError("det(rho(x_j) - I) vanishes for every generator");
  }

  // Fox matrix with column block j removed, built from prefix products.
  const Eigen::Index size = static_cast<Eigen::Index>(n - 1) * d;
  LaurentMatrix F = zero_matrix(size, size);
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    LaurentMatrix prefix = id;
    for (int l : pres.relators[r]) {
      const int g = std::abs(l) - 1;
      const auto gi = static_cast<std::size_t>(g);
      const Eigen::Index col = g < j ? g * d : (g - 1) * d;
      const Eigen::Index row = static_cast<Eigen::Index>(r) * d;
      if (l > 0) {
        if (g != j) add_block(F, row, col, prefix, +1);
        prefix = multiply(prefix, rho.images[gi]);
      } else {
        prefix = multiply(prefix, rho.inverses[gi]);
        if (g != j) add_block(F, row, col, prefix, -1);
      }
    }
  }
  CyclotomicLaurent num = laurent_determinant(F);

  TwistedPolynomial out;
  out.deleted_column = j;
  if (num.is_zero()) {
    out.numerator = num;
    out.denominator = constant(Cyclotomic(1));
    return out;
  }
  CPoly a = cyclotomic_body(num), b = cyclotomic_body(den);
  CPoly g = gcd(a, b);
  out.numerator = CyclotomicLaurent(exact_div(a, g), num.low());
  out.denominator = CyclotomicLaurent(exact_div(b, g), den.low());
  // Representative modulo units of Q(ζ)[t, 1/t]: both parts start at t^0 with
  // constant term 1.
  out.numerator = out.numerator.trailing().inverse() * shift_to_origin(out.numerator);
  out.denominator = out.denominator.trailing().inverse() * shift_to_origin(out.denominator);
  return out;
}

bool equal_up_to_cyclotomic_units(const CyclotomicLaurent& a, const CyclotomicLaurent& b) {
  return conc::equal_up_to_units(a, b);
}

bool equal_up_to_units(const TwistedPolynomial& a, const TwistedPolynomial& b) {
  return equal_up_to_cyclotomic_units(a.numerator * b.denominator, b.numerator * a.denominator);
}

TwistedFoxMilnorResult twisted_fox_milnor_necessary(const CyclotomicLaurent& delta, int field_order) {
  if (delta.is_zero()) throw DomainError("twisted Fox–Milnor test needs a nonzero polynomial");
  TwistedFoxMilnorResult out;
  // Powers of (t - 1) come from the deleted generator and are factored off first.
  const CPoly t_minus_one(std::vector<Cyclotomic>{Cyclotomic(-1), Cyclotomic(1)});
  CPoly body = cyclotomic_body(delta);
  for (;;) {
    auto [q, r] = divmod(body, t_minus_one);
    if (!r.is_zero()) break;
    body = std::move(q);
  }
  const CyclotomicLaurent reduced(body);
  if (reduced.span() % 2 != 0) {
    out.verdict = TwistedVerdict::fail;
    out.reason = "odd span " + std::to_string(reduced.span()) + " after removing (t - 1) factors";
    return out;
  }
  LaurentPoly norm = field_norm(reduced, field_order);
  FoxMilnorResult fm = reciprocal_pairing(norm);
  if (!fm.pass) {
    out.verdict = TwistedVerdict::fail;
    out.reason = "field norm is not of the form c t^k g(t) g(1/t)";
    for (const auto& f : fm.obstruction)
      out.reason += "; unpaired factor (" + to_string(LaurentPoly(to_rational(f.poly))) + ")^" + std::to_string(f.multiplicity);
    return out;
  }
  out.reason = "norm pairs with its reciprocal";
  return out;
}

std::string to_string(const TwistedPolynomial& tp) {
  std::string num = to_string(tp.numerator);
  const auto& den = tp.denominator;
  if (den.is_monomial() && den.leading() == Cyclotomic(1) && den.low() == 0) return num;
  return "(" + num + ") / (" + to_string(den) + ")";
}

}  // namespace conc
