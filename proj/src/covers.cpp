#include "conc/covers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "conc/exact_linear.hpp"

namespace conc {

namespace {

Rational frac(const Rational& v) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return v - Rational(q);
}

// Mixed-radix encoding of group elements.
struct Indexer {
  std::vector<long> orders;
  long size = 1;

  explicit Indexer(std::vector<long> o) : orders(std::move(o)) {
    for (long d : orders) size *= d;
  }
  long encode(const GroupElement& x) const {
    long idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + x[i];
    return idx;
  }
  GroupElement decode(long idx) const {
    GroupElement x(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      x[i] = idx % orders[i];
      idx /= orders[i];
    }
    return x;
  }
  GroupElement add(const GroupElement& a, const GroupElement& b) const {
    GroupElement c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % orders[i];
    return c;
  }
};

std::vector<long> span_indices(const std::vector<GroupElement>& gens, const Indexer& ix) {
  std::vector<char> in(static_cast<std::size_t>(ix.size), 0);
  std::vector<GroupElement> elems{GroupElement(ix.orders.size(), 0)};
  in[0] = 1;
  for (const auto& g : gens) {
    if (in[static_cast<std::size_t>(ix.encode(g))]) continue;
    std::vector<GroupElement> next;
    for (const auto& s : elems) {
      GroupElement cur = s;
      do {
        next.push_back(cur);
        cur = ix.add(cur, g);
      } while (cur != s);
    }
    elems.clear();
    std::fill(in.begin(), in.end(), 0);
    for (auto& e : next) {
      auto k = static_cast<std::size_t>(ix.encode(e));
      if (!in[k]) {
        in[k] = 1;
        elems.push_back(std::move(e));
      }
    }
  }
  std::vector<long> out;
  for (const auto& e : elems) out.push_back(ix.encode(e));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Integer homology_order(const LaurentPoly& delta, int q) {
  if (q < 2) throw DomainError("branching index must be at least 2");
  RatPoly f = shift_to_origin(delta).body();
  RatPoly g(std::vector<Rational>(static_cast<std::size_t>(q), Rational(1)));
  Rational r = abs(resultant(f, g));
  if (r.get_den() != 1) throw DomainError("non-integral cover order");
  return r.get_num();
}

Integer homology_order(const KnotTable& table, const std::string& knot, int q) {
  return homology_order(table.alexander(knot), q);
}

CoverHomology two_fold_structure(const KnotRecord& knot) {
  CoverHomology h;
  h.knot = knot.name;
  h.q = 2;
  SmithDecomposition s = smith_normal_form(IntMatrix(knot.seifert + knot.seifert.transpose()));
  for (const auto& d : s.invariant_factors()) {
    if (sgn(d) == 0) throw DomainError("V + V^T is singular for " + knot.name);
    if (d != 1) h.invariant_factors.push_back(d);
    h.order *= d;
  }
  return h;
}

LinkingForm::LinkingForm(std::vector<long> orders, RatMatrix values) : orders_(std::move(orders)), L_(std::move(values)) {
  const auto r = static_cast<Eigen::Index>(orders_.size());
  if (L_.rows() != r || L_.cols() != r) throw DomainError("linking form size does not match the group");
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) L_(i, j) = frac(L_(i, j));
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) {
      if (L_(i, j) != L_(j, i)) throw DomainError("linking form is not symmetric");
      if (frac(orders_[static_cast<std::size_t>(i)] * L_(i, j)) != 0) throw DomainError("linking form is not well defined");
    }
}

LinkingForm LinkingForm::from_presentation(const IntMatrix& A) {
  SmithDecomposition s = smith_normal_form(A);
  IntMatrix UinvT = unimodular_inverse(s.U).transpose();
  RatMatrix full = cast_matrix<Rational>(IntMatrix(UinvT * s.W));
  std::vector<Eigen::Index> keep;
  std::vector<long> orders;
  for (Eigen::Index i = 0; i < s.D.rows(); ++i) {
    const Integer& d = s.D(i, i);
    if (sgn(d) == 0) throw DomainError("presentation matrix is singular");
    if (d != 1) {
      keep.push_back(i);
      orders.push_back(d.get_si());
    }
  }
  const auto r = static_cast<Eigen::Index>(keep.size());
  RatMatrix L(r, r);
  for (Eigen::Index a = 0; a < r; ++a)
    for (Eigen::Index b = 0; b < r; ++b) L(a, b) = full(keep[a], keep[b]) / Rational(s.D(keep[b], keep[b]));
  return LinkingForm(std::move(orders), std::move(L));
}

LinkingForm two_fold_linking_form(const KnotRecord& knot) {
  return LinkingForm::from_presentation(IntMatrix(knot.seifert + knot.seifert.transpose()));
}

long LinkingForm::group_order() const {
  long n = 1;
  for (long d : orders_) n *= d;
  return n;
}

Rational LinkingForm::operator()(const GroupElement& x, const GroupElement& y) const {
  Rational acc(0);
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < orders_.size(); ++j)
      if (y[j] != 0) acc += x[i] * y[j] * L_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return frac(acc);
}

bool LinkingForm::is_nondegenerate() const {
  Indexer ix(orders_);
  for (long a = 1; a < ix.size; ++a) {
    GroupElement x = ix.decode(a);
    bool zero = true;
    for (std::size_t i = 0; i < orders_.size() && zero; ++i) {
      GroupElement e(orders_.size(), 0);
      e[i] = 1;
      if ((*this)(x, e) != 0) zero = false;
    }
    if (zero) return false;
  }
  return true;
}

long element_order(const GroupElement& x, const std::vector<long>& orders) {
  long o = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    long k = orders[i] / std::gcd(x[i], orders[i]);
    o = std::lcm(o, k);
  }
  return o;
}

std::vector<Subgroup> metabolizers(const LinkingForm& form, const std::optional<IntMatrix>& action, long max_order) {
  const Indexer ix(form.orders());
  if (ix.size > max_order) throw DomainError("group order exceeds the metabolizer search bound");
  if (ix.size % 2 == 0) throw DomainError("metabolizer search needs a group of odd order");
  long m = std::lround(std::sqrt(static_cast<double>(ix.size)));
  while (m * m > ix.size) --m;
  while ((m + 1) * (m + 1) <= ix.size) ++m;
  if (m * m != ix.size) return {};

  auto apply = [&](const GroupElement& x) {
    const IntMatrix& M = *action;
    GroupElement y(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      Integer acc(0);
      for (std::size_t j = 0; j < x.size(); ++j) acc += M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * x[j];
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(ix.orders[i]));
      y[i] = r.get_si();
    }
    return y;
  };

  std::vector<GroupElement> candidates;
  for (long a = 1; a < ix.size; ++a) {
    GroupElement g = ix.decode(a);
    if (m % element_order(g, ix.orders) == 0 && form(g, g) == 0) candidates.push_back(std::move(g));
  }

  struct Node {
    std::vector<GroupElement> gens;
    std::vector<long> elements;
  };
  std::set<std::vector<long>> seen;
  std::vector<Node> frontier{{{}, {0}}};
  std::set<std::vector<long>> found;
  if (m == 1) found.insert({0});
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (const auto& g : candidates) {
        if (std::binary_search(node.elements.begin(), node.elements.end(), ix.encode(g))) continue;
        bool iso = true;
        for (const auto& h : node.gens)
          if (form(g, h) != 0) {
            iso = false;
            break;
          }
        if (!iso) continue;
        std::vector<GroupElement> gens = node.gens;
        gens.push_back(g);
        std::vector<long> elems = span_indices(gens, ix);
        const auto size = static_cast<long>(elems.size());
        if (m % size != 0 || !seen.insert(elems).second) continue;
        if (size == m) {
          bool invariant = true;
          if (action)
            for (const auto& h : gens)
              if (!std::binary_search(elems.begin(), elems.end(), ix.encode(apply(h)))) {
                invariant = false;
                break;
              }
          if (invariant) found.insert(elems);
          continue;
        }
        next.push_back({std::move(gens), std::move(elems)});
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& idxs : found) {
    Subgroup H;
    for (long k : idxs) H.push_back(ix.decode(k));
    out.push_back(std::move(H));
  }
  return out;
}

std::vector<GroupElement> generators_of(const Subgroup& H, const std::vector<long>& orders) {
  const Indexer ix(orders);
  std::vector<GroupElement> gens;
  std::vector<long> span{0};
  std::vector<GroupElement> sorted = H;
  std::sort(sorted.begin(), sorted.end(), [&](const GroupElement& a, const GroupElement& b) {
    long oa = element_order(a, orders), ob = element_order(b, orders);
    return oa != ob ? oa > ob : ix.encode(a) < ix.encode(b);
  });
  for (const auto& h : sorted) {
    if (std::binary_search(span.begin(), span.end(), ix.encode(h))) continue;
    gens.push_back(h);
    span = span_indices(gens, ix);
  }
  return gens;
}

std::vector<CharacterSpec> characters_from_metabolizer(const Subgroup& H, const LinkingForm& form, long p) {
  if (!is_prime(p)) throw DomainError("character modulus must be prime");
  if (H.size() <= 1) return {};
  if (static_cast<long>(H.size()) % p != 0)
    throw DomainError(std::to_string(p) + " does not divide the subgroup order");
  std::vector<CharacterSpec> out;
  std::set<std::vector<long>> seen;
  const auto gens = generators_of(H, form.orders());
  for (const auto& h : H) {
    if (element_order(h, form.orders()) != p) continue;
    std::vector<long> values;
    for (std::size_t i = 0; i < form.rank(); ++i) {
      GroupElement e(form.rank(), 0);
      e[i] = 1;
      Rational v = p * form(h, e);
      values.push_back(v.get_num().get_si() % p);
    }
    auto lead = std::find_if(values.begin(), values.end(), [](long v) { return v != 0; });
    if (lead == values.end()) continue;
    // Representative of {χ, -χ}: leading value in [1, p/2].
    if (2 * *lead > p)
      for (auto& v : values) v = (p - v) % p;
    if (!seen.insert(values).second) continue;
    out.push_back({2, p, gens, h, values});
  }
  return out;
}

}  // namespace conc
