#include "conc/exact_linear.hpp"

#include <algorithm>

namespace conc {

namespace {

void row_axpy(IntMatrix& A, Eigen::Index dst, Eigen::Index src, const Integer& q) {
  for (Eigen::Index k = 0; k < A.cols(); ++k) A(dst, k) -= q * A(src, k);
}

void col_axpy(IntMatrix& A, Eigen::Index dst, Eigen::Index src, const Integer& q) {
  for (Eigen::Index k = 0; k < A.rows(); ++k) A(k, dst) -= q * A(k, src);
}

}  // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& M) {
  const Eigen::Index m = M.rows(), n = M.cols();
  SmithDecomposition s{identity<Integer>(m), M, identity<Integer>(n)};
  IntMatrix& D = s.D;
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (sgn(D(i, j)) != 0 && (pr < 0 || abs(D(i, j)) < abs(D(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) return s;
      if (pr != t) {
        D.row(pr).swap(D.row(t));
        s.U.row(pr).swap(s.U.row(t));
      }
      if (pc != t) {
        D.col(pc).swap(D.col(t));
        s.W.col(pc).swap(s.W.col(t));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (sgn(D(i, t)) == 0) continue;
        Integer q = D(i, t) / D(t, t);
        row_axpy(D, i, t, q);
        row_axpy(s.U, i, t, q);
        if (sgn(D(i, t)) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (sgn(D(t, j)) == 0) continue;
        Integer q = D(t, j) / D(t, t);
        col_axpy(D, j, t, q);
        col_axpy(s.W, j, t, q);
        if (sgn(D(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (sgn(D(i, j) % D(t, t)) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(D, t, bad, Integer(-1));
      row_axpy(s.U, t, bad, Integer(-1));
    }
    if (sgn(D(t, t)) < 0) {
      D.row(t) = -D.row(t);
      s.U.row(t) = -s.U.row(t);
    }
  }
  return s;
}

Integer determinant(const IntMatrix& M) {
  const Eigen::Index n = M.rows();
  if (n != M.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return Integer(1);
  IntMatrix A = M;
  Integer prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (sgn(A(k, k)) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && sgn(A(r, k)) == 0) ++r;
      if (r == n) return Integer(0);
      A.row(r).swap(A.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        A(i, j) = v;
      }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& M) {
  const Eigen::Index n = M.rows();
  if (n != M.cols()) throw DomainError("inverse of a non-square matrix");
  RatMatrix A = cast_matrix<Rational>(M);
  RatMatrix B = identity<Rational>(n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && sgn(A(piv, c)) == 0) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    A.row(piv).swap(A.row(c));
    B.row(piv).swap(B.row(c));
    const Rational inv = 1 / A(c, c);
    for (Eigen::Index k = 0; k < n; ++k) {
      A(c, k) *= inv;
      B(c, k) *= inv;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || sgn(A(r, c)) == 0) continue;
      const Rational f = A(r, c);
      for (Eigen::Index k = 0; k < n; ++k) {
        A(r, k) -= f * A(c, k);
        B(r, k) -= f * B(c, k);
      }
    }
  }
  IntMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (B(i, j).get_den() != 1) throw DomainError("matrix is not unimodular");
      out(i, j) = B(i, j).get_num();
    }
  return out;
}

SignatureNullity hermitian_signature(const GaussianMatrix& H) {
  const Eigen::Index n = H.rows();
  if (n != H.cols()) throw DomainError("signature of a non-square matrix");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (H(i, j) != H(j, i).conj()) throw DomainError("matrix is not Hermitian");
  Poly<GaussianRational> cp = characteristic_polynomial<GaussianRational>(H);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < cp.size(); ++i) {
    if (sgn(cp[i].im) != 0) throw DomainError("characteristic polynomial is not real");
    c.push_back(cp[i].re);
  }
  SignatureNullity out;
  std::size_t z = 0;
  while (z < c.size() && sgn(c[z]) == 0) ++z;
  out.nullity = static_cast<int>(z);
  // Real-rooted, so Descartes' bound is exact.
  int changes = 0, last = 0;
  for (std::size_t i = z; i < c.size(); ++i) {
    int s = sgn(c[i]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  const int positive = changes;
  const int negative = static_cast<int>(n) - out.nullity - positive;
  out.signature = positive - negative;
  return out;
}

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    RatPoly r = chain[chain.size() - 2] % chain.back();
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// A point near the middle of (a, b) where p does not vanish.
Rational split_point(const RatPoly& p, const Rational& a, const Rational& b) {
  Rational mid = (a + b) / 2;
  for (long k = 3; sgn(p(mid)) == 0; k = 2 * k + 1) mid = a + (b - a) * Rational(k / 2 + 1, k + 2);
  return mid;
}

}  // namespace

int sturm_count(const RatPoly& p, const Rational& a, const Rational& b) {
  RatPoly q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  auto chain = sturm_chain(q);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<RootInterval> sturm_isolate(const RatPoly& p, const Rational& lo, const Rational& hi) {
  RatPoly q = squarefree_part(p);
  std::vector<RootInterval> out;
  if (q.degree() <= 0) return out;
  for (const Rational& e : {lo, hi})
    if (sgn(q(e)) == 0) q = exact_div(q, RatPoly{-e, Rational(1)});
  if (q.degree() <= 0) return out;
  auto chain = sturm_chain(q);
  std::vector<std::pair<RootInterval, int>> work{{{lo, hi}, sign_variations(chain, lo) - sign_variations(chain, hi)}};
  while (!work.empty()) {
    auto [iv, count] = work.back();
    work.pop_back();
    if (count == 0) continue;
    if (count == 1) {
      out.push_back(iv);
      continue;
    }
    Rational mid = split_point(q, iv.lo, iv.hi);
    int left = sign_variations(chain, iv.lo) - sign_variations(chain, mid);
    work.push_back({{mid, iv.hi}, count - left});
    work.push_back({{iv.lo, mid}, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

RootInterval refine(const RatPoly& p, RootInterval iv, const Rational& width) {
  const int s_lo = sgn(p(iv.lo));
  while (iv.hi - iv.lo > width) {
    Rational mid = split_point(p, iv.lo, iv.hi);
    if (sgn(p(mid)) == s_lo) iv.lo = mid;
    else iv.hi = mid;
  }
  return iv;
}

Rational resultant(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  const long m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return Rational(1);
  const Eigen::Index size = m + n;
  RatMatrix S = zeros<Rational>(size, size);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) S(i, i + j) = a[static_cast<std::size_t>(m - j)];
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) S(n + i, i + j) = b[static_cast<std::size_t>(n - j)];
  return field_determinant<Rational>(S);
}

}  // namespace conc
