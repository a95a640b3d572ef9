#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace conc {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Integer>;
using RatMatrix = MatrixX<Rational>;
using IntVector = VectorX<Integer>;

// Exact scalars: the only numeric tolerance in this library is zero.
inline bool is_zero(const Integer& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_one(const Integer& v) { return v == 1; }
inline bool is_one(const Rational& v) { return v == 1; }

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

template <typename Scalar>
MatrixX<Scalar> zeros(Eigen::Index rows, Eigen::Index cols) {
  MatrixX<Scalar> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Scalar(0);
  return m;
}

template <typename Scalar>
MatrixX<Scalar> identity(Eigen::Index n) {
  MatrixX<Scalar> m = zeros<Scalar>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

template <typename To, typename From>
MatrixX<To> cast_matrix(const MatrixX<From>& m) {
  MatrixX<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

}  // namespace conc

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 80
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
