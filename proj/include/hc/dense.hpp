#pragma once

// Dense matrices over an exact scalar type and the handful of generic routines
// the rest of the library needs: involuted transpose, order-preserving
// products, Gauss-Jordan inversion over a division ring, and hermitian
// congruence diagonalization.
//
// A Scalar must provide +, -, * (not necessarily commutative), unary -,
// == and the free functions involute(), inverse(), is_zero() and
// central_value().

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "hc/errors.hpp"
#include "hc/field.hpp"

namespace Eigen {

template <>
struct NumTraits<hc::FieldElem> : GenericNumTraits<hc::FieldElem> {
  using Real = hc::FieldElem;
  using NonInteger = hc::FieldElem;
  using Nested = hc::FieldElem;
  using Literal = hc::FieldElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace hc {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using MatF = Matrix<FieldElem>;

inline FieldElem involute(const FieldElem& x) { return x; }
inline FieldElem inverse(const FieldElem& x) { return x.inverse(); }
inline bool is_zero(const FieldElem& x) { return x.is_zero(); }
inline FieldElem central_value(const FieldElem& x) { return x; }

/// theta(X)^t
template <typename Derived>
Matrix<typename Derived::Scalar> involuted_transpose(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  return x.unaryExpr([](const Scalar& s) { return involute(s); }).transpose();
}

/// X * Y with every scalar product taken as lhs * rhs. Eigen's blocked GEMM
/// may transpose operands internally, which is only sound for commutative
/// scalars, so products always go through the coefficient-based kernel.
template <typename L, typename R>
Matrix<typename L::Scalar> mul(const Eigen::MatrixBase<L>& x, const Eigen::MatrixBase<R>& y) {
  if (x.cols() != y.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "product of " + std::to_string(x.rows()) + "x" +
                                                  std::to_string(x.cols()) + " by " +
                                                  std::to_string(y.rows()) + "x" +
                                                  std::to_string(y.cols()));
  }
  return x.derived().lazyProduct(y.derived());
}

template <typename Scalar>
bool is_zero_matrix(const Matrix<Scalar>& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!is_zero(x.data()[i])) return false;
  }
  return true;
}

/// Gauss-Jordan inverse using left-multiplying row operations only.
template <typename Scalar>
Matrix<Scalar> mat_inv(const Matrix<Scalar>& x);

template <typename Scalar>
bool is_invertible(const Matrix<Scalar>& x) {
  try {
    (void)mat_inv(x);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    return false;
  }
}

enum class PivotStrategy { first, last };

/// Congruence witness G and diagonal entries with theta(G)^t H G = diag(entries).
/// Nonzero entries come first.
template <typename Scalar>
struct Diagonalization {
  Matrix<Scalar> witness;
  std::vector<FieldElem> entries;

  int rank() const {
    int r = 0;
    for (const auto& e : entries) r += e.is_zero() ? 0 : 1;
    return r;
  }
};

template <typename Scalar>
bool is_hermitian(const Matrix<Scalar>& h);

/// Symmetric pivoting over the involution of Scalar. When only zero diagonal
/// entries remain but some H(i,j) != 0, column i receives column j times
/// x = involute(H(i,j)), creating the pivot 2 Nrd(H(i,j)).
template <typename Scalar>
Diagonalization<Scalar> diagonalize(const Matrix<Scalar>& h,
                                    PivotStrategy strategy = PivotStrategy::first);

extern template Matrix<FieldElem> mat_inv(const Matrix<FieldElem>&);
extern template bool is_hermitian(const Matrix<FieldElem>&);
extern template Diagonalization<FieldElem> diagonalize(const Matrix<FieldElem>&, PivotStrategy);

}  // namespace hc
