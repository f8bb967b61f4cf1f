#pragma once

// Template definitions for dense.hpp. Only dense.cpp includes this; the
// library instantiates the routines for FieldElem and DElem.

#include "hc/dense.hpp"

namespace hc {

template <typename Scalar>
Matrix<Scalar> mat_inv(const Matrix<Scalar>& x) {
  if (x.rows() != x.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const Eigen::Index n = x.rows();
  Matrix<Scalar> a = x;
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    while (pivot < n && is_zero(a(pivot, c))) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "matrix is not invertible");
    if (pivot != c) {
      a.row(c).swap(a.row(pivot));
      inv.row(c).swap(inv.row(pivot));
    }
    const Scalar p = inverse(a(c, c));
    for (Eigen::Index j = 0; j < n; ++j) {
      a(c, j) = p * a(c, j);
      inv(c, j) = p * inv(c, j);
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || is_zero(a(r, c))) continue;
      const Scalar f = a(r, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <typename Scalar>
bool is_hermitian(const Matrix<Scalar>& h) {
  if (h.rows() != h.cols()) return false;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = i; j < h.cols(); ++j) {
      if (h(j, i) != involute(h(i, j))) return false;
    }
  }
  return true;
}

namespace detail {

// Congruence by E = I + e_src c e_dst^t: column dst += column src * c, then
// row dst += involute(c) * row src. The witness picks up the column step.
template <typename Scalar>
void add_congruent_multiple(Matrix<Scalar>& w, Matrix<Scalar>& g, Eigen::Index src, Eigen::Index dst,
                            const Scalar& c) {
  const Eigen::Index n = w.rows();
  for (Eigen::Index r = 0; r < n; ++r) w(r, dst) += w(r, src) * c;
  const Scalar cbar = involute(c);
  for (Eigen::Index r = 0; r < n; ++r) w(dst, r) += cbar * w(src, r);
  for (Eigen::Index r = 0; r < g.rows(); ++r) g(r, dst) += g(r, src) * c;
}

template <typename Scalar>
void swap_congruent(Matrix<Scalar>& w, Matrix<Scalar>& g, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  w.row(i).swap(w.row(j));
  w.col(i).swap(w.col(j));
  g.col(i).swap(g.col(j));
}

}  // namespace detail

template <typename Scalar>
Diagonalization<Scalar> diagonalize(const Matrix<Scalar>& h, PivotStrategy strategy) {
  if (!is_hermitian(h)) throw Error(ErrorCode::NotHermitian, "matrix is not theta^t-hermitian");
  const Eigen::Index n = h.rows();
  Matrix<Scalar> w = h;
  Matrix<Scalar> g = Matrix<Scalar>::Identity(n, n);
  const bool first = strategy == PivotStrategy::first;

  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index t = 0; t < n - k; ++t) {
      const Eigen::Index i = first ? k + t : n - 1 - t;
      if (!is_zero(w(i, i))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      Eigen::Index pi = -1;
      Eigen::Index pj = -1;
      for (Eigen::Index t = 0; t < n - k && pi < 0; ++t) {
        const Eigen::Index i = first ? k + t : n - 1 - t;
        for (Eigen::Index j = k; j < n; ++j) {
          if (j != i && !is_zero(w(i, j))) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi < 0) break;  // remaining block is zero
      detail::add_congruent_multiple(w, g, pj, pi, involute(w(pi, pj)));
      pivot = pi;
    }
    detail::swap_congruent(w, g, k, pivot);

    const Scalar a_inv = inverse(w(k, k));
    for (Eigen::Index j = k + 1; j < n; ++j) {
      if (is_zero(w(k, j))) continue;
      detail::add_congruent_multiple(w, g, k, j, Scalar(-(a_inv * w(k, j))));
    }
  }

  Diagonalization<Scalar> out;
  out.witness = std::move(g);
  out.entries.reserve(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.entries.push_back(central_value(w(i, i)));
  return out;
}

}  // namespace hc
