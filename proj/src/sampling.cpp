#include "hc/sampling.hpp"

namespace hc {

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Rational Sampler::rational(int range) {
  Rational r(integer(-range, range), coin(0.75) ? 1 : integer(1, 3));
  r.canonicalize();
  return r;
}

FieldElem Sampler::field_elem(const FieldDesc& F, int range) {
  if (F.kind() == FieldKind::rationals || coin(0.4)) return FieldElem(rational(range));
  return FieldElem(rational(range), rational(range), F.radicand());
}

FieldElem Sampler::nonzero(const FieldDesc& F, int range) {
  for (;;) {
    FieldElem x = field_elem(F, range);
    if (!x.is_zero()) return x;
  }
}

FieldElem Sampler::positive_at(const FieldDesc& F, OrderingId P, int range) {
  FieldElem x = nonzero(F, range);
  return sign_at(x, P) > 0 ? x : -x;
}

DElem Sampler::delem(const DivisionAlgebra& D, int range) {
  std::vector<FieldElem> c(static_cast<size_t>(D.dim()));
  for (auto& v : c) v = coin(0.3) ? FieldElem(0) : field_elem(D.base(), range);
  return D.elem(std::move(c));
}

MatD Sampler::matrix(const DivisionAlgebra& D, int rows, int cols, int range) {
  MatD x(rows, cols);
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = coin(0.2) ? D.scalar(FieldElem(0)) : delem(D, range);
  return x;
}

MatD Sampler::invertible(const DivisionAlgebra& D, int n) {
  for (;;) {
    MatD x = matrix(D, n, n);
    if (is_invertible(x)) return x;
  }
}

MatD Sampler::singular(const DivisionAlgebra& D, int n) {
  MatD x = matrix(D, n, n);
  if (n == 0) return x;
  const int dead = integer(0, n - 1);
  const int src = integer(0, n - 1);
  const DElem c = delem(D);
  for (int r = 0; r < n; ++r) x(r, dead) = src == dead ? D.scalar(FieldElem(0)) : x(r, src) * c;
  return x;
}

MatD Sampler::hermitian(const DivisionAlgebra& D, int n) {
  if (coin(0.25) && n > 0) {
    // theta(Y)^t diag(e) Y with some e_i = 0
    MatD e = MatD::Zero(n, n);
    for (int i = 0; i < n; ++i) e(i, i) = coin(0.4) ? DElem(0) : DElem(nonzero(D.base()));
    const MatD y = matrix(D, n, n);
    return mul(mul(theta_t(y), e), y);
  }
  const MatD x = matrix(D, n, n);
  return x + theta_t(x);
}

MatD Sampler::symmetric(const AlgebraWithInvolution& A) {
  return mul(A.phi(), hermitian(A.division(), A.ell()));
}

MatD Sampler::symmetric_invertible(const AlgebraWithInvolution& A) {
  for (;;) {
    MatD x = symmetric(A);
    if (is_invertible(x)) return x;
  }
}

MatD Sampler::symmetric_singular(const AlgebraWithInvolution& A) {
  const int ell = A.ell();
  if (ell == 1) return A.zero();
  for (;;) {
    MatD e = MatD::Zero(ell, ell);
    for (int i = 0; i + 1 < ell; ++i) e(i, i) = DElem(nonzero(A.field()));
    const MatD y = invertible(A.division(), ell);
    MatD x = mul(A.phi(), MatD(mul(mul(theta_t(y), e), y)));
    if (!is_zero_matrix(x)) return x;
  }
}

HermitianForm Sampler::form(const AlgebraWithInvolution& A, int rank) {
  return form_from_flat(A, hermitian(A.division(), rank * A.ell()));
}

HermitianForm Sampler::nonsingular_form(const AlgebraWithInvolution& A, int rank) {
  for (;;) {
    const MatD x = matrix(A.division(), rank * A.ell(), rank * A.ell());
    HermitianForm h = form_from_flat(A, x + theta_t(x));
    const auto dz = diagonalize(h);
    if (dz.rank() == static_cast<int>(dz.entries.size())) return h;
  }
}

QuadraticFormF Sampler::quadratic_form(const FieldDesc& F, int n) {
  QuadraticFormF q;
  for (int i = 0; i < n; ++i) q.entries.push_back(nonzero(F));
  return q;
}

HermitianForm form_from_flat(const AlgebraWithInvolution& A, const MatD& H) {
  const int ell = A.ell();
  MatD gram(H.rows(), H.cols());
  for (Eigen::Index i = 0; i < H.rows() / ell; ++i) {
    gram.middleRows(i * ell, ell) = mul(A.phi(), MatD(H.middleRows(i * ell, ell)));
  }
  return HermitianForm(A, std::move(gram));
}

}  // namespace hc
