#include "hc/signature.hpp"

#include <cstdlib>

#include "hc/morita.hpp"

namespace hc {

namespace {

void require_symmetric_invertible(const AlgebraWithInvolution& A, const MatD& a) {
  A.require_element(a);
  if (!A.is_symmetric(a)) throw Error(ErrorCode::NotSymmetric, "element is not sigma-symmetric");
  if (!is_invertible(a)) throw Error(ErrorCode::Singular, "element is not invertible");
}

HermitianForm rank_one(const AlgebraWithInvolution& A, const MatD& a) { return diag_sigma(A, {a}); }

FieldElem reduced_trace(const DivisionAlgebra& D, const MatD& y) {
  FieldElem t;
  for (Eigen::Index i = 0; i < y.rows(); ++i) t += y(i, i).coord(0);
  return D.kind() == DivisionKind::quat ? t * FieldElem(2) : t;
}

}  // namespace

int sign_eta(const HermitianForm& h, OrderingId P, PivotStrategy strategy) {
  const auto& A = h.algebra();
  check_ordering(A.field(), P);
  if (classify(A, P).nil) return 0;
  int s = 0;
  for (const auto& e : diagonalize(h, strategy).entries) s += sign_at(e, P);
  return s;
}

MaximalSignature m_P(const AlgebraWithInvolution& A, OrderingId P) {
  require_non_nil(A, P);
  const auto dz = diagonalize(A.phi());
  const auto ell = static_cast<Eigen::Index>(A.ell());
  MatD d = MatD::Zero(ell, ell);
  for (Eigen::Index i = 0; i < ell; ++i) {
    const FieldElem& phi_i = dz.entries[static_cast<size_t>(i)];
    d(i, i) = DElem(phi_i * FieldElem(sign_at(phi_i, P)));
  }
  const MatD g_inv = mat_inv(dz.witness);
  const MatD n = mul(mul(theta_t(g_inv), d), g_inv);
  MatD c = mul(A.phi(), n);
  const int value = classify(A, P).n_P;
  if (sign_eta(rank_one(A, c), P) != value) {
    throw Error(ErrorCode::InternalInvariantViolation, "m_P witness does not reach n_P");
  }
  return {value, std::move(c)};
}

bool in_M_P(const AlgebraWithInvolution& A, const MatD& a, OrderingId P) {
  require_non_nil(A, P);
  A.require_element(a);
  if (is_zero_matrix(a)) return true;
  require_symmetric_invertible(A, a);
  return sign_eta(rank_one(A, a), P) == classify(A, P).n_P;
}

bool eta_maximal(const AlgebraWithInvolution& A, const MatD& u, OrderingId P) {
  require_non_nil(A, P);
  A.require_element(u);
  if (!A.is_symmetric(u)) throw Error(ErrorCode::NotSymmetric, "element is not sigma-symmetric");
  for (const auto& e : diagonalize(rank_one(A, u)).entries) {
    if (!e.is_zero() && sign_at(e, P) <= 0) return false;
  }
  return true;
}

SylvesterDecomposition pre_sylvester(const HermitianForm& h, OrderingId P, PivotStrategy strategy) {
  require_non_nil(h.algebra(), P);
  const HermitianForm form = scale_involution(h);
  const auto& A = form.algebra();
  const int ell = A.ell();
  const auto dz = diagonalize(collapse(form).gram(), strategy);
  if (dz.rank() != static_cast<int>(dz.entries.size())) {
    throw Error(ErrorCode::Singular, "pre_sylvester needs a nonsingular form");
  }

  SylvesterDecomposition out{1, {FieldElem(1)}, 0, 0, {}, {}, form, HermitianForm::zero(A, 0)};
  for (const auto& u : dz.entries) {
    auto& bucket = sign_at(u, P) > 0 ? out.pos_entries : out.neg_entries;
    for (int c = 0; c < ell; ++c) bucket.push_back(A.scalar(u));
  }
  out.r = static_cast<int>(out.pos_entries.size());
  out.s = static_cast<int>(out.neg_entries.size());

  std::vector<MatD> all = out.pos_entries;
  all.insert(all.end(), out.neg_entries.begin(), out.neg_entries.end());
  out.right_side = diag_sigma(A, all);

  const HermitianForm lhs = copies(form, ell * ell);
  const bool ranks_agree = diagonalize(lhs).rank() == diagonalize(out.right_side).rank();
  bool signs_agree = ranks_agree;
  for (auto Q : orderings(A.field())) signs_agree = signs_agree && sign_eta(lhs, Q) == sign_eta(out.right_side, Q);
  if (!signs_agree) {
    throw Error(ErrorCode::InternalInvariantViolation, "pre_sylvester decomposition fails validation");
  }
  return out;
}

int sylvester_sign(const SylvesterDecomposition& dec, const PositiveCone& K) {
  const int denom = classify(K.algebra, K.P).n_P * dec.t;
  const int diff = dec.r - dec.s;
  if (diff % denom != 0) {
    throw Error(ErrorCode::InternalInvariantViolation, "r - s is not divisible by n_P t");
  }
  return K.eps * diff / denom;
}

int sign_cone(const HermitianForm& h, const PositiveCone& K) {
  if (!(h.algebra() == K.algebra)) {
    throw Error(ErrorCode::InvalidDescriptor, "form and cone live over different algebras");
  }
  const int value = K.eps * sign_eta(h, K.P);
  const auto ns = nonsingular_part(h);
  if (ns.form.rank() > 0 && ns.flat_rank == ns.form.rank() * K.algebra.ell()) {
    if (sylvester_sign(pre_sylvester(ns.form, K.P), K) != value) {
      throw Error(ErrorCode::InternalInvariantViolation, "sign_cone disagrees with pre_sylvester");
    }
  }
  return value;
}

QuadraticFormF trace_form(const AlgebraWithInvolution& A, const MatD& b) {
  require_symmetric_invertible(A, b);
  const auto& D = A.division();
  const int ell = A.ell();
  const MatD b_inv = mat_inv(b);
  auto tau = [&](const MatD& x) { return MatD(mul(mul(b, A.sigma(x)), b_inv)); };
  auto q = [&](const MatD& x) { return reduced_trace(D, mul(tau(x), x)); };

  std::vector<MatD> basis;
  for (int r = 0; r < ell; ++r) {
    for (int c = 0; c < ell; ++c) {
      for (int m = 0; m < D.dim(); ++m) {
        MatD e = A.zero();
        e(r, c) = D.basis(m);
        basis.push_back(std::move(e));
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(basis.size());
  std::vector<FieldElem> diag(basis.size());
  for (Eigen::Index i = 0; i < n; ++i) diag[static_cast<size_t>(i)] = q(basis[static_cast<size_t>(i)]);
  MatF gram(n, n);
  const FieldElem half = FieldElem(Rational(1, 2));
  for (Eigen::Index i = 0; i < n; ++i) {
    gram(i, i) = diag[static_cast<size_t>(i)];
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const FieldElem v =
          (q(basis[static_cast<size_t>(i)] + basis[static_cast<size_t>(j)]) - diag[static_cast<size_t>(i)] -
           diag[static_cast<size_t>(j)]) *
          half;
      gram(i, j) = v;
      gram(j, i) = v;
    }
  }
  return QuadraticFormF{diagonalize(gram).entries};
}

bool trace_form_is_psd(const QuadraticFormF& q, OrderingId P) {
  for (const auto& e : q.entries) {
    if (sign_at(e, P) < 0) return false;
  }
  return true;
}

bool is_positive_involution(const AlgebraWithInvolution& A, const MatD& b, OrderingId P) {
  check_ordering(A.field(), P);
  const bool psd = trace_form_is_psd(trace_form(A, b), P);
  const int s = sign_eta(rank_one(A, mat_inv(b)), P);
  const bool maximal = std::abs(s) == classify(A, P).n_P;
  if (psd != maximal) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "trace form positivity and the signature of <b^-1> disagree at " + P.name());
  }
  return psd;
}

}  // namespace hc
