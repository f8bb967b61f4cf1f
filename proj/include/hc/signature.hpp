#pragma once

// Signatures of hermitian forms at orderings of F. The reference convention is
// fixed once: the form that full_reduction sends to <1> over (D, theta) has
// positive signature, so sign_eta(<Phi>, P) = n_P at every non-nil P.

#include <vector>

#include "hc/forms.hpp"
#include "hc/orders.hpp"

namespace hc {

/// eps * C_P(M_P(A, sigma)) as a handle.
struct PositiveCone {
  AlgebraWithInvolution algebra;
  OrderingId P;
  int eps = 1;

  bool operator==(const PositiveCone& o) const { return algebra == o.algebra && P == o.P && eps == o.eps; }
  std::string name() const { return (eps > 0 ? "+" : "-") + P.name(); }
};

/// 0 at nil P; otherwise the number of positive minus negative diagonal values
/// of diagonalize(h) at P.
int sign_eta(const HermitianForm& h, OrderingId P, PivotStrategy strategy = PivotStrategy::first);

struct MaximalSignature {
  int value;
  MatD witness;
};

/// Maximal signature of a rank one form, with a symmetric invertible element
/// attaining it. Throws NilOrdering.
MaximalSignature m_P(const AlgebraWithInvolution& A, OrderingId P);

/// a = 0, or sign_eta(<a>, P) = n_P.
bool in_M_P(const AlgebraWithInvolution& A, const MatD& a, OrderingId P);

/// Every nonzero diagonal value of <u> is positive at P.
bool eta_maximal(const AlgebraWithInvolution& A, const MatD& u, OrderingId P);

struct SylvesterDecomposition {
  int t = 1;
  std::vector<FieldElem> betas;
  int r = 0;
  int s = 0;
  std::vector<MatD> pos_entries;
  std::vector<MatD> neg_entries;
  /// The form, over (M_ell(D), theta^t), whose ell^2 copies are decomposed.
  HermitianForm form;
  /// (pos _|_ neg) over (M_ell(D), theta^t).
  HermitianForm right_side;
};

/// ell^2 x h ~ <u_1 I, ..., u_1 I, ...> grouped by sign at P. Forms over
/// (A, ad_Phi) are first moved to theta^t by scale_involution. The result is
/// validated by rank and by the signature at every ordering.
SylvesterDecomposition pre_sylvester(const HermitianForm& h, OrderingId P,
                                     PivotStrategy strategy = PivotStrategy::first);

/// (r - s) / (n_P t), negated for eps = -1.
int sylvester_sign(const SylvesterDecomposition& dec, const PositiveCone& K);

/// eps(K) sign_eta(h, P), cross-checked against pre_sylvester on the
/// nonsingular part when that part is nonsingular as an A-form.
int sign_cone(const HermitianForm& h, const PositiveCone& K);

/// x -> Trd(tau(x) x) for tau = Int(b) o sigma on an F-basis of A, diagonalized.
QuadraticFormF trace_form(const AlgebraWithInvolution& A, const MatD& b);
bool trace_form_is_psd(const QuadraticFormF& q, OrderingId P);

/// Trace form of Int(b) o sigma is positive semidefinite at P. Throws
/// InternalInvariantViolation if that disagrees with |sign_eta(<b^-1>, P)| = n_P.
bool is_positive_involution(const AlgebraWithInvolution& A, const MatD& b, OrderingId P);

}  // namespace hc
