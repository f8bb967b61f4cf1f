#pragma once

// Positive cones on (A, sigma) as (P, eps) handles with membership, the maps
// between cones on (D, theta) and (M_ell(D), theta^t), scaling, sampled
// closures, and positive involutions.

#include <cstdint>
#include <optional>
#include <vector>

#include "hc/signature.hpp"

namespace hc {

/// (P, +1) and (P, -1) for each non-nil P.
std::vector<PositiveCone> enumerate_cones(const AlgebraWithInvolution& A);

bool member(const MatD& u, const PositiveCone& K);

/// (P, eps) on (D, theta) -> (P, eps) on (M_ell(D), theta^t).
PositiveCone psd_up(const PositiveCone& Kd, int ell);
/// (P, eps) on (M_ell(D), theta^t) -> (P, eps) on (D, theta).
PositiveCone trace_down(const PositiveCone& K);

/// The cone a K on (A, Int(a) o sigma). A central a = lambda keeps the algebra
/// and multiplies eps by the sign of lambda.
PositiveCone scale_cone(const MatD& a, const PositiveCone& K);

struct ConeSample {
  std::vector<MatD> generators;
  std::vector<MatD> elements;
};

/// Elements sum u_i sigma(x_i) s_i x_i with s_i in S, u_i > 0 at P and random
/// x_i, preceded by the elements Phi E_00 |d| coming from x = G e_i e_0^t where
/// G diagonalizes Phi^-1 s.
ConeSample gen_cone_sample(const AlgebraWithInvolution& A, const std::vector<MatD>& S, OrderingId P, int size,
                           std::uint64_t seed);

/// Some u != 0 such that u and -u are both in the sample.
std::optional<MatD> properness_check(const ConeSample& sample);

struct PositiveInvolution {
  MatD b;
  /// (A, Int(b) o sigma), i.e. Phi replaced by b Phi.
  AlgebraWithInvolution tau;
};

/// Throws NilOrdering at nil P.
PositiveInvolution positive_involution_at(const AlgebraWithInvolution& A, OrderingId P);

bool formally_real(const AlgebraWithInvolution& A);

/// Cones containing every a_i.
std::vector<PositiveCone> harrison_sigma(const AlgebraWithInvolution& A, const std::vector<MatD>& elements);

/// eta_maximal at every P in Y. Throws OrderingNotInXTilde.
bool is_maximal_on(const AlgebraWithInvolution& A, const MatD& u, const std::vector<OrderingId>& Y);

struct MaxQCheck {
  bool maximal;
  /// Every cone over Y contains u exactly when it contains the reference.
  bool cones_agree;
  bool consistent() const { return maximal == cones_agree; }
};

/// Both sides of the maximality criterion with the reference element Phi.
/// u must be nonzero.
MaxQCheck max_q_check(const AlgebraWithInvolution& A, const MatD& u, const std::vector<OrderingId>& Y);

}  // namespace hc
