#include "hc/cones.hpp"

#include <algorithm>
#include <set>

#include "hc/sampling.hpp"

namespace hc {

namespace {

void require_symmetric(const AlgebraWithInvolution& A, const MatD& u) {
  A.require_element(u);
  if (!A.is_symmetric(u)) throw Error(ErrorCode::NotSymmetric, "element is not sigma-symmetric");
}

std::optional<FieldElem> central(const MatD& x) {
  const FieldElem lambda = x(0, 0).coord(0);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const DElem& e = x(i, j);
      if (i == j ? !(e.is_central() && e.coord(0) == lambda) : !e.is_zero()) return std::nullopt;
    }
  }
  return lambda;
}

}  // namespace

std::vector<PositiveCone> enumerate_cones(const AlgebraWithInvolution& A) {
  std::vector<PositiveCone> out;
  for (auto P : x_tilde(A)) {
    out.push_back({A, P, 1});
    out.push_back({A, P, -1});
  }
  return out;
}

bool member(const MatD& u, const PositiveCone& K) {
  require_symmetric(K.algebra, u);
  for (const auto& e : diagonalize(diag_sigma(K.algebra, {u})).entries) {
    if (!e.is_zero() && sign_at(e, K.P) != K.eps) return false;
  }
  return true;
}

PositiveCone psd_up(const PositiveCone& Kd, int ell) {
  if (Kd.algebra.ell() != 1 || !Kd.algebra.is_transpose_type()) {
    throw Error(ErrorCode::InvalidDescriptor, "psd_up expects a cone on (D, theta)");
  }
  return {AlgebraWithInvolution::transpose_type(Kd.algebra.division(), ell), Kd.P, Kd.eps};
}

PositiveCone trace_down(const PositiveCone& K) {
  if (!K.algebra.is_transpose_type()) {
    throw Error(ErrorCode::InvalidDescriptor, "trace_down expects a cone on (M_ell(D), theta^t)");
  }
  return {K.algebra.base_algebra(), K.P, K.eps};
}

PositiveCone scale_cone(const MatD& a, const PositiveCone& K) {
  const auto& A = K.algebra;
  require_symmetric(A, a);
  if (!is_invertible(a)) throw Error(ErrorCode::Singular, "scaling element is not invertible");
  if (auto lambda = central(a)) return {A, K.P, K.eps * sign_at(*lambda, K.P)};
  return {A.with_phi(mul(a, A.phi())), K.P, K.eps};
}

ConeSample gen_cone_sample(const AlgebraWithInvolution& A, const std::vector<MatD>& S, OrderingId P, int size,
                           std::uint64_t seed) {
  check_ordering(A.field(), P);
  for (const auto& s : S) require_symmetric(A, s);
  ConeSample out{S, {}};
  if (S.empty()) return out;
  Sampler rng(seed);
  const int ell = A.ell();

  for (const auto& s : S) {
    const auto dz = diagonalize(MatD(mul(A.phi_inv(), s)));
    for (int i = 0; i < ell && static_cast<int>(out.elements.size()) < size; ++i) {
      const FieldElem& d = dz.entries[static_cast<size_t>(i)];
      if (d.is_zero()) continue;
      MatD x = A.zero();
      x.col(0) = dz.witness.col(i);
      const FieldElem u = d.inverse() * FieldElem(sign_at(d, P));
      out.elements.push_back(scale(MatD(mul(mul(A.sigma(x), s), x)), u));
    }
  }

  while (static_cast<int>(out.elements.size()) < size) {
    MatD acc = A.zero();
    const int terms = rng.integer(1, 3);
    for (int t = 0; t < terms; ++t) {
      const MatD& s = S[static_cast<size_t>(rng.integer(0, static_cast<int>(S.size()) - 1))];
      const MatD x = rng.matrix(A.division(), ell, ell, 2);
      acc += scale(MatD(mul(mul(A.sigma(x), s), x)), rng.positive_at(A.field(), P, 3));
    }
    out.elements.push_back(std::move(acc));
  }
  return out;
}

std::optional<MatD> properness_check(const ConeSample& sample) {
  std::set<std::string> seen;
  for (const auto& u : sample.elements) seen.insert(to_string(u));
  for (const auto& u : sample.elements) {
    if (!is_zero_matrix(u) && seen.count(to_string(MatD(-u)))) return u;
  }
  return std::nullopt;
}

PositiveInvolution positive_involution_at(const AlgebraWithInvolution& A, OrderingId P) {
  require_non_nil(A, P);
  MatD b = A.identity();
  if (!is_positive_involution(A, b, P)) b = mat_inv(m_P(A, P).witness);
  if (!is_positive_involution(A, b, P)) {
    throw Error(ErrorCode::InternalInvariantViolation, "constructed involution is not positive");
  }
  return {b, A.with_phi(mul(b, A.phi()))};
}

bool formally_real(const AlgebraWithInvolution& A) { return !x_tilde(A).empty(); }

std::vector<PositiveCone> harrison_sigma(const AlgebraWithInvolution& A, const std::vector<MatD>& elements) {
  std::vector<PositiveCone> out;
  for (const auto& K : enumerate_cones(A)) {
    bool all = true;
    for (const auto& a : elements) all = all && member(a, K);
    if (all) out.push_back(K);
  }
  return out;
}

bool is_maximal_on(const AlgebraWithInvolution& A, const MatD& u, const std::vector<OrderingId>& Y) {
  const auto xt = x_tilde(A);
  for (auto P : Y) {
    check_ordering(A.field(), P);
    if (std::find(xt.begin(), xt.end(), P) == xt.end()) {
      throw Error(ErrorCode::OrderingNotInXTilde, P.name() + " is nil for " + A.describe());
    }
  }
  for (auto P : Y) {
    if (!eta_maximal(A, u, P)) return false;
  }
  return true;
}

MaxQCheck max_q_check(const AlgebraWithInvolution& A, const MatD& u, const std::vector<OrderingId>& Y) {
  if (is_zero_matrix(u)) throw Error(ErrorCode::ZeroArgument, "the maximality criterion needs u != 0");
  MaxQCheck out{is_maximal_on(A, u, Y), true};
  for (auto P : Y) {
    for (int eps : {1, -1}) {
      const PositiveCone Q{A, P, eps};
      out.cones_agree = out.cones_agree && member(u, Q) == member(A.phi(), Q);
    }
  }
  return out;
}

}  // namespace hc
