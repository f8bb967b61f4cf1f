#include "hc/orders.hpp"

namespace hc {

std::string to_string(CompletionClass c) {
  switch (c) {
    case CompletionClass::rcf: return "rcf";
    case CompletionClass::quat: return "quat";
    case CompletionClass::acf: return "acf";
    case CompletionClass::d_rcf: return "d-rcf";
    case CompletionClass::d_quat: return "d-quat";
  }
  return "?";
}

OrderingInfo classify(const AlgebraWithInvolution& A, OrderingId P) {
  check_ordering(A.field(), P);
  const int ell = A.ell();
  const auto& D = A.division().desc();
  switch (D.kind) {
    case DivisionKind::split:
      return {P, CompletionClass::rcf, ell, false};
    case DivisionKind::quad:
      if (sign_at(D.p, P) > 0) return {P, CompletionClass::acf, ell, false};
      return {P, CompletionClass::d_rcf, ell, true};
    case DivisionKind::quat:
      if (sign_at(D.p, P) > 0 && sign_at(D.q, P) > 0) return {P, CompletionClass::quat, ell, false};
      return {P, CompletionClass::rcf, 2 * ell, true};
  }
  throw Error(ErrorCode::InternalInvariantViolation, "unknown division kind");
}

std::vector<OrderingInfo> classify_all(const AlgebraWithInvolution& A) {
  std::vector<OrderingInfo> out;
  for (auto P : orderings(A.field())) out.push_back(classify(A, P));
  return out;
}

std::vector<OrderingId> x_tilde(const AlgebraWithInvolution& A) {
  std::vector<OrderingId> out;
  for (const auto& info : classify_all(A)) {
    if (!info.nil) out.push_back(info.P);
  }
  return out;
}

std::vector<OrderingId> harrison_F(const FieldDesc& F, const std::vector<FieldElem>& b) {
  for (const auto& x : b) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroArgument, "Harrison set of 0");
  }
  std::vector<OrderingId> out;
  for (auto P : orderings(F)) {
    bool all = true;
    for (const auto& x : b) all = all && sign_at(x, P) > 0;
    if (all) out.push_back(P);
  }
  return out;
}

void require_non_nil(const AlgebraWithInvolution& A, OrderingId P) {
  if (classify(A, P).nil) {
    throw Error(ErrorCode::NilOrdering, P.name() + " is nil for " + A.describe());
  }
}

}  // namespace hc
