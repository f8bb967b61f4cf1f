#pragma once

// Orderings of F seen through (A, sigma): the completion class, n_P, and
// whether the ordering is nil.

#include <string>
#include <vector>

#include "hc/algebra.hpp"

namespace hc {

/// d_quat never occurs for the division algebras supported here.
enum class CompletionClass { rcf, quat, acf, d_rcf, d_quat };

std::string to_string(CompletionClass c);

struct OrderingInfo {
  OrderingId P;
  CompletionClass cls;
  /// A (x) F_P = M_{n_P}(D_P)
  int n_P;
  bool nil;
};

OrderingInfo classify(const AlgebraWithInvolution& A, OrderingId P);
std::vector<OrderingInfo> classify_all(const AlgebraWithInvolution& A);

/// Orderings that are not nil.
std::vector<OrderingId> x_tilde(const AlgebraWithInvolution& A);

/// Orderings at which every b_i is positive.
std::vector<OrderingId> harrison_F(const FieldDesc& F, const std::vector<FieldElem>& b);

/// Throws NilOrdering when P is nil for A.
void require_non_nil(const AlgebraWithInvolution& A, OrderingId P);

}  // namespace hc
