#pragma once

// Reference computations that avoid the library's congruence diagonalization,
// used to cross-check it.

#include <vector>

#include "hc/algebra.hpp"

namespace hc::oracle {

/// Cofactor expansion along the first row.
FieldElem determinant(const MatF& m);

/// Every principal minor is >= 0 at P.
bool psd_by_minors(const MatF& m, OrderingId P);

/// Symmetric elimination: nonnegative pivots, and a zero pivot only with a
/// zero row.
bool psd_by_elimination(const MatF& m, OrderingId P);

/// Coefficients c_0, ..., c_n of det(x I - m).
std::vector<FieldElem> characteristic_polynomial(const MatF& m);

/// Positive minus negative eigenvalues of the real symmetric matrix m at P,
/// counted by Descartes' rule on the characteristic polynomial.
int symmetric_signature(const MatF& m, OrderingId P);

/// F-Gram matrix of x -> theta(x)^t B x on D^n viewed as an F-space.
MatF transfer_gram(const DivisionAlgebra& D, const MatD& B);

/// Signature at P of the transfer form divided by dim_F D.
int transfer_signature(const DivisionAlgebra& D, const MatD& B, OrderingId P);

/// F-Gram matrix of x -> Trd(tau(x) x) with tau = Int(b) o sigma.
MatF trace_gram(const AlgebraWithInvolution& A, const MatD& b);

/// theta(G)^t H G == diag(entries), with plain triple-loop products.
bool congruence_holds(const MatD& H, const MatD& G, const std::vector<FieldElem>& entries);

/// x y by the definition of the matrix product.
MatD naive_product(const MatD& x, const MatD& y);

}  // namespace hc::oracle
