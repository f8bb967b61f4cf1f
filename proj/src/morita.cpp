#include "hc/morita.hpp"

namespace hc {

HermitianForm scale_involution(const HermitianForm& h) {
  const auto& A = h.algebra();
  if (A.is_transpose_type()) return h;
  const int ell = A.ell();
  const int n = static_cast<int>(h.gram().rows());
  MatD gram(n, n);
  for (int i = 0; i < h.rank(); ++i) {
    gram.middleRows(i * ell, ell) = mul(A.phi_inv(), h.gram().middleRows(i * ell, ell));
  }
  return HermitianForm(AlgebraWithInvolution::transpose_type(A.division(), ell), std::move(gram));
}

HermitianForm collapse(const HermitianForm& h) {
  if (!h.algebra().is_transpose_type()) {
    throw Error(ErrorCode::InvalidDescriptor, "collapse expects a form over (M_ell(D), theta^t)");
  }
  return HermitianForm(h.algebra().base_algebra(), h.gram());
}

HermitianForm expand(const HermitianForm& b, int ell) {
  const auto& A = b.algebra();
  if (A.ell() != 1 || !A.is_transpose_type()) {
    throw Error(ErrorCode::InvalidDescriptor, "expand expects a form over (D, theta)");
  }
  if (ell < 1 || b.rank() % ell != 0) {
    throw Error(ErrorCode::RankNotDivisible,
                "rank " + std::to_string(b.rank()) + " is not divisible by " + std::to_string(ell));
  }
  return HermitianForm(AlgebraWithInvolution::transpose_type(A.division(), ell), b.gram());
}

HermitianForm full_reduction(const HermitianForm& h) { return collapse(scale_involution(h)); }

}  // namespace hc
