#pragma once

// Seeded random generation of field elements, matrices and forms for the
// property checks. Values are kept small so exact arithmetic stays cheap.

#include <cstdint>
#include <random>

#include "hc/forms.hpp"

namespace hc {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  bool coin(double p = 0.5);
  Rational rational(int range = 4);
  FieldElem field_elem(const FieldDesc& F, int range = 4);
  FieldElem nonzero(const FieldDesc& F, int range = 4);
  FieldElem positive_at(const FieldDesc& F, OrderingId P, int range = 4);

  DElem delem(const DivisionAlgebra& D, int range = 3);
  MatD matrix(const DivisionAlgebra& D, int rows, int cols, int range = 3);
  MatD invertible(const DivisionAlgebra& D, int n);
  /// A singular n x n matrix (rank n - 1 at most).
  MatD singular(const DivisionAlgebra& D, int n);

  /// theta^t-hermitian matrix over D; sometimes of deficient rank.
  MatD hermitian(const DivisionAlgebra& D, int n);
  MatD symmetric(const AlgebraWithInvolution& A);
  MatD symmetric_invertible(const AlgebraWithInvolution& A);
  /// A nonzero singular symmetric element, or zero when ell = 1.
  MatD symmetric_singular(const AlgebraWithInvolution& A);

  HermitianForm form(const AlgebraWithInvolution& A, int rank);
  HermitianForm nonsingular_form(const AlgebraWithInvolution& A, int rank);
  QuadraticFormF quadratic_form(const FieldDesc& F, int n);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Gram matrix over (A, sigma) whose scaled flattening is H.
HermitianForm form_from_flat(const AlgebraWithInvolution& A, const MatD& H);

}  // namespace hc
