#pragma once

// Hermitian forms over (A, sigma) on free modules A^k, given by Gram matrices.

#include <cstdint>
#include <optional>
#include <vector>

#include "hc/algebra.hpp"

namespace hc {

/// h(x, y) = sum_ij sigma(x_i) a_ij y_j on A^k. The Gram matrix is stored
/// flattened: block (i, j) of the k*ell square matrix over D is a_ij.
class HermitianForm {
 public:
  /// Validates block shape and a_ji = sigma(a_ij).
  HermitianForm(AlgebraWithInvolution algebra, MatD gram);
  static HermitianForm zero(const AlgebraWithInvolution& algebra, int rank);

  const AlgebraWithInvolution& algebra() const { return algebra_; }
  /// Rank as a free A-module.
  int rank() const { return static_cast<int>(gram_.rows()) / algebra_.ell(); }
  const MatD& gram() const { return gram_; }
  MatD block(int i, int j) const;

  /// h(x, y) for x, y in A^k, each stacked as a (k ell) x ell matrix.
  MatD evaluate(const MatD& x, const MatD& y) const;

  bool operator==(const HermitianForm& o) const { return algebra_ == o.algebra_ && gram_ == o.gram_; }

 private:
  AlgebraWithInvolution algebra_;
  MatD gram_;
};

/// <u_1, ..., u_n> over F.
struct QuadraticFormF {
  std::vector<FieldElem> entries;

  int dimension() const { return static_cast<int>(entries.size()); }
  int signature(OrderingId P) const;
};

using DiagonalizationResult = Diagonalization<DElem>;

/// <a_1, ..., a_k>_sigma; each a_i must be sigma-symmetric.
HermitianForm diag_sigma(const AlgebraWithInvolution& algebra, const std::vector<MatD>& elements);
HermitianForm direct_sum(const HermitianForm& h1, const HermitianForm& h2);
/// m x h
HermitianForm copies(const HermitianForm& h, int m);
/// q (x) h = u_1 h _|_ ... _|_ u_n h.
HermitianForm tensor(const QuadraticFormF& q, const HermitianForm& h);
/// c h, a form over (A, Int(c) o sigma) whose Phi is c Phi. A central c = lambda
/// leaves the involution unchanged, so the result stays on the same algebra
/// and equals <lambda> (x) h.
HermitianForm scale(const MatD& c, const HermitianForm& h);

/// Diagonalization of the fully reduced form over (D, theta).
DiagonalizationResult diagonalize(const HermitianForm& h, PivotStrategy strategy = PivotStrategy::first);

/// h ~ h_ns _|_ 0. The nonzero diagonal values (over D) are padded with zeros
/// up to a multiple of ell, expanded into ell x ell blocks and brought back to
/// (A, sigma); `flat_rank` counts the nonzero values, `zero_rank` the A-rank
/// of the zero summand.
struct NonsingularPart {
  HermitianForm form;
  int zero_rank;
  int flat_rank;
};
NonsingularPart nonsingular_part(const HermitianForm& h);

/// a_1, ..., a_{k ell} with ell x h ~ <a_1, ...>_sigma, each a_i = Phi (d_i I)
/// with d_i in F (so a_i is invertible or zero).
std::vector<MatD> morita_diag_rep(const HermitianForm& h);

struct WeakRepresentation {
  int copies;
  /// Vector of (copies x h), stacked as (copies k ell) x ell.
  MatD vector;
};

/// Searches a bounded number of copies m x h for X with (m x h)(X, X) = u. A result is
/// certified by exact evaluation; nullopt only means nothing was found.
std::optional<WeakRepresentation> weakly_represents(const HermitianForm& h, const MatD& u, int budget,
                                                    std::uint64_t seed = 0);

}  // namespace hc
