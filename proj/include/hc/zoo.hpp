#pragma once

// Built-in algebras with involution used by selftest and the acceptance suite.

#include <string>
#include <vector>

#include "hc/algebra.hpp"

namespace hc {

struct ZooEntry {
  std::string name;
  AlgebraWithInvolution algebra;
};

/// (M_n(Q), t) for n = 1, 2, 3; (M_2(Q), ad_diag(1,-1)); (M_l((-1,-1)_Q), theta^t)
/// for l = 1, 2; and over Q(sqrt 2), quat(1, 1+sqrt 2) and quad(sqrt 2) for
/// l = 1, 2.
const std::vector<ZooEntry>& zoo();

/// MatD from rows of coordinate lists.
MatD make_matrix(const DivisionAlgebra& D, const std::vector<std::vector<std::vector<FieldElem>>>& rows);
/// Diagonal matrix with F-entries.
MatD diag_matrix(const std::vector<FieldElem>& d);

}  // namespace hc
