#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <doctest.h>

#include "hc/cones.hpp"
#include "hc/morita.hpp"
#include "hc/sampling.hpp"
#include "hc/zoo.hpp"

namespace t {

using namespace hc;

inline FieldElem fe(const std::string& s) { return FieldElem::parse(s); }
inline FieldDesc Q() { return FieldDesc::rationals(); }
inline FieldDesc Q2() { return FieldDesc::real_quadratic(2); }
inline FieldElem sqrt2() { return FieldElem::sqrt_of(Q2()); }
inline OrderingId P0() { return OrderingId{0}; }
inline OrderingId P1() { return OrderingId{1}; }

inline DivisionAlgebra split() { return DivisionAlgebra::split(Q()); }
inline DivisionAlgebra hamilton() { return DivisionAlgebra::quat(Q(), 1, 1); }
inline DivisionAlgebra quat2() { return DivisionAlgebra::quat(Q2(), 1, FieldElem(1) + sqrt2()); }
inline DivisionAlgebra quad2() { return DivisionAlgebra::quad(Q2(), sqrt2()); }

inline AlgebraWithInvolution mt(const DivisionAlgebra& D, int ell) {
  return AlgebraWithInvolution::transpose_type(D, ell);
}

/// Integer matrix over D (scalars).
inline MatD M(std::initializer_list<std::initializer_list<long>> rows) {
  MatD x(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) x(i, j++) = DElem(v);
    ++i;
  }
  return x;
}

/// 1 x 1 matrix holding a single element.
inline MatD one(const DElem& x) {
  MatD m(1, 1);
  m(0, 0) = x;
  return m;
}

inline DElem qi() { return hamilton().basis(1); }
inline DElem qj() { return hamilton().basis(2); }
inline DElem qk() { return hamilton().basis(3); }

inline MatF to_field(const MatD& x) {
  MatF out(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.size(); ++i) out.data()[i] = x.data()[i].coord(0);
  return out;
}

}  // namespace t
