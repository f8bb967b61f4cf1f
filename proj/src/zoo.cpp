#include "hc/zoo.hpp"

namespace hc {

MatD make_matrix(const DivisionAlgebra& D, const std::vector<std::vector<std::vector<FieldElem>>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = n ? static_cast<Eigen::Index>(rows[0].size()) : 0;
  MatD x(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<size_t>(i)].size()) != m) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    }
    for (Eigen::Index j = 0; j < m; ++j) x(i, j) = D.elem(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  return x;
}

MatD diag_matrix(const std::vector<FieldElem>& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  MatD x = MatD::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) x(i, i) = DElem(d[static_cast<size_t>(i)]);
  return x;
}

const std::vector<ZooEntry>& zoo() {
  static const std::vector<ZooEntry> entries = [] {
    const FieldDesc Q = FieldDesc::rationals();
    const FieldDesc Q2 = FieldDesc::real_quadratic(2);
    const FieldElem sqrt2 = FieldElem::sqrt_of(Q2);
    const auto split = DivisionAlgebra::split(Q);
    const auto hamilton = DivisionAlgebra::quat(Q, 1, 1);
    const auto quat2 = DivisionAlgebra::quat(Q2, 1, FieldElem(1) + sqrt2);
    const auto quad2 = DivisionAlgebra::quad(Q2, sqrt2);

    std::vector<ZooEntry> z;
    for (int n = 1; n <= 3; ++n) {
      z.push_back({"M" + std::to_string(n) + "(Q),t", AlgebraWithInvolution::transpose_type(split, n)});
    }
    z.push_back({"M2(Q),ad(diag(1,-1))", AlgebraWithInvolution(split, 2, diag_matrix({1, -1}))});
    for (int l = 1; l <= 2; ++l) {
      z.push_back({"M" + std::to_string(l) + "((-1,-1)_Q),theta^t", AlgebraWithInvolution::transpose_type(hamilton, l)});
    }
    for (int l = 1; l <= 2; ++l) {
      z.push_back({"M" + std::to_string(l) + "(quat(1,1+sqrt2)),theta^t", AlgebraWithInvolution::transpose_type(quat2, l)});
    }
    for (int l = 1; l <= 2; ++l) {
      z.push_back({"M" + std::to_string(l) + "(quad(sqrt2)),theta^t", AlgebraWithInvolution::transpose_type(quad2, l)});
    }
    return z;
  }();
  return entries;
}

}  // namespace hc
