#include "hc/dense_impl.hpp"

#include "hc/algebra.hpp"

namespace hc {

template Matrix<FieldElem> mat_inv(const Matrix<FieldElem>&);
template bool is_hermitian(const Matrix<FieldElem>&);
template Diagonalization<FieldElem> diagonalize(const Matrix<FieldElem>&, PivotStrategy);

template Matrix<DElem> mat_inv(const Matrix<DElem>&);
template bool is_hermitian(const Matrix<DElem>&);
template Diagonalization<DElem> diagonalize(const Matrix<DElem>&, PivotStrategy);

}  // namespace hc
