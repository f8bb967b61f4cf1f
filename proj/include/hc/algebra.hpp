#pragma once

// Division algebras D with their canonical involution theta, matrices over D,
// and the algebra with involution (M_ell(D), ad_Phi), ad_Phi = Int(Phi) o theta^t.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "hc/dense.hpp"
#include "hc/field.hpp"

namespace hc {

enum class DivisionKind { split, quad, quat };

/// Structure constants of D. quad(d) is F(sqrt -d); quat(a, b) is the
/// quaternion algebra with i^2 = -a, j^2 = -b, ij = k = -ji.
struct DivisionAlgebraDesc {
  DivisionKind kind = DivisionKind::split;
  FieldDesc base;
  FieldElem p;  // d for quad, a for quat
  FieldElem q;  // b for quat

  int dim() const { return kind == DivisionKind::split ? 1 : kind == DivisionKind::quad ? 2 : 4; }
  bool operator==(const DivisionAlgebraDesc& o) const {
    return kind == o.kind && base == o.base && p == o.p && q == o.q;
  }
};

class DElem;

/// Shared handle to an immutable, validated DivisionAlgebraDesc.
class DivisionAlgebra {
 public:
  static DivisionAlgebra split(const FieldDesc& base);
  static DivisionAlgebra quad(const FieldDesc& base, const FieldElem& d);
  static DivisionAlgebra quat(const FieldDesc& base, const FieldElem& a, const FieldElem& b);

  const DivisionAlgebraDesc& desc() const { return *desc_; }
  DivisionKind kind() const { return desc_->kind; }
  const FieldDesc& base() const { return desc_->base; }
  int dim() const { return desc_->dim(); }

  DElem elem(std::vector<FieldElem> coords) const;
  DElem scalar(const FieldElem& x) const;
  /// Basis element number `index` (1, i, j, k order; 1, sqrt(-d) for quad).
  DElem basis(int index) const;

  bool operator==(const DivisionAlgebra& o) const { return desc_ == o.desc_ || *desc_ == *o.desc_; }

 private:
  friend class DElem;
  explicit DivisionAlgebra(std::shared_ptr<const DivisionAlgebraDesc> d) : desc_(std::move(d)) {}
  std::shared_ptr<const DivisionAlgebraDesc> desc_;
};

/// Element of D in coordinates over F. A DElem without an attached algebra is
/// a central scalar (only coordinate 0 is used); that is what Eigen's
/// Zero()/Identity() produce.
class DElem {
 public:
  DElem() = default;
  DElem(long n) : c_{FieldElem(n)} {}                 // NOLINT
  DElem(const FieldElem& x) : c_{x} {}                // NOLINT
  DElem(std::shared_ptr<const DivisionAlgebraDesc> alg, std::array<FieldElem, 4> c)
      : c_(std::move(c)), alg_(std::move(alg)) {}

  const FieldElem& coord(int i) const { return c_[static_cast<size_t>(i)]; }
  const std::array<FieldElem, 4>& coords() const { return c_; }
  const std::shared_ptr<const DivisionAlgebraDesc>& algebra() const { return alg_; }
  int dim() const { return alg_ ? alg_->dim() : 1; }

  bool is_zero() const;
  /// True when the element lies in F (all non-scalar coordinates vanish).
  bool is_central() const;
  /// Reduced norm x theta(x), an element of F.
  FieldElem nrd() const;

  DElem& operator+=(const DElem& y);
  DElem& operator-=(const DElem& y);
  friend DElem operator+(DElem x, const DElem& y) { return x += y; }
  friend DElem operator-(DElem x, const DElem& y) { return x -= y; }
  friend DElem operator*(const DElem& x, const DElem& y);
  /// x * y^{-1}
  friend DElem operator/(const DElem& x, const DElem& y);
  DElem& operator*=(const DElem& y) { return *this = *this * y; }
  DElem& operator/=(const DElem& y) { return *this = *this / y; }
  DElem operator-() const;

  friend bool operator==(const DElem& x, const DElem& y) { return x.c_ == y.c_; }
  friend bool operator!=(const DElem& x, const DElem& y) { return !(x == y); }

  std::string to_string() const;

 private:
  std::array<FieldElem, 4> c_;
  std::shared_ptr<const DivisionAlgebraDesc> alg_;
};

}  // namespace hc

namespace Eigen {

template <>
struct NumTraits<hc::DElem> : GenericNumTraits<hc::DElem> {
  using Real = hc::DElem;
  using NonInteger = hc::DElem;
  using Nested = hc::DElem;
  using Literal = hc::DElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 256
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace hc {

inline std::ostream& operator<<(std::ostream& os, const DElem& x) { return os << x.to_string(); }

DElem theta(const DElem& x);
DElem inverse(const DElem& x);

// Scalar hooks used by the generic dense routines in dense.hpp.
inline DElem involute(const DElem& x) { return theta(x); }
inline bool is_zero(const DElem& x) { return x.is_zero(); }
/// The F-value of a theta-symmetric element.
FieldElem central_value(const DElem& x);

using MatD = Matrix<DElem>;

extern template Matrix<DElem> mat_inv(const Matrix<DElem>&);
extern template bool is_hermitian(const Matrix<DElem>&);
extern template Diagonalization<DElem> diagonalize(const Matrix<DElem>&, PivotStrategy);

/// theta^t applied to X, materialized.
MatD theta_t(const MatD& x);

/// (M_ell(D), ad_Phi). Immutable; copies share storage.
class AlgebraWithInvolution {
 public:
  /// Validates Phi: ell x ell, invertible, theta^t(Phi) = Phi.
  AlgebraWithInvolution(DivisionAlgebra D, int ell, MatD phi);
  /// (M_ell(D), theta^t).
  static AlgebraWithInvolution transpose_type(DivisionAlgebra D, int ell);

  int ell() const { return data_->ell; }
  const DivisionAlgebra& division() const { return data_->D; }
  const FieldDesc& field() const { return data_->D.base(); }
  const MatD& phi() const { return data_->phi; }
  const MatD& phi_inv() const { return data_->phi_inv; }
  /// Phi == I, i.e. sigma = theta^t.
  bool is_transpose_type() const { return data_->phi_is_identity; }
  /// dim_F A
  int dimension() const { return ell() * ell() * division().dim(); }

  MatD identity() const;
  MatD zero() const;
  MatD scalar(const FieldElem& x) const;

  /// sigma(x) = Phi theta^t(x) Phi^{-1}
  MatD sigma(const MatD& x) const;
  bool is_symmetric(const MatD& x) const;
  void require_element(const MatD& x) const;

  /// (D, theta) viewed as M_1(D) with Phi = 1.
  AlgebraWithInvolution base_algebra() const;
  /// Same D and ell, Phi replaced.
  AlgebraWithInvolution with_phi(MatD phi) const { return {division(), ell(), std::move(phi)}; }

  bool operator==(const AlgebraWithInvolution& o) const;

  std::string describe() const;

 private:
  struct Data {
    DivisionAlgebra D;
    int ell;
    MatD phi;
    MatD phi_inv;
    bool phi_is_identity;
  };
  std::shared_ptr<const Data> data_;
};

/// Element-wise F-scaling of a matrix over D.
MatD scale(const MatD& x, const FieldElem& c);

/// Canonical text of a matrix over D (used for structural comparisons).
std::string to_string(const MatD& x);

}  // namespace hc
