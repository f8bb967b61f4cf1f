#include "hc/algebra.hpp"

#include <sstream>

#include "hc/errors.hpp"

namespace hc {

namespace {

using DescPtr = std::shared_ptr<const DivisionAlgebraDesc>;

void require_in_field(const FieldDesc& base, const FieldElem& x, const char* what) {
  if (!x.is_rational() && x.radicand() != base.radicand()) {
    throw Error(ErrorCode::FieldMismatch, std::string(what) + " " + x.to_string() + " is not in the base field");
  }
}

const DescPtr& merge(const DescPtr& x, const DescPtr& y) {
  if (!x) return y;
  if (!y || x == y) return x;
  if (!(*x == *y)) throw Error(ErrorCode::FieldMismatch, "elements of different division algebras");
  return x;
}

std::array<FieldElem, 4> multiply(const DivisionAlgebraDesc& D, const std::array<FieldElem, 4>& x,
                                  const std::array<FieldElem, 4>& y) {
  switch (D.kind) {
    case DivisionKind::split:
      return {x[0] * y[0]};
    case DivisionKind::quad: {
      // w = sqrt(-d), w^2 = -d
      const FieldElem& d = D.p;
      return {x[0] * y[0] - d * x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
    }
    case DivisionKind::quat: {
      // i^2 = al, j^2 = be, ij = k = -ji, with al = -a, be = -b
      const FieldElem al = -D.p;
      const FieldElem be = -D.q;
      return {
          x[0] * y[0] + al * x[1] * y[1] + be * x[2] * y[2] - al * be * x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] - be * x[2] * y[3] + be * x[3] * y[2],
          x[0] * y[2] + x[2] * y[0] + al * x[1] * y[3] - al * x[3] * y[1],
          x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1],
      };
    }
  }
  return {};
}

}  // namespace

DivisionAlgebra DivisionAlgebra::split(const FieldDesc& base) {
  auto d = std::make_shared<DivisionAlgebraDesc>();
  d->kind = DivisionKind::split;
  d->base = base;
  return DivisionAlgebra(std::move(d));
}

DivisionAlgebra DivisionAlgebra::quad(const FieldDesc& base, const FieldElem& d) {
  require_in_field(base, d, "quad parameter");
  bool ok = false;
  for (auto P : orderings(base)) ok = ok || sign_at(d, P) > 0;
  if (!ok) {
    throw Error(ErrorCode::InvalidDescriptor,
                "quad(" + d.to_string() + "): -d must be negative at some ordering");
  }
  auto desc = std::make_shared<DivisionAlgebraDesc>();
  desc->kind = DivisionKind::quad;
  desc->base = base;
  desc->p = d;
  return DivisionAlgebra(std::move(desc));
}

DivisionAlgebra DivisionAlgebra::quat(const FieldDesc& base, const FieldElem& a, const FieldElem& b) {
  require_in_field(base, a, "quat parameter");
  require_in_field(base, b, "quat parameter");
  bool ok = false;
  for (auto P : orderings(base)) ok = ok || (sign_at(a, P) > 0 && sign_at(b, P) > 0);
  if (!ok) {
    throw Error(ErrorCode::InvalidDescriptor, "quat(" + a.to_string() + ", " + b.to_string() +
                                                  "): norm form is definite at no ordering");
  }
  auto desc = std::make_shared<DivisionAlgebraDesc>();
  desc->kind = DivisionKind::quat;
  desc->base = base;
  desc->p = a;
  desc->q = b;
  return DivisionAlgebra(std::move(desc));
}

DElem DivisionAlgebra::elem(std::vector<FieldElem> coords) const {
  if (static_cast<int>(coords.size()) != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(dim()) + " coordinates, got " +
                                                  std::to_string(coords.size()));
  }
  std::array<FieldElem, 4> c;
  for (size_t i = 0; i < coords.size(); ++i) {
    require_in_field(base(), coords[i], "coordinate");
    c[i] = std::move(coords[i]);
  }
  return DElem(desc_, std::move(c));
}

DElem DivisionAlgebra::scalar(const FieldElem& x) const {
  require_in_field(base(), x, "scalar");
  return DElem(desc_, {x});
}

DElem DivisionAlgebra::basis(int index) const {
  if (index < 0 || index >= dim()) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  std::array<FieldElem, 4> c;
  c[static_cast<size_t>(index)] = FieldElem(1);
  return DElem(desc_, std::move(c));
}

bool DElem::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool DElem::is_central() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

FieldElem DElem::nrd() const {
  if (!alg_) return c_[0] * c_[0];
  switch (alg_->kind) {
    case DivisionKind::split:
      return c_[0] * c_[0];
    case DivisionKind::quad:
      return c_[0] * c_[0] + alg_->p * c_[1] * c_[1];
    case DivisionKind::quat: {
      const FieldElem& a = alg_->p;
      const FieldElem& b = alg_->q;
      return c_[0] * c_[0] + a * c_[1] * c_[1] + b * c_[2] * c_[2] + a * b * c_[3] * c_[3];
    }
  }
  return {};
}

DElem& DElem::operator+=(const DElem& y) {
  alg_ = merge(alg_, y.alg_);
  for (size_t i = 0; i < 4; ++i) {
    if (!y.c_[i].is_zero()) c_[i] += y.c_[i];
  }
  return *this;
}

DElem& DElem::operator-=(const DElem& y) {
  alg_ = merge(alg_, y.alg_);
  for (size_t i = 0; i < 4; ++i) {
    if (!y.c_[i].is_zero()) c_[i] -= y.c_[i];
  }
  return *this;
}

DElem operator*(const DElem& x, const DElem& y) {
  const DescPtr& alg = merge(x.alg_, y.alg_);
  const bool x_scalar = !x.alg_ || x.is_central();
  const bool y_scalar = !y.alg_ || y.is_central();
  std::array<FieldElem, 4> c;
  if (x_scalar || y_scalar || !alg) {
    const FieldElem& s = x_scalar ? x.c_[0] : y.c_[0];
    const auto& v = x_scalar ? y.c_ : x.c_;
    if (!s.is_zero()) {
      for (size_t i = 0; i < 4; ++i) {
        if (!v[i].is_zero()) c[i] = s * v[i];
      }
    }
  } else {
    c = multiply(*alg, x.c_, y.c_);
  }
  return DElem(alg, std::move(c));
}

DElem operator/(const DElem& x, const DElem& y) { return x * inverse(y); }

DElem DElem::operator-() const {
  DElem r = *this;
  for (auto& v : r.c_) {
    if (!v.is_zero()) v = -v;
  }
  return r;
}

std::string DElem::to_string() const {
  std::string out = "[";
  for (int i = 0; i < dim(); ++i) {
    if (i) out += ",";
    out += c_[static_cast<size_t>(i)].to_string();
  }
  return out + "]";
}

DElem theta(const DElem& x) {
  if (x.is_central()) return x;
  return DElem(x.algebra(), {x.coord(0), -x.coord(1), -x.coord(2), -x.coord(3)});
}

DElem inverse(const DElem& x) {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in D");
  if (x.is_central()) return DElem(x.algebra(), {x.coord(0).inverse()});
  const FieldElem n = x.nrd();
  if (n.is_zero()) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "nonzero element " + x.to_string() + " has reduced norm 0; D is not a division algebra");
  }
  return theta(x) * DElem(n.inverse());
}

FieldElem central_value(const DElem& x) {
  if (!x.is_central()) {
    throw Error(ErrorCode::InternalInvariantViolation, "expected an element of F, got " + x.to_string());
  }
  return x.coord(0);
}

MatD theta_t(const MatD& x) { return involuted_transpose(x); }

MatD scale(const MatD& x, const FieldElem& c) {
  const DElem s(c);
  return x.unaryExpr([&s](const DElem& e) { return s * e; });
}

std::string to_string(const MatD& x) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (j) out += ",";
      out += x(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

AlgebraWithInvolution::AlgebraWithInvolution(DivisionAlgebra D, int ell, MatD phi) {
  if (ell < 1) throw Error(ErrorCode::InvalidDescriptor, "ell must be positive");
  if (phi.rows() != ell || phi.cols() != ell) {
    throw Error(ErrorCode::DimensionMismatch, "Phi must be " + std::to_string(ell) + "x" + std::to_string(ell));
  }
  if (theta_t(phi) != phi) {
    throw Error(ErrorCode::InvalidDescriptor, "Phi must satisfy theta^t(Phi) = Phi (hermitian, epsilon = +1)");
  }
  MatD phi_inv;
  try {
    phi_inv = mat_inv(phi);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Singular) throw Error(ErrorCode::Singular, "Phi is not invertible");
    throw;
  }
  const bool identity = phi == MatD::Identity(ell, ell);
  data_ = std::make_shared<const Data>(Data{std::move(D), ell, std::move(phi), std::move(phi_inv), identity});
}

AlgebraWithInvolution AlgebraWithInvolution::transpose_type(DivisionAlgebra D, int ell) {
  return AlgebraWithInvolution(std::move(D), ell, MatD::Identity(ell, ell));
}

MatD AlgebraWithInvolution::identity() const { return MatD::Identity(ell(), ell()); }
MatD AlgebraWithInvolution::zero() const { return MatD::Zero(ell(), ell()); }
MatD AlgebraWithInvolution::scalar(const FieldElem& x) const { return scale(identity(), x); }

void AlgebraWithInvolution::require_element(const MatD& x) const {
  if (x.rows() != ell() || x.cols() != ell()) {
    throw Error(ErrorCode::DimensionMismatch, "expected an element of M_" + std::to_string(ell()) + "(D), got " +
                                                  std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}

MatD AlgebraWithInvolution::sigma(const MatD& x) const {
  require_element(x);
  if (is_transpose_type()) return theta_t(x);
  return mul(mul(phi(), theta_t(x)), phi_inv());
}

bool AlgebraWithInvolution::is_symmetric(const MatD& x) const { return sigma(x) == x; }

AlgebraWithInvolution AlgebraWithInvolution::base_algebra() const {
  return transpose_type(division(), 1);
}

bool AlgebraWithInvolution::operator==(const AlgebraWithInvolution& o) const {
  if (data_ == o.data_) return true;
  return ell() == o.ell() && division() == o.division() && phi() == o.phi();
}

std::string AlgebraWithInvolution::describe() const {
  std::ostringstream out;
  const auto& F = field();
  std::string f = F.kind() == FieldKind::rationals ? "Q" : "Q(sqrt(" + std::to_string(F.radicand()) + "))";
  std::string d;
  switch (division().kind()) {
    case DivisionKind::split: d = f; break;
    case DivisionKind::quad: d = "quad(" + division().desc().p.to_string() + ") over " + f; break;
    case DivisionKind::quat:
      d = "quat(" + division().desc().p.to_string() + "," + division().desc().q.to_string() + ") over " + f;
      break;
  }
  out << "M_" << ell() << "(" << d << ")";
  if (is_transpose_type()) {
    out << ", theta^t";
  } else {
    out << ", ad_Phi Phi=" << to_string(phi());
  }
  return out.str();
}

}  // namespace hc
