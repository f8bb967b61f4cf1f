#pragma once

// Exact arithmetic in Q and in real quadratic fields Q(sqrt d), together with
// the (finitely many) orderings of those fields.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hc {

using Rational = mpq_class;

enum class FieldKind { rationals, real_quadratic };

/// Q, or Q(sqrt d) with d >= 2 square-free.
class FieldDesc {
 public:
  FieldDesc() = default;
  static FieldDesc rationals() { return {}; }
  static FieldDesc real_quadratic(long d);

  FieldKind kind() const { return kind_; }
  /// 0 for Q.
  long radicand() const { return d_; }
  int num_orderings() const { return kind_ == FieldKind::rationals ? 1 : 2; }

  bool operator==(const FieldDesc&) const = default;

 private:
  FieldKind kind_ = FieldKind::rationals;
  long d_ = 0;
};

/// An ordering of a field in our menu. For Q(sqrt d), index 0 sends sqrt d to
/// the positive real root and index 1 to the negative one.
struct OrderingId {
  int index = 0;

  std::string name() const { return "P" + std::to_string(index); }
  auto operator<=>(const OrderingId&) const = default;
};

/// a + b sqrt(d). A radicand of 0 means the value is rational and has not been
/// tied to a particular quadratic field; such values mix freely with any field.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long n) : a_(n) {}  // NOLINT: integers convert implicitly
  FieldElem(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  FieldElem(Rational a, Rational b, long d);

  static FieldElem sqrt_of(const FieldDesc& field);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long radicand() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Image under sqrt d -> -sqrt d.
  FieldElem conjugate() const;
  /// a^2 - d b^2, the field norm down to Q.
  Rational norm() const;
  FieldElem inverse() const;

  FieldElem& operator+=(const FieldElem& y);
  FieldElem& operator-=(const FieldElem& y);
  FieldElem& operator*=(const FieldElem& y);
  FieldElem& operator/=(const FieldElem& y);

  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
  friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }
  FieldElem operator-() const;

  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

  /// Canonical text: "p/q" or "p/q+r/s*sqrt(d)" (integers print without "/1").
  std::string to_string() const;
  static FieldElem parse(const std::string& text);

 private:
  long merged_radicand(const FieldElem& y) const;

  Rational a_;
  Rational b_;
  long d_ = 0;
};

/// Exact sign of x under the real embedding selected by P.
int sign_at(const FieldElem& x, OrderingId P);

inline std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, OrderingId P) { return os << P.name(); }

std::vector<OrderingId> orderings(const FieldDesc& field);

/// Positive under every real embedding (a rational only needs a > 0).
bool is_totally_positive(const FieldElem& x);

/// Square root of x inside `field`, if one exists.
std::optional<FieldElem> field_sqrt(const FieldElem& x, const FieldDesc& field);

/// Throws InvalidOrdering unless P is an ordering of `field`.
void check_ordering(const FieldDesc& field, OrderingId P);

}  // namespace hc
