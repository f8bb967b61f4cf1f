#include "hc/field.hpp"

#include <cctype>
#include <regex>

#include "hc/errors.hpp"

namespace hc {

namespace {

bool is_square_free(long d) {
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

int rational_sign(const Rational& q) { return sgn(q); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^[+-]?\d+(/\d+)?$)");
  if (!std::regex_match(text, pattern)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
  }
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0 || sgn(q.get_den()) == 0) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace

FieldDesc FieldDesc::real_quadratic(long d) {
  if (d < 2 || !is_square_free(d)) {
    throw Error(ErrorCode::InvalidDescriptor,
                "radicand must be a square-free integer >= 2, got " + std::to_string(d));
  }
  FieldDesc f;
  f.kind_ = FieldKind::real_quadratic;
  f.d_ = d;
  return f;
}

FieldElem::FieldElem(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ != 0 && (d_ < 2 || !is_square_free(d_))) {
    throw Error(ErrorCode::InvalidDescriptor, "bad radicand " + std::to_string(d_));
  }
  if (d_ == 0 && sgn(b_) != 0) {
    throw Error(ErrorCode::FieldMismatch, "irrational part without a radicand");
  }
}

FieldElem FieldElem::sqrt_of(const FieldDesc& field) {
  if (field.kind() != FieldKind::real_quadratic) {
    throw Error(ErrorCode::FieldMismatch, "Q has no square root of a non-square");
  }
  return FieldElem(0, 1, field.radicand());
}

long FieldElem::merged_radicand(const FieldElem& y) const {
  if (d_ == y.d_ || y.d_ == 0) return d_;
  if (d_ == 0) return y.d_;
  // Both tagged with different radicands: fine only while one side is rational.
  if (sgn(b_) == 0) return y.d_;
  if (sgn(y.b_) == 0) return d_;
  throw Error(ErrorCode::FieldMismatch, "elements of Q(sqrt " + std::to_string(d_) +
                                            ") and Q(sqrt " + std::to_string(y.d_) + ")");
}

FieldElem FieldElem::conjugate() const {
  FieldElem r = *this;
  r.b_ = -b_;
  return r;
}

Rational FieldElem::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  Rational n = norm();
  FieldElem r;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  r.d_ = d_;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& y) {
  d_ = merged_radicand(y);
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& y) {
  d_ = merged_radicand(y);
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& y) {
  long d = merged_radicand(y);
  if (sgn(b_) == 0 && sgn(y.b_) == 0) {
    a_ *= y.a_;
  } else {
    Rational a = a_ * y.a_ + Rational(d) * b_ * y.b_;
    Rational b = a_ * y.b_ + b_ * y.a_;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  d_ = d;
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& y) {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by 0");
  if (sgn(y.b_) == 0) {
    a_ /= y.a_;
    b_ /= y.a_;
    return *this;
  }
  return *this *= y.inverse();
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

std::string FieldElem::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str();
  if (sgn(b_) < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  Rational mag = abs(b_);
  out += mag.get_str() + "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

FieldElem FieldElem::parse(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty field element");

  auto root = text.find("sqrt(");
  if (root == std::string::npos) return FieldElem(parse_rational(text));

  if (text.back() != ')') throw Error(ErrorCode::ParseError, "expected ')' in '" + raw + "'");
  std::string inner = text.substr(root + 5, text.size() - root - 6);
  static const std::regex digits(R"(^\d+$)");
  if (!std::regex_match(inner, digits)) {
    throw Error(ErrorCode::ParseError, "bad radicand in '" + raw + "'");
  }
  long d = std::stol(inner);

  std::string lhs = text.substr(0, root);
  std::string rational_part;
  std::string coefficient;
  if (!lhs.empty() && lhs.back() == '*') {
    lhs.pop_back();
    size_t split = std::string::npos;
    for (size_t k = lhs.size(); k-- > 1;) {
      if ((lhs[k] == '+' || lhs[k] == '-') && std::isdigit(static_cast<unsigned char>(lhs[k - 1]))) {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) {
      coefficient = lhs;
    } else {
      rational_part = lhs.substr(0, split);
      coefficient = lhs.substr(split);
    }
    if (coefficient.size() >= 2 && coefficient[0] == '+' &&
        (coefficient[1] == '-' || coefficient[1] == '+')) {
      coefficient = coefficient.substr(1);
    }
  } else {
    // bare "sqrt(d)" with an optional leading sign
    if (lhs.empty() || lhs.back() == '+') {
      coefficient = "1";
      if (!lhs.empty()) lhs.pop_back();
    } else if (lhs.back() == '-') {
      coefficient = "-1";
      lhs.pop_back();
    } else {
      throw Error(ErrorCode::ParseError, "expected '*' before sqrt in '" + raw + "'");
    }
    rational_part = lhs;
  }
  Rational a = rational_part.empty() ? Rational(0) : parse_rational(rational_part);
  Rational b = parse_rational(coefficient);
  try {
    return FieldElem(a, b, d);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, std::string(e.what()) + " in '" + raw + "'");
  }
}

int sign_at(const FieldElem& x, OrderingId P) {
  const int sa = rational_sign(x.a());
  int sb = rational_sign(x.b());
  if (P.index == 1) sb = -sb;
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: whichever of a^2 and d b^2 is larger wins; they never tie.
  Rational lhs = x.a() * x.a();
  Rational rhs = Rational(x.radicand()) * x.b() * x.b();
  return cmp(lhs, rhs) > 0 ? sa : sb;
}

std::vector<OrderingId> orderings(const FieldDesc& field) {
  std::vector<OrderingId> out;
  for (int i = 0; i < field.num_orderings(); ++i) out.push_back(OrderingId{i});
  return out;
}

bool is_totally_positive(const FieldElem& x) {
  return sign_at(x, OrderingId{0}) > 0 && sign_at(x, OrderingId{1}) > 0;
}

std::optional<FieldElem> field_sqrt(const FieldElem& x, const FieldDesc& field) {
  const long d = field.radicand();
  if (x.is_rational()) {
    if (auto r = rational_sqrt(x.a())) return FieldElem(*r);
    if (field.kind() == FieldKind::real_quadratic) {
      // a = d t^2 has root t sqrt d
      if (auto t = rational_sqrt(x.a() / Rational(d))) return FieldElem(0, *t, d);
    }
    return std::nullopt;
  }
  if (field.kind() != FieldKind::real_quadratic || x.radicand() != d) return std::nullopt;
  // (u + v sqrt d)^2 = a + b sqrt d  forces  (u^2 - d v^2)^2 = a^2 - d b^2.
  auto s = rational_sqrt(x.norm());
  if (!s) return std::nullopt;
  for (const Rational& u2 : {Rational((x.a() + *s) / 2), Rational((x.a() - *s) / 2)}) {
    auto u = rational_sqrt(u2);
    if (!u || sgn(*u) == 0) continue;
    Rational v = x.b() / (2 * *u);
    FieldElem root(*u, v, d);
    if (root * root == x) return root;
  }
  return std::nullopt;
}

void check_ordering(const FieldDesc& field, OrderingId P) {
  if (P.index < 0 || P.index >= field.num_orderings()) {
    throw Error(ErrorCode::InvalidOrdering, P.name() + " is not an ordering of this field");
  }
}

}  // namespace hc
