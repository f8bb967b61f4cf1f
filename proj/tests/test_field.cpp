#include <gmpxx.h>

#include "support.hpp"

using namespace t;

namespace {

// Sign of a + s b sqrt(d) evaluated in 512-bit floating point.
int float_sign(const FieldElem& x, OrderingId P) {
  mpf_class a(x.a(), 512), b(x.b(), 512), r(x.radicand(), 512);
  mpf_class root(0, 512);
  if (x.radicand() > 0) root = sqrt(r);
  mpf_class v = a + (P.index == 0 ? 1 : -1) * b * root;
  return sgn(v);
}

}  // namespace

TEST_CASE("quadratic field arithmetic") {
  const FieldElem s = sqrt2();
  CHECK((FieldElem(1) + s) * (FieldElem(1) - s) == FieldElem(-1));
  const FieldElem x = FieldElem(3) + s;
  CHECK(x * x.inverse() == FieldElem(1));
  // (3 + 2r)(3 - 2r) = 9 - 2*4 with r^2 = 2
  const FieldElem y = FieldElem(3) + FieldElem(2) * s;
  const FieldElem z = FieldElem(3) - FieldElem(2) * s;
  const Rational a = 3 * 3 - 2 * 2 * 2;
  const Rational b = 3 * (-2) + 2 * 3;
  CHECK(y * z == FieldElem(a, b, 2));
  CHECK(y * z == FieldElem(1));
}

TEST_CASE("division by zero and mixed fields are rejected") {
  CHECK_THROWS_AS(FieldElem(1) / FieldElem(0), Error);
  try {
    (void)FieldElem(0).inverse();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  try {
    (void)(FieldElem::sqrt_of(FieldDesc::real_quadratic(2)) + FieldElem::sqrt_of(FieldDesc::real_quadratic(3)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("field descriptors") {
  for (long d : {0L, 1L, 4L, 8L, -2L}) {
    try {
      (void)FieldDesc::real_quadratic(d);
      FAIL("accepted radicand " << d);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidDescriptor);
    }
  }
  CHECK(orderings(Q()).size() == 1);
  CHECK(orderings(Q2()).size() == 2);
  CHECK(orderings(FieldDesc::real_quadratic(5)).size() == 2);
  try {
    check_ordering(Q(), P1());
    FAIL("P1 accepted for Q");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidOrdering);
  }
}

TEST_CASE("sign_at examples") {
  CHECK(sign_at(FieldElem(0), P0()) == 0);
  CHECK(sign_at(FieldElem(0), P1()) == 0);
  // 3^2 = 9 > 2 * 2^2 = 8
  CHECK(sign_at(fe("3-2*sqrt(2)"), P0()) == 1);
  CHECK(sign_at(fe("3-2*sqrt(2)"), P1()) == 1);
  CHECK(sign_at(fe("1+1*sqrt(2)"), P1()) == -1);
  CHECK(sign_at(fe("1+1*sqrt(2)"), P0()) == 1);
  CHECK(is_totally_positive(FieldElem(2)));
  CHECK_FALSE(is_totally_positive(fe("1+1*sqrt(2)")));
  CHECK(is_totally_positive(fe("3-1*sqrt(2)")));
}

TEST_CASE("sign_at agrees with high-precision evaluation") {
  Sampler rng(11);
  for (long d : {2L, 3L, 5L, 7L}) {
    const FieldDesc F = FieldDesc::real_quadratic(d);
    for (int s = 0; s < 300; ++s) {
      const FieldElem x = rng.field_elem(F, 9);
      for (auto P : orderings(F)) CHECK(sign_at(x, P) == float_sign(x, P));
    }
  }
}

TEST_CASE("sign laws on random elements") {
  Sampler rng(12);
  for (int s = 0; s < 300; ++s) {
    const FieldElem x = rng.nonzero(Q2());
    const FieldElem y = rng.field_elem(Q2());
    for (auto P : orderings(Q2())) {
      CHECK(sign_at(x, P) * sign_at(x.inverse(), P) == 1);
      CHECK(sign_at(x * y, P) == sign_at(x, P) * sign_at(y, P));
    }
    CHECK(is_totally_positive(x * x));
  }
}

TEST_CASE("text form round trips") {
  for (const char* s : {"0", "7", "-3/4", "1/2+3/4*sqrt(2)", "-5-1/3*sqrt(7)", "1*sqrt(2)", "-1*sqrt(2)", "2/3-1*sqrt(5)"}) {
    CHECK(FieldElem::parse(s).to_string() == s);
  }
  CHECK(FieldElem::parse("sqrt(2)") == sqrt2());
  CHECK(FieldElem::parse("4/6") == FieldElem(Rational(2, 3)));
  CHECK(FieldElem::parse("1 + 2*sqrt(3)").to_string() == "1+2*sqrt(3)");
  for (const char* bad : {"", "abc", "1+2*sqrt(4)", "1+sqrt(x)", "1/0"}) {
    CHECK_THROWS_AS(FieldElem::parse(bad), Error);
  }
  Sampler rng(13);
  for (int s = 0; s < 200; ++s) {
    const FieldElem x = rng.field_elem(Q2(), 50);
    CHECK(FieldElem::parse(x.to_string()) == x);
  }
}

TEST_CASE("square roots in the field") {
  CHECK(field_sqrt(FieldElem(Rational(9, 4)), Q()) == FieldElem(Rational(3, 2)));
  CHECK_FALSE(field_sqrt(FieldElem(2), Q()).has_value());
  CHECK(field_sqrt(FieldElem(2), Q2()) == sqrt2());
  const auto r = field_sqrt(fe("3+2*sqrt(2)"), Q2());
  REQUIRE(r.has_value());
  CHECK(*r * *r == fe("3+2*sqrt(2)"));
  CHECK_FALSE(field_sqrt(FieldElem(-1), Q2()).has_value());
  Sampler rng(14);
  for (int s = 0; s < 100; ++s) {
    const FieldElem x = rng.field_elem(Q2());
    const auto y = field_sqrt(x * x, Q2());
    REQUIRE(y.has_value());
    CHECK(*y * *y == x * x);
  }
}
