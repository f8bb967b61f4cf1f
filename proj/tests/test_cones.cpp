#include "support.hpp"

using namespace t;

TEST_CASE("cone enumeration") {
  for (int n = 1; n <= 3; ++n) CHECK(enumerate_cones(mt(split(), n)).size() == 2);
  CHECK(enumerate_cones(mt(quat2(), 1)).size() == 2);
  CHECK(enumerate_cones(mt(quad2(), 2)).size() == 2);
  const auto totally_positive = DivisionAlgebra::quad(Q2(), FieldElem(3) + sqrt2());
  CHECK(enumerate_cones(mt(totally_positive, 1)).size() == 4);
  const auto cones = enumerate_cones(mt(split(), 2));
  CHECK(cones[0].name() == "+P0");
  CHECK(cones[1].name() == "-P0");
}

TEST_CASE("membership examples") {
  const auto A = mt(split(), 2);
  const PositiveCone pos{A, P0(), 1}, neg{A, P0(), -1};
  CHECK(member(M({{2, 1}, {1, 1}}), pos));
  CHECK_FALSE(member(M({{2, 1}, {1, 1}}), neg));
  CHECK_FALSE(member(M({{0, 1}, {1, 0}}), pos));
  CHECK_FALSE(member(M({{0, 1}, {1, 0}}), neg));
  CHECK(member(M({{1, 0}, {0, 0}}), pos));
  CHECK(member(A.zero(), pos));
  CHECK(member(A.zero(), neg));
  CHECK(member(M({{-1, 0}, {0, -3}}), neg));
  CHECK_THROWS_AS(member(M({{0, 1}, {2, 0}}), pos), Error);

  const auto H = mt(hamilton(), 1);
  CHECK(member(one(qi() * qi() * DElem(-1)), {H, P0(), 1}));

  const auto Q4 = mt(quat2(), 1);
  CHECK(member(one(DElem(sqrt2())), {Q4, P0(), 1}));
  CHECK_FALSE(member(one(DElem(sqrt2())), {Q4, P0(), -1}));
}

TEST_CASE("moving cones between D and matrices over D") {
  const auto D = mt(split(), 1);
  for (int eps : {1, -1}) {
    const PositiveCone Kd{D, P0(), eps};
    const auto K = psd_up(Kd, 2);
    CHECK(K.algebra == mt(split(), 2));
    CHECK(K.eps == eps);
    CHECK(trace_down(K) == Kd);
    CHECK(member(M({{2, 1}, {1, 1}}), K) == (eps == 1));
    CHECK_FALSE(member(M({{0, 1}, {1, 0}}), K));
  }
  CHECK_THROWS_AS(psd_up({mt(split(), 2), P0(), 1}, 2), Error);
  const auto tw = AlgebraWithInvolution(split(), 2, M({{1, 0}, {0, -1}}));
  CHECK_THROWS_AS(trace_down({tw, P0(), 1}), Error);
}

TEST_CASE("compressions respect cones") {
  Sampler rng(71);
  const DivisionAlgebra divs[] = {split(), hamilton(), quat2(), quad2()};
  for (const auto& D : divs) {
    const auto B = mt(D, 1);
    for (const auto& Kd : enumerate_cones(B)) {
      const auto K = psd_up(Kd, 2);
      for (int s = 0; s < 10; ++s) {
        const MatD u = rng.symmetric(K.algebra);
        if (!member(u, K)) continue;
        const MatD x = rng.matrix(D, 2, 1);
        CHECK(member(mul(mul(theta_t(x), u), x), Kd));
      }
      for (int s = 0; s < 10; ++s) {
        const MatD d = rng.symmetric(B);
        if (!member(d, Kd)) continue;
        const MatD y = rng.matrix(D, 1, 2);
        CHECK(member(mul(mul(theta_t(y), d), y), K));
      }
    }
  }
}

TEST_CASE("cone axioms on samples") {
  Sampler rng(72);
  for (const auto& z : zoo()) {
    const auto& A = z.algebra;
    for (const auto& K : enumerate_cones(A)) {
      std::vector<MatD> in;
      for (int s = 0; s < 40 && in.size() < 6; ++s) {
        const MatD u = rng.symmetric(A);
        if (member(u, K)) in.push_back(u);
      }
      in.push_back(scale(m_P(A, K.P).witness, FieldElem(K.eps)));
      for (size_t i = 0; i < in.size(); ++i) {
        const MatD& u = in[i];
        CHECK(member(MatD(u + in[(i + 1) % in.size()]), K));
        const MatD x = rng.matrix(A.division(), A.ell(), A.ell());
        CHECK(member(mul(mul(A.sigma(x), u), x), K));
        CHECK(member(scale(u, rng.positive_at(A.field(), K.P)), K));
        if (!is_zero_matrix(u)) CHECK_FALSE(member(MatD(-u), K));
      }
      const MatD w = m_P(A, K.P).witness;
      CHECK(member(w, K) != member(MatD(-w), K));
    }
  }
}

TEST_CASE("scaling cones") {
  const auto A = mt(split(), 2);
  const PositiveCone K{A, P0(), 1};
  CHECK(scale_cone(A.identity(), K) == K);
  CHECK(scale_cone(A.scalar(-1), K) == PositiveCone{A, P0(), -1});
  CHECK(scale_cone(A.scalar(3), PositiveCone{A, P0(), -1}).eps == -1);

  const MatD a = M({{1, 0}, {0, -1}});
  const auto aK = scale_cone(a, K);
  CHECK(aK.algebra.phi() == a);
  CHECK(aK.eps == 1);
  Sampler rng(73);
  int checked = 0;
  for (int s = 0; s < 50; ++s) {
    const MatD u = rng.symmetric(A);
    const MatD au = mul(a, u);
    CHECK(aK.algebra.is_symmetric(au));
    CHECK(member(au, aK) == member(u, K));
    ++checked;
  }
  CHECK(checked == 50);
  CHECK_THROWS_AS(scale_cone(M({{1, 0}, {0, 0}}), K), Error);
}

TEST_CASE("cone samples and properness") {
  const auto A = mt(split(), 2);
  const auto s1 = gen_cone_sample(A, {A.identity()}, P0(), 40, 5);
  CHECK(s1.elements.size() == 40);
  CHECK_FALSE(properness_check(s1).has_value());
  for (const auto& u : s1.elements) CHECK(member(u, {A, P0(), 1}));

  const auto s2 = gen_cone_sample(A, {M({{1, 0}, {0, -1}})}, P0(), 20, 5);
  const auto w = properness_check(s2);
  REQUIRE(w.has_value());
  CHECK_FALSE(is_zero_matrix(*w));

  const auto tw = AlgebraWithInvolution(split(), 2, M({{1, 0}, {0, -1}}));
  CHECK_FALSE(properness_check(gen_cone_sample(tw, {tw.phi()}, P0(), 30, 6)).has_value());

  const auto B = mt(split(), 1);
  CHECK_FALSE(properness_check(gen_cone_sample(B, {M({{1}})}, P0(), 30, 7)).has_value());
  CHECK(gen_cone_sample(A, {}, P0(), 10, 1).elements.empty());
  CHECK(gen_cone_sample(A, {A.identity()}, P0(), 10, 9).elements ==
        gen_cone_sample(A, {A.identity()}, P0(), 10, 9).elements);
}

TEST_CASE("positive involutions") {
  const auto A = mt(split(), 3);
  const auto pi = positive_involution_at(A, P0());
  CHECK(pi.b == A.identity());
  CHECK(pi.tau == A);

  const auto tw = AlgebraWithInvolution(split(), 2, M({{1, 0}, {0, -1}}));
  const auto pt = positive_involution_at(tw, P0());
  CHECK(pt.b == M({{1, 0}, {0, -1}}));
  CHECK(is_positive_involution(tw, pt.b, P0()));
  CHECK(pt.tau.phi() == tw.identity());

  for (const auto& z : zoo()) {
    for (auto P : x_tilde(z.algebra)) {
      const auto p = positive_involution_at(z.algebra, P);
      CHECK(is_positive_involution(z.algebra, p.b, P));
      CHECK(p.tau.phi() == mul(p.b, z.algebra.phi()));
    }
  }
  try {
    (void)positive_involution_at(mt(quat2(), 1), P1());
    FAIL("nil ordering accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NilOrdering);
  }
}

TEST_CASE("formal reality and Harrison sets") {
  CHECK(formally_real(mt(split(), 2)));
  CHECK(formally_real(mt(quat2(), 1)));
  for (const auto& z : zoo()) CHECK(formally_real(z.algebra));

  const auto A = mt(split(), 2);
  CHECK(harrison_sigma(A, {}).size() == 2);
  CHECK(harrison_sigma(A, {A.zero()}).size() == 2);
  CHECK(harrison_sigma(A, {A.identity(), A.scalar(-1)}).empty());
  const auto h = harrison_sigma(A, {A.identity()});
  REQUIRE(h.size() == 1);
  CHECK(h[0] == PositiveCone{A, P0(), 1});

  const auto B = mt(quad2(), 1);
  for (const auto& K : harrison_sigma(B, {one(DElem(sqrt2()))})) CHECK(sign_at(sqrt2(), K.P) == K.eps);
}

TEST_CASE("maximality on sets of orderings") {
  const auto A = mt(split(), 2);
  CHECK(is_maximal_on(A, M({{1, 0}, {0, 3}}), {P0()}));
  CHECK_FALSE(is_maximal_on(A, M({{1, 0}, {0, -1}}), {P0()}));
  CHECK(is_maximal_on(A, A.scalar(-1), {}));

  const auto Q4 = mt(quat2(), 1);
  try {
    (void)is_maximal_on(Q4, Q4.identity(), {P0(), P1()});
    FAIL("nil ordering accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderingNotInXTilde);
  }

  Sampler rng(74);
  for (const auto& z : zoo()) {
    const auto Y = x_tilde(z.algebra);
    for (int s = 0; s < 10; ++s) {
      MatD u = rng.symmetric(z.algebra);
      if (is_zero_matrix(u)) continue;
      CHECK(max_q_check(z.algebra, u, Y).consistent());
    }
    CHECK(max_q_check(z.algebra, z.algebra.phi(), Y).maximal);
  }
  try {
    (void)max_q_check(A, A.zero(), {P0()});
    FAIL("zero accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroArgument);
  }
}
