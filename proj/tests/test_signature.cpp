#include "support.hpp"

using namespace t;

TEST_CASE("signature examples") {
  for (int n = 1; n <= 3; ++n) {
    const auto A = mt(split(), n);
    CHECK(sign_eta(diag_sigma(A, {A.identity()}), P0()) == n);
  }
  const auto A = mt(quat2(), 2);
  Sampler rng(61);
  const MatD a = rng.symmetric_invertible(A);
  for (auto P : orderings(Q2())) CHECK(sign_eta(diag_sigma(A, {a, MatD(-a)}), P) == 0);
  const auto H = mt(hamilton(), 1);
  CHECK(sign_eta(diag_sigma(H, {H.identity()}), P0()) == 1);
  // nil orderings carry no signature
  CHECK(sign_eta(diag_sigma(mt(quat2(), 1), {M({{1}})}), P1()) == 0);
}

TEST_CASE("maximal signature and its witness") {
  for (int n = 1; n <= 3; ++n) {
    const auto A = mt(split(), n);
    const auto m = m_P(A, P0());
    CHECK(m.value == n);
    CHECK(m.witness == A.identity());
  }
  const auto tw = AlgebraWithInvolution(split(), 2, M({{1, 0}, {0, -1}}));
  const auto mt2 = m_P(tw, P0());
  CHECK(mt2.witness == M({{1, 0}, {0, -1}}));
  CHECK(sign_eta(diag_sigma(tw, {mt2.witness}), P0()) == 2);

  const auto H2 = mt(hamilton(), 2);
  const auto mh = m_P(H2, P0());
  CHECK(mh.witness == H2.identity());
  CHECK(mh.value == 2);

  try {
    (void)m_P(mt(quat2(), 1), P1());
    FAIL("nil ordering accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NilOrdering);
  }
}

TEST_CASE("membership in M_P") {
  const auto A = mt(split(), 2);
  const MatD w = m_P(A, P0()).witness;
  CHECK(in_M_P(A, w, P0()));
  CHECK_FALSE(in_M_P(A, MatD(-w), P0()));
  CHECK(in_M_P(A, M({{1, 0}, {0, 2}}), P0()));
  CHECK_FALSE(in_M_P(A, M({{1, 0}, {0, -1}}), P0()));
  CHECK(in_M_P(A, A.zero(), P0()));
  CHECK_THROWS_AS(in_M_P(A, M({{1, 0}, {0, 0}}), P0()), Error);
}

TEST_CASE("M_P is closed under sums and congruences") {
  Sampler rng(62);
  for (const auto& z : zoo()) {
    const auto& A = z.algebra;
    for (auto P : x_tilde(A)) {
      std::vector<MatD> members;
      for (int s = 0; s < 60 && members.size() < 8; ++s) {
        const MatD a = rng.symmetric_invertible(A);
        if (in_M_P(A, a, P)) members.push_back(a);
      }
      members.push_back(m_P(A, P).witness);
      for (size_t i = 0; i < members.size(); ++i) {
        const MatD sum = members[i] + members[(i + 1) % members.size()];
        if (is_invertible(sum)) CHECK(in_M_P(A, sum, P));
        const MatD x = rng.invertible(A.division(), A.ell());
        CHECK(in_M_P(A, mul(mul(A.sigma(x), members[i]), x), P));
      }
    }
  }
}

TEST_CASE("eta-maximal elements") {
  const auto A = mt(split(), 2);
  CHECK(eta_maximal(A, A.zero(), P0()));
  CHECK(eta_maximal(A, M({{1, 0}, {0, 0}}), P0()));
  CHECK_FALSE(eta_maximal(A, M({{1, 0}, {0, -1}}), P0()));
  for (const auto& z : zoo()) {
    for (auto P : x_tilde(z.algebra)) CHECK(eta_maximal(z.algebra, z.algebra.phi(), P));
  }
}

TEST_CASE("pre-Sylvester examples") {
  for (int ell = 1; ell <= 3; ++ell) {
    const auto A = mt(split(), ell);
    const auto d = pre_sylvester(diag_sigma(A, {A.identity()}), P0());
    CHECK(d.r == ell * ell);
    CHECK(d.s == 0);
    CHECK(d.t == 1);
    CHECK(d.betas == std::vector<FieldElem>{1});
  }
  const auto A2 = mt(split(), 2);
  const auto d2 = pre_sylvester(diag_sigma(A2, {M({{1, 0}, {0, -1}})}), P0());
  CHECK(d2.r == 2);
  CHECK(d2.s == 2);
  CHECK(d2.pos_entries == std::vector<MatD>{A2.identity(), A2.identity()});
  CHECK(d2.neg_entries == std::vector<MatD>{A2.scalar(-1), A2.scalar(-1)});

  const auto H2 = mt(hamilton(), 2);
  const auto dh = pre_sylvester(diag_sigma(H2, {M({{1, 0}, {0, 2}})}), P0());
  CHECK(dh.r == 4);
  CHECK(dh.s == 0);

  try {
    (void)pre_sylvester(diag_sigma(A2, {M({{1, 0}, {0, 0}})}), P0());
    FAIL("singular form accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Singular);
  }
  try {
    (void)pre_sylvester(diag_sigma(mt(quat2(), 1), {M({{1}})}), P1());
    FAIL("nil ordering accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NilOrdering);
  }
}

TEST_CASE("inertia and agreement of the two signature routes") {
  Sampler rng(63);
  for (const auto& z : zoo()) {
    const auto& A = z.algebra;
    for (int s = 0; s < 15; ++s) {
      const HermitianForm h = rng.nonsingular_form(A, rng.integer(1, 2));
      for (auto P : x_tilde(A)) {
        const auto a = pre_sylvester(h, P, PivotStrategy::first);
        const auto b = pre_sylvester(h, P, PivotStrategy::last);
        CHECK(a.r == b.r);
        CHECK(a.s == b.s);
        for (int eps : {1, -1}) {
          const PositiveCone K{A, P, eps};
          CHECK(sylvester_sign(a, K) == eps * sign_eta(h, P));
          CHECK(sign_cone(h, K) == eps * sign_eta(h, P));
        }
      }
    }
  }
}

TEST_CASE("signature of a form at a cone") {
  const auto A = mt(split(), 2);
  const HermitianForm I2 = diag_sigma(A, {A.identity()});
  CHECK(sign_cone(I2, {A, P0(), 1}) == 2);
  CHECK(sign_cone(I2, {A, P0(), -1}) == -2);
  CHECK(sign_cone(diag_sigma(A, {M({{1, 2}, {2, 1}}), M({{-1, -2}, {-2, -1}})}), {A, P0(), 1}) == 0);
  // singular forms go through their nonsingular part
  CHECK(sign_cone(diag_sigma(A, {M({{1, 0}, {0, 0}})}), {A, P0(), 1}) == 1);
}

TEST_CASE("signature laws on random forms") {
  Sampler rng(64);
  for (const auto& z : zoo()) {
    const auto& A = z.algebra;
    for (int s = 0; s < 15; ++s) {
      const HermitianForm h1 = rng.form(A, rng.integer(1, 2));
      const HermitianForm h2 = rng.form(A, 1);
      const MatD a = rng.symmetric_invertible(A);
      const QuadraticFormF q = rng.quadratic_form(A.field(), 2);
      for (auto P : orderings(A.field())) {
        const int s1 = sign_eta(h1, P);
        CHECK(sign_eta(direct_sum(h1, diag_sigma(A, {a, MatD(-a)})), P) == s1);
        CHECK(sign_eta(direct_sum(h1, h2), P) == s1 + sign_eta(h2, P));
        CHECK(sign_eta(tensor(q, h1), P) == q.signature(P) * s1);
        CHECK(std::abs(sign_eta(diag_sigma(A, {a}), P)) <= classify(A, P).n_P);
        CHECK(sign_eta(h1, P, PivotStrategy::first) == sign_eta(h1, P, PivotStrategy::last));
      }
    }
  }
}

TEST_CASE("trace forms") {
  // Trd(X^t X) = sum x_ij^2
  for (int n = 1; n <= 3; ++n) {
    const auto A = mt(split(), n);
    const auto q = trace_form(A, A.identity());
    CHECK(q.entries == std::vector<FieldElem>(static_cast<size_t>(n * n), FieldElem(1)));
    CHECK(is_positive_involution(A, A.identity(), P0()));
  }
  // Trd(conj(x) x) = 2 Nrd(x) = 2 (x0^2 + x1^2 + x2^2 + x3^2)
  const auto H = mt(hamilton(), 1);
  CHECK(trace_form(H, H.identity()).entries == std::vector<FieldElem>(4, FieldElem(2)));
  CHECK(is_positive_involution(H, H.identity(), P0()));

  const auto tw = AlgebraWithInvolution(split(), 2, M({{1, 0}, {0, -1}}));
  const auto q = trace_form(tw, tw.identity());
  CHECK_FALSE(trace_form_is_psd(q, P0()));
  CHECK_FALSE(is_positive_involution(tw, tw.identity(), P0()));
  CHECK(is_positive_involution(tw, M({{1, 0}, {0, -1}}), P0()));

  const auto Q4 = mt(quat2(), 1);
  CHECK(is_positive_involution(Q4, Q4.identity(), P0()));
  CHECK_FALSE(is_positive_involution(Q4, Q4.identity(), P1()));
  CHECK_THROWS_AS(trace_form(tw, M({{0, 1}, {1, 0}})), Error);
}
