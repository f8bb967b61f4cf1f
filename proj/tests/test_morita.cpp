#include "support.hpp"

using namespace t;

TEST_CASE("scaling by Phi^-1") {
  const auto T = mt(split(), 2);
  const HermitianForm h = diag_sigma(T, {M({{1, 2}, {2, 3}})});
  CHECK(scale_involution(h) == h);

  const auto A = AlgebraWithInvolution(split(), 2, M({{1, 0}, {0, -1}}));
  CHECK(scale_involution(diag_sigma(A, {A.phi()})) == diag_sigma(T, {T.identity()}));
  CHECK(scale_involution(diag_sigma(A, {M({{2, 0}, {0, 3}})})) == diag_sigma(T, {M({{2, 0}, {0, -3}})}));

  Sampler rng(41);
  for (int s = 0; s < 20; ++s) {
    const MatD a = rng.symmetric(A), b = rng.symmetric(A);
    CHECK(scale_involution(diag_sigma(A, {a, b})) ==
          diag_sigma(T, {mul(A.phi_inv(), a), mul(A.phi_inv(), b)}));
  }
}

TEST_CASE("collapse and expand") {
  const auto T = mt(hamilton(), 2);
  const auto base = T.base_algebra();
  MatD d(2, 2);
  d << DElem(3), DElem(0), DElem(0), DElem(-1);
  const HermitianForm h = diag_sigma(T, {d});
  CHECK(collapse(h) == diag_sigma(base, {M({{3}}), M({{-1}})}));
  CHECK(collapse(diag_sigma(T, {T.identity()})) == copies(diag_sigma(base, {M({{1}})}), 2));
  CHECK(expand(copies(diag_sigma(base, {M({{5}})}), 2), 2) == diag_sigma(T, {T.scalar(5)}));
  CHECK(expand(diag_sigma(mt(split(), 1), {M({{1}}), M({{-1}})}), 2) == diag_sigma(mt(split(), 2), {M({{1, 0}, {0, -1}})}));

  try {
    (void)expand(diag_sigma(base, {M({{1}})}), 2);
    FAIL("odd rank expanded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankNotDivisible);
  }
  const auto A = AlgebraWithInvolution(split(), 2, M({{1, 0}, {0, -1}}));
  try {
    (void)collapse(diag_sigma(A, {A.phi()}));
    FAIL("collapse accepted a twisted form");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidDescriptor);
  }

  Sampler rng(42);
  for (const auto& z : zoo()) {
    const auto U = mt(z.algebra.division(), z.algebra.ell());
    for (int s = 0; s < 10; ++s) {
      const HermitianForm g = rng.form(U, rng.integer(1, 3));
      const HermitianForm c = collapse(g);
      CHECK(c.gram() == g.gram());
      CHECK(c.rank() == g.rank() * U.ell());
      CHECK(expand(c, U.ell()) == g);
    }
  }
}

TEST_CASE("full reduction") {
  const auto A = AlgebraWithInvolution(split(), 2, M({{1, 0}, {0, -1}}));
  CHECK(full_reduction(diag_sigma(A, {A.phi()})) == copies(diag_sigma(mt(split(), 1), {M({{1}})}), 2));
  // (M_n(Q), t): <M> becomes the quadratic form with Gram matrix M
  const auto T3 = mt(split(), 3);
  const MatD m = M({{1, 2, 0}, {2, -1, 4}, {0, 4, 7}});
  const HermitianForm r = full_reduction(diag_sigma(T3, {m}));
  CHECK(r.gram() == m);
  CHECK(r.algebra().ell() == 1);

  Sampler rng(43);
  for (const auto& z : zoo()) {
    const auto& B = z.algebra;
    for (int s = 0; s < 10; ++s) {
      const HermitianForm g = rng.form(B, rng.integer(1, 2));
      const HermitianForm g2 = rng.form(B, 1);
      const QuadraticFormF q = rng.quadratic_form(B.field(), 2);
      CHECK(full_reduction(g).rank() == B.ell() * g.rank());
      CHECK(full_reduction(direct_sum(g, g2)) == direct_sum(full_reduction(g), full_reduction(g2)));
      CHECK(full_reduction(tensor(q, g)) == tensor(q, full_reduction(g)));
    }
  }
}
