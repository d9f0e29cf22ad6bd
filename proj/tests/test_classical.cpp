#include "helpers.hpp"

#include "ginv/classical.hpp"
#include "ginv/fuzz.hpp"

using namespace ginv;
using namespace testing;

TEST_CASE("moore_penrose examples") {
  CHECK(close(moore_penrose(eye(3), kTol), eye(3)));
  CHECK(close(moore_penrose(diag({2.0, 0.0}), kTol), diag({0.5, 0.0})));
  // exact value from the rational oracle
  const ComplexMatrix ones{{1.0, 1.0}, {1.0, 1.0}};
  const auto want = exact::exact_mp(to_exact(ones)).to_complex();
  CHECK(close(want, Complex(0.25) * ones, 0.0));
  CHECK(close(moore_penrose(ones, kTol), want));
  CHECK(moore_penrose(ComplexMatrix::zero(2, 3), kTol) == ComplexMatrix::zero(3, 2));
}

TEST_CASE("index examples") {
  CHECK(index(eye(2), kTol).k == 0);
  CHECK(index(jordan(2), kTol).k == 2);
  const auto r = index(one_plus_j2(), kTol);
  CHECK(r.k == 2);
  CHECK(r.rank_chain == std::vector<std::size_t>{3, 2, 1});
  CHECK(index(zeros(3), kTol).k == 1);
  CHECK(index(jordan(4), kTol).k == 4);
}

TEST_CASE("drazin examples") {
  const ComplexMatrix a{{2.0, 1.0}, {0.0, 3.0}};
  CHECK(close(drazin(a, kTol) * a, eye(2)));
  CHECK(drazin(jordan(2), kTol).frobenius() <= 1e-14);
  CHECK(close(drazin(idem2(), kTol), idem2()));
}

TEST_CASE("group_inverse examples") {
  CHECK(close(group_inverse(eye(2), kTol), eye(2)));
  CHECK_THROWS_AS(group_inverse(jordan(2), kTol), NoGroupInverse);
  CHECK(close(group_inverse(idem2(), kTol), idem2()));
}

TEST_CASE("core_inverse examples") {
  CHECK(close(core_inverse(eye(2), kTol), eye(2)));
  fuzz::Rng rng(5);
  const auto u = fuzz::random_unitary(rng, 3);
  CHECK(close(core_inverse(u, kTol), conj_transpose(u)));
  // exact oracle: A A A^+ for the idempotent [[1,1],[0,0]] is diag(1, 0);
  // [[0.5,0.5],[0,0]] fails (AX)* = AX
  const auto e = to_exact(idem2());
  const auto want = (e * e * exact::exact_mp(e)).to_complex();
  CHECK(close(want, diag({1.0, 0.0}), 0.0));
  const ComplexMatrix half{{0.5, 0.5}, {0.0, 0.0}};
  CHECK_FALSE(approx_equal(conj_transpose(idem2() * half), idem2() * half, kTol));
  CHECK(close(core_inverse(idem2(), kTol), want));
  CHECK_THROWS_AS(core_inverse(jordan(2), kTol), NoCoreInverse);
}

TEST_CASE("core_ep examples") {
  const ComplexMatrix a{{2.0, 1.0}, {0.0, 3.0}};
  CHECK(close(core_ep(a, kTol) * a, eye(2)));
  CHECK(core_ep(jordan(2), kTol).frobenius() <= 1e-14);
  CHECK(close(core_ep(idem2(), kTol), core_inverse(idem2(), kTol)));
  CHECK(close(core_ep(one_plus_j2(), kTol), diag({1.0, 0.0, 0.0})));
}

TEST_CASE("non-square input is rejected") {
  const ComplexMatrix r{{1.0, 2.0}};
  CHECK_THROWS_AS(index(r, kTol), ShapeError);
  CHECK_THROWS_AS(drazin(r, kTol), ShapeError);
  CHECK_THROWS_AS(core_ep(r, kTol), ShapeError);
  CHECK_NOTHROW(moore_penrose(r, kTol));
}

TEST_CASE("property: Penrose equations for random matrices") {
  fuzz::Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    const auto r = static_cast<std::size_t>(rng.integer(1, 5));
    const auto c = static_cast<std::size_t>(rng.integer(1, 5));
    const auto k = static_cast<std::size_t>(rng.integer(1, static_cast<long>(std::min(r, c))));
    const auto a = fuzz::random_matrix(rng, r, k) * fuzz::random_matrix(rng, k, c);
    const auto x = moore_penrose(a, kTol);
    CHECK(approx_equal(a * x * a, a, kTol));
    CHECK(approx_equal(x * a * x, x, kTol));
    CHECK(approx_equal(conj_transpose(a * x), a * x, kTol));
    CHECK(approx_equal(conj_transpose(x * a), x * a, kTol));
  }
}

TEST_CASE("property: Drazin and core-EP equations on the fuzz corpus") {
  for (const auto& c : fuzz::corpus(22, 60)) {
    CAPTURE(c.n);
    CAPTURE(c.k);
    const auto& a = c.a;
    const auto idx = index(a, kTol);
    CHECK(idx.k == c.k);
    const auto k = static_cast<unsigned>(idx.k);
    const auto d = drazin(a, kTol);
    const auto ak = a.pow(k), ak1 = a.pow(k + 1);
    CHECK(relative_residual(a * d, d * a, factor_scale({a, d})) <= 1e-8);
    CHECK(relative_residual(d * a * d, d, factor_scale({d, a, d})) <= 1e-8);
    CHECK(relative_residual(ak1 * d, ak, factor_scale({ak1, d})) <= 1e-8);

    const auto e = core_ep(a, kTol);
    CHECK(relative_residual(a * e * e, e, factor_scale({a, e, e})) <= 1e-8);
    CHECK(relative_residual(conj_transpose(a * e), a * e, factor_scale({a, e})) <= 1e-8);
    CHECK(relative_residual(e * ak1, ak, factor_scale({e, ak1})) <= 1e-8);
  }
}
