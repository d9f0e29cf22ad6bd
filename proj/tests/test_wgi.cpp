#include "helpers.hpp"

#include "ginv/classical.hpp"
#include "ginv/fuzz.hpp"
#include "ginv/wgi.hpp"

using namespace ginv;
using namespace testing;

namespace {

ComplexMatrix random_index(std::uint64_t seed, std::size_t n, std::size_t k) {
  fuzz::Rng rng(seed);
  return fuzz::make_case(rng, n, k).a;
}

bool all_pass(const VerificationReport& r) {
  for (const auto& [name, c] : r.checks) {
    CAPTURE(name);
    CAPTURE(c.residual);
    CHECK(c.pass);
  }
  return r.overall;
}

}  // namespace

TEST_CASE("route names round-trip") {
  for (Route r : {Route::CoreEP, Route::PowerReduction, Route::NormalEquation, Route::DrazinSolve, Route::Recursive,
                  Route::CoreOfDrazin, Route::CoreChain, Route::RegularLift})
    CHECK(parse_route(route_name(r)) == r);
  CHECK_THROWS_AS(parse_route("nope"), std::invalid_argument);
}

TEST_CASE("m must be positive") {
  CHECK_THROWS_AS(mwgi(eye(2), 0, kTol), std::invalid_argument);
  CHECK_THROWS_AS(mwgi_via_power(eye(2), 0, kTol), std::invalid_argument);
  CHECK_THROWS_AS(verify_definition(eye(2), eye(2), 0, kTol), std::invalid_argument);
}

TEST_CASE("mwgi examples") {
  for (unsigned m : {1u, 2u, 3u}) {
    CHECK(close(mwgi(eye(3), m, kTol).z, eye(3)));
    CHECK(mwgi(jordan(2), m, kTol).z.frobenius() <= 1e-14);
  }
  // Z = A for an idempotent, confirmed by the defining equations
  const auto z = mwgi(idem2(), 1, kTol);
  CHECK(close(z.z, idem2()));
  CHECK(verify_definition(idem2(), idem2(), 1, kTol).overall);
  CHECK(z.k == 1);
  CHECK(z.form_gap <= 1e-12);
}

TEST_CASE("route examples on trivial inputs") {
  CHECK(close(mwgi_via_power(eye(2), 3, kTol), eye(2)));
  CHECK(mwgi_via_power(jordan(2), 2, kTol).frobenius() <= 1e-14);
  CHECK(close(mwgi_normal_equation(eye(2), 1, kTol), eye(2)));
  CHECK(mwgi_normal_equation(jordan(3), 2, kTol).frobenius() <= 1e-14);
  CHECK(close(mwgi_drazin_solve(eye(2), 1, kTol), eye(2)));
  CHECK(mwgi_drazin_solve(jordan(2), 1, kTol).frobenius() <= 1e-14);
  CHECK(close(mwgi_step(eye(2), eye(2)), eye(2)));
  CHECK(mwgi_step(jordan(2), zeros(2)) == zeros(2));
  CHECK(close(mwgi_core_of_drazin(eye(2), 1, kTol), eye(2)));
  for (unsigned m : {1u, 2u, 3u}) CHECK(mwgi_core_of_drazin(jordan(3), m, kTol).frobenius() <= 1e-14);
  CHECK(close(mwgi_core_chain(eye(2), 1, kTol), eye(2)));
  fuzz::Rng rng(8);
  const auto u = fuzz::random_unitary(rng, 3);
  CHECK(close(mwgi_core_chain(u, 1, kTol), conj_transpose(u)));
  CHECK(close(mwgi_regular_lift(eye(2), 1, kTol), eye(2)));
  CHECK(mwgi_regular_lift(jordan(2), 1, kTol).frobenius() <= 1e-14);
  CHECK_THROWS_AS(mwgi_by_route(eye(2), 1, Route::RegularLift, kTol), std::invalid_argument);
}

TEST_CASE("routes agree with the canonical form on random inputs") {
  const double eps = kTol.eq_rtol;
  const auto a4 = random_index(101, 4, 2);
  CHECK(relative_residual(mwgi_via_power(a4, 2, kTol), mwgi(a4, 2, kTol).z) <= eps);
  CHECK(relative_residual(mwgi_core_of_drazin(a4, 2, kTol), mwgi(a4, 2, kTol).z) <= eps);
  CHECK(relative_residual(mwgi_core_chain(a4, 1, kTol), mwgi(a4, 1, kTol).z) <= eps);
  CHECK(relative_residual(mwgi_regular_lift(a4, 1, kTol), mwgi(a4, 2, kTol).z) <= eps);
  CHECK(relative_residual(mwgi_step(a4, mwgi(a4, 1, kTol).z), mwgi(a4, 2, kTol).z) <= eps);
  const auto a5 = random_index(102, 5, 2);
  CHECK(relative_residual(mwgi_normal_equation(a5, 1, kTol), mwgi(a5, 1, kTol).z) <= eps);
  const auto a3 = random_index(103, 3, 1);
  CHECK(relative_residual(mwgi_drazin_solve(a3, 2, kTol), mwgi(a3, 2, kTol).z) <= eps);
}

TEST_CASE("regular lift accepts any inner inverse") {
  const auto a = random_index(104, 4, 2);
  fuzz::Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    const auto g = fuzz::random_inner_inverse(rng, a, kTol);
    CHECK(relative_residual(a * g * a, a, factor_scale({a, g, a})) <= 1e-8);
    CHECK(relative_residual(mwgi_regular_lift(a, 1, g, kTol), mwgi(a, 2, kTol).z) <= 1e-8);
  }
}

TEST_CASE("verify_definition examples") {
  CHECK(all_pass(verify_definition(eye(2), eye(2), 1, kTol)));
  CHECK(all_pass(verify_definition(jordan(2), zeros(2), 1, kTol)));
  const auto rep = verify_definition(eye(2), Complex(2.0) * eye(2), 1, kTol);
  CHECK_FALSE(rep.overall);
  CHECK_FALSE(rep.passed("ax2"));
  CHECK_THROWS_AS(verify_definition(eye(2), eye(3), 1, kTol), ShapeError);
}

TEST_CASE("core-EP system") {
  const auto a = random_index(105, 5, 3);
  for (unsigned m : {1u, 2u}) {
    const auto rep = verify_core_ep_system(a, mwgi(a, m, kTol).z, m, kTol);
    CHECK(all_pass(rep));
  }
  CHECK_FALSE(verify_core_ep_system(a, Complex(2.0) * mwgi(a, 1, kTol).z, 1, kTol).overall);
}

TEST_CASE("group_decomposition examples") {
  auto d = group_decomposition(eye(2), 1, kTol);
  CHECK(close(d.x, eye(2)));
  CHECK(d.y.frobenius() <= 1e-14);
  d = group_decomposition(jordan(2), 1, kTol);
  CHECK(d.x.frobenius() <= 1e-14);
  CHECK(close(d.y, jordan(2)));
  d = group_decomposition(one_plus_j2(), 1, kTol);
  CHECK(close(d.x, diag({1.0, 0.0, 0.0})));
  CHECK(close(d.y, ComplexMatrix{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}}));
  CHECK(all_pass(decomposition_report(one_plus_j2(), 1, d, kTol)));
}

TEST_CASE("polar_idempotent examples") {
  auto pd = polar_idempotent(eye(2), 1, kTol);
  CHECK(pd.p.frobenius() <= 1e-14);
  CHECK(all_pass(polar_report(eye(2), 1, pd, kTol)));
  pd = polar_idempotent(jordan(2), 1, kTol);
  CHECK(close(pd.p, eye(2)));
  CHECK(all_pass(polar_report(jordan(2), 1, pd, kTol)));
  CHECK(numerical_rank(jordan(2) + pd.p, kTol) == 2);
  pd = polar_idempotent(one_plus_j2(), 1, kTol);
  CHECK(close(pd.p, diag({0.0, 1.0, 1.0})));
  CHECK(all_pass(polar_report(one_plus_j2(), 1, pd, kTol)));
}

TEST_CASE("characterization reports on trivial inputs") {
  CHECK(all_pass(b_characterization(eye(2), 1, kTol)));
  CHECK(all_pass(b_characterization(jordan(2), 1, kTol)));
  CHECK(all_pass(b_characterization(random_index(106, 4, 2), 2, kTol)));
  CHECK(all_pass(bc_inverse_check(eye(2), 1, kTol)));
  CHECK(all_pass(bc_inverse_check(jordan(2), 1, kTol)));
  CHECK(all_pass(bc_inverse_check(random_index(107, 5, 2), 1, kTol)));
  CHECK(all_pass(outer_inverse_subspaces(eye(3), 2, kTol)));
  CHECK(all_pass(outer_inverse_subspaces(jordan(2), 1, kTol)));
  CHECK(all_pass(outer_inverse_subspaces(one_plus_j2(), 1, kTol)));
}

TEST_CASE("additive_mwgi examples") {
  const auto i2z = diag({1.0, 1.0, 0.0, 0.0});
  const auto zi2 = diag({0.0, 0.0, 1.0, 1.0});
  CHECK(close(additive_mwgi(i2z, zi2, 1, kTol), eye(4)));

  const ComplexMatrix a{{1.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}};
  const ComplexMatrix b{{0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 0.0, 0.0}};
  const auto sum = additive_mwgi(a, b, 1, kTol);
  CHECK(close(sum, mwgi(a, 1, kTol).z));
  CHECK(close(sum, mwgi(a + b, 1, kTol).z));

  CHECK_THROWS_AS(additive_mwgi(eye(2), eye(2), 1, kTol), OrthogonalityViolation);
}

TEST_CASE("property: definition and characterizations on the fuzz corpus") {
  for (const auto& c : fuzz::corpus(31, 40)) {
    for (unsigned m : {1u, 2u, 3u}) {
      CAPTURE(c.n);
      CAPTURE(c.k);
      CAPTURE(m);
      const auto res = mwgi(c.a, m, kTol);
      CHECK(res.k == c.k);
      CHECK(res.form_gap <= 1e-8);
      CHECK(all_pass(verify_definition(c.a, res.z, m, kTol)));
      CHECK(all_pass(decomposition_report(c.a, m, group_decomposition(c.a, m, kTol), kTol)));
      CHECK(all_pass(polar_report(c.a, m, polar_idempotent(c.a, m, kTol), kTol)));
      CHECK(all_pass(b_characterization(c.a, m, kTol)));
      CHECK(all_pass(bc_inverse_check(c.a, m, kTol)));
      CHECK(all_pass(outer_inverse_subspaces(c.a, m, kTol)));
    }
  }
}

TEST_CASE("property: all routes agree on well-conditioned inputs") {
  // Routes through A^m lose about cond^m digits, so this is the algebraic
  // check; the full corpus is covered by the acceptance run.
  fuzz::GeneratorConfig cfg;
  cfg.max_core_condition = 10.0;
  for (const auto& c : fuzz::corpus(30, 60, cfg))
    for (unsigned m : {1u, 2u, 3u}) {
      CAPTURE(c.n);
      CAPTURE(c.k);
      CAPTURE(m);
      CHECK(all_pass(route_agreement(c.a, m, kTol)));
    }
}

TEST_CASE("property: Z^m equals mwgi(A^m, 1) and Z^2 A equals mwgi(A, m + 1)") {
  for (const auto& c : fuzz::corpus(32, 40)) {
    for (unsigned m : {1u, 2u}) {
      const auto z = mwgi(c.a, m, kTol).z;
      CHECK(relative_residual(z.pow(m), mwgi(c.a.pow(m), 1, kTol).z) <= 1e-8);
      CHECK(relative_residual(z * z * c.a, mwgi(c.a, m + 1, kTol).z) <= 1e-8);
    }
  }
}

TEST_CASE("property: the solution of the defining system is unique") {
  // Any X with A X^2 = X, X A^{k+1} = A^k and the weighted equation equals Z.
  // Perturbing Z inside its own range breaks at least one equation.
  fuzz::Rng rng(33);
  for (const auto& c : fuzz::corpus(34, 20)) {
    if (c.k == 0) continue;
    const auto z = mwgi(c.a, 1, kTol).z;
    const auto w = z + Complex(1e-3) * z * fuzz::random_matrix(rng, c.n, c.n);
    if (relative_residual(w, z) <= 1e-6) continue;
    CHECK_FALSE(verify_definition(c.a, w, 1, kTol).overall);
  }
}

TEST_CASE("index-1 collapse: mwgi is the group inverse") {
  fuzz::Rng rng(35);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto k = static_cast<std::size_t>(rng.integer(0, 1));
    const auto a = fuzz::make_case(rng, n, k).a;
    const auto g = group_inverse(a, kTol);
    for (unsigned m : {1u, 2u, 3u}) CHECK(relative_residual(mwgi(a, m, kTol).z, g) <= 1e-8);
    CHECK(group_decomposition(a, 1, kTol).y.frobenius() <= 1e-10);
  }
}
