#include "ginv/wgi.hpp"

#include <algorithm>
#include <utility>
#include <vector>
#include <array>
#include <cmath>

#include "ginv/classical.hpp"

namespace ginv {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.square())
    throw ShapeError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + ", expected square");
}

void require_m(unsigned m) {
  if (m == 0) throw std::invalid_argument("m must be a positive integer");
}

ComplexMatrix eye_like(const ComplexMatrix& a) { return ComplexMatrix::identity(a.rows()); }

ComplexMatrix zero_like(const ComplexMatrix& a) { return ComplexMatrix::zero(a.rows(), a.cols()); }

// ||M^n||_F <= nil_atol * max(1, ||M||_F)^n with n = rows(M). Returns the
// scaled residual ||M^n|| / max(1, ||M||)^n.
double nilpotency_residual(const ComplexMatrix& m) {
  const auto n = static_cast<unsigned>(m.rows());
  return m.pow(n).frobenius() / std::pow(norm_floor1(m), static_cast<double>(n));
}

double subspace_equality_excess(const ComplexMatrix& u, const ComplexMatrix& v, const TolerancePolicy& tol) {
  return static_cast<double>(col_space_excess(u, v, tol) + col_space_excess(v, u, tol));
}

// Shared inputs for the canonical representation.
struct Ingredients {
  ComplexMatrix d;   // A^D
  ComplexMatrix e;   // core-EP A^(+)
  ComplexMatrix am;  // A^m
  std::size_t k = 0;
};

Ingredients ingredients(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  Ingredients in;
  in.k = index(a, tol).k;
  in.d = drazin(a, tol);
  in.e = core_ep(a, tol);
  in.am = a.pow(m);
  return in;
}

// (A^D)^{m+1} A A^(+) A^m evaluated in the core basis. With A U = U T,
// A^D = U T^{-1} W* (W* U = I) and A A^(+) = U U*, the product collapses to
// U T^{-(m+1)} U* A^m, built as S <- T^{-1} S A so no power of A or T^{-1}
// is ever formed on its own.
ComplexMatrix canonical_form(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  const auto cs = core_subspaces(a, tol);
  const Dense& u = cs.range;
  if (u.cols() == 0) return zero_like(a);
  const Dense t = u.adjoint() * a.dense() * u;
  const auto lu = t.partialPivLu();
  Dense s = u.adjoint();
  for (unsigned j = 0; j < m; ++j) s = lu.solve(Dense(s * a.dense()));
  return ComplexMatrix(Dense(u * lu.solve(s)));
}

}  // namespace

std::string route_name(Route r) {
  switch (r) {
    case Route::CoreEP: return "core-ep";
    case Route::PowerReduction: return "power";
    case Route::NormalEquation: return "normal";
    case Route::DrazinSolve: return "drazin-solve";
    case Route::Recursive: return "recursive";
    case Route::CoreOfDrazin: return "core-of-drazin";
    case Route::CoreChain: return "core-chain";
    case Route::RegularLift: return "regular-lift";
  }
  return "unknown";
}

Route parse_route(const std::string& name) {
  for (auto r : {Route::CoreEP, Route::PowerReduction, Route::NormalEquation, Route::DrazinSolve,
                 Route::Recursive, Route::CoreOfDrazin, Route::CoreChain, Route::RegularLift})
    if (route_name(r) == name) return r;
  throw std::invalid_argument("unknown route '" + name + "'");
}

MwgiResult mwgi(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "mwgi");
  require_m(m);
  const auto in = ingredients(a, m, tol);

  MwgiResult out;
  out.m = m;
  out.k = in.k;
  out.route = Route::CoreEP;
  out.z = canonical_form(a, m, tol);
  const auto inner = in.d * a * in.e;
  const auto second = inner.pow(m + 1) * in.am;
  out.form_gap = relative_residual(out.z, second);
  return out;
}

ComplexMatrix mwgi_via_power(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "mwgi_via_power");
  require_m(m);
  return a.pow(m - 1) * mwgi(a.pow(m), 1, tol).z;
}

ComplexMatrix mwgi_normal_equation(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "mwgi_normal_equation");
  require_m(m);
  const auto d = drazin(a, tol);
  const auto q = a * d;
  const auto x = moore_penrose(q, tol) * a.pow(m);
  return d.pow(m + 1) * x;
}

ComplexMatrix mwgi_drazin_solve(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "mwgi_drazin_solve");
  require_m(m);
  const auto d = drazin(a, tol);
  const auto x = moore_penrose(d, tol) * a.pow(m);
  return d.pow(m + 2) * x;
}

ComplexMatrix mwgi_step(const ComplexMatrix& a, const ComplexMatrix& zm) { return zm * zm * a; }

ComplexMatrix mwgi_core_of_drazin(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "mwgi_core_of_drazin");
  require_m(m);
  const auto d = drazin(a, tol);
  return d.pow(m + 2) * core_inverse(d, tol) * a.pow(m);
}

ComplexMatrix core_chain_inner(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "core_chain_inner");
  require_m(m);
  // A (A (... (A A^(+)))): keeps the small core directions of A^{m+1} intact
  auto b = core_ep(a, tol);
  for (unsigned j = 0; j <= m; ++j) b = a * b;
  return core_inverse(b, tol);
}

ComplexMatrix mwgi_core_chain(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "mwgi_core_chain");
  require_m(m);
  auto amc = core_chain_inner(a, m, tol);
  for (unsigned j = 0; j < m; ++j) amc = a * amc;
  const auto w = drazin(a, tol) * amc;
  auto z = a.pow(m);
  for (unsigned j = 0; j <= m; ++j) z = w * z;
  return z;
}

ComplexMatrix mwgi_regular_lift(const ComplexMatrix& a, unsigned m, const ComplexMatrix& inner,
                                const TolerancePolicy& tol) {
  require_square(a, "mwgi_regular_lift");
  require_m(m);
  const auto w = mwgi(a * a * inner, m, tol).z;
  return w * w * a;
}

ComplexMatrix mwgi_regular_lift(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  return mwgi_regular_lift(a, m, moore_penrose(a, tol), tol);
}

ComplexMatrix mwgi_by_route(const ComplexMatrix& a, unsigned m, Route route, const TolerancePolicy& tol) {
  require_m(m);
  switch (route) {
    case Route::CoreEP: return mwgi(a, m, tol).z;
    case Route::PowerReduction: return mwgi_via_power(a, m, tol);
    case Route::NormalEquation: return mwgi_normal_equation(a, m, tol);
    case Route::DrazinSolve: return mwgi_drazin_solve(a, m, tol);
    case Route::CoreOfDrazin: return mwgi_core_of_drazin(a, m, tol);
    case Route::CoreChain: return mwgi_core_chain(a, m, tol);
    case Route::Recursive: {
      auto z = mwgi(a, 1, tol).z;
      for (unsigned j = 1; j < m; ++j) z = mwgi_step(a, z);
      return z;
    }
    case Route::RegularLift:
      if (m < 2) throw std::invalid_argument("route regular-lift produces mwgi(A, m) only for m >= 2");
      return mwgi_regular_lift(a, m - 1, tol);
  }
  throw std::invalid_argument("unknown route");
}

VerificationReport route_agreement(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_m(m);
  static constexpr Route kRoutes[] = {Route::CoreEP,       Route::PowerReduction, Route::NormalEquation,
                                      Route::DrazinSolve,  Route::Recursive,      Route::CoreOfDrazin,
                                      Route::CoreChain,    Route::RegularLift};
  std::vector<std::pair<Route, ComplexMatrix>> zs;
  for (Route r : kRoutes) {
    if (r == Route::RegularLift && m < 2) continue;
    zs.emplace_back(r, mwgi_by_route(a, m, r, tol));
  }
  VerificationReport rep;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    double worst = 0.0;
    for (std::size_t j = 0; j < zs.size(); ++j)
      if (i != j) worst = std::max(worst, relative_residual(zs[i].second, zs[j].second));
    rep.add_bounded(route_name(zs[i].first), worst, tol.eq_rtol);
  }
  if (m < 2) {
    const auto lifted = mwgi_regular_lift(a, m, tol);
    rep.add_bounded(route_name(Route::RegularLift), relative_residual(lifted, mwgi(a, m + 1, tol).z), tol.eq_rtol);
  }
  return rep;
}

VerificationReport verify_definition(const ComplexMatrix& a, const ComplexMatrix& z, unsigned m,
                                     const TolerancePolicy& tol) {
  require_square(a, "verify_definition");
  require_m(m);
  if (z.rows() != a.rows() || z.cols() != a.cols())
    throw ShapeError("verify_definition: candidate shape differs from A");

  const auto in = ingredients(a, m, tol);
  const auto k = static_cast<unsigned>(in.k);
  const auto am1 = a.pow(m + 1);
  const auto ak = a.pow(k);
  const auto ak1 = a.pow(k + 1);
  const auto q = a * in.d;
  const double bound = tol.eq_rtol;

  VerificationReport rep;
  rep.add_bounded("ax2", relative_residual(z, a * z * z, factor_scale({a, z, z})), bound);

  const auto qa = q.adjoint();
  rep.add_bounded("right_def",
                  relative_residual(qa * am1 * z, qa * in.am, factor_scale({qa, am1, z})), bound);

  const auto aka = ak.adjoint();
  const double wg1 = relative_residual(z * ak1, ak, factor_scale({z, ak1}));
  const double wg2 = relative_residual(aka * am1 * z, aka * in.am, factor_scale({aka, am1, z}));
  rep.add_bounded("wgm_k", std::max(wg1, wg2), bound);

  const auto h = in.am.adjoint() * am1 * z;
  rep.add_bounded("hermitian", relative_residual(h, h.adjoint(), factor_scale({in.am, am1, z})), bound);

  rep.add_bounded("core_ep_form",
                  relative_residual(am1 * z, a * in.e * in.am,
                                    std::max(factor_scale({am1, z}), factor_scale({a, in.e, in.am}))),
                  bound);

  rep.add_bounded("limit", relative_residual(ak, a * z * ak, factor_scale({a, z, ak})), bound);

  const auto az = a * z;
  double idem = 0.0;
  for (unsigned n : {2u, 3u}) {
    const auto an = a.pow(n);
    const auto zn = z.pow(n);
    idem = std::max(idem, relative_residual(az, an * zn, factor_scale({an, zn})));
  }
  rep.add_bounded("idempotents", idem, bound);
  return rep;
}

VerificationReport verify_core_ep_system(const ComplexMatrix& a, const ComplexMatrix& x, unsigned m,
                                         const TolerancePolicy& tol) {
  require_square(a, "verify_core_ep_system");
  require_m(m);
  const auto in = ingredients(a, m, tol);
  const auto inner = (in.d * a * in.e).pow(m);
  VerificationReport rep;
  rep.add_bounded("ax2", relative_residual(x, a * x * x, factor_scale({a, x, x})), tol.eq_rtol);
  rep.add_bounded("ax_form", relative_residual(a * x, inner * in.am, factor_scale({inner, in.am})),
                  tol.eq_rtol);
  return rep;
}

GroupDecomposition group_decomposition(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "group_decomposition");
  const auto z = mwgi(a, m, tol).z;
  // A (A Z): AZ is a projector, so this avoids the cancellation in (A^2) Z.
  auto x = a * (a * z);
  auto y = a - x;
  return {std::move(x), std::move(y)};
}

VerificationReport decomposition_report(const ComplexMatrix& a, unsigned m, const GroupDecomposition& d,
                                        const TolerancePolicy& tol) {
  require_square(a, "decomposition_report");
  require_m(m);
  const auto z = mwgi(a, m, tol).z;
  const auto amm1 = a.pow(m - 1);
  const auto zero = zero_like(a);
  VerificationReport rep;
  rep.add_bounded("sum", relative_residual(a, d.x + d.y), tol.eq_rtol);
  const auto xa = d.x.adjoint();
  rep.add_bounded("orth", relative_residual(xa * amm1 * d.y, zero, factor_scale({xa, amm1, d.y})),
                  tol.eq_rtol);
  rep.add_bounded("yx", relative_residual(d.y * d.x, zero, factor_scale({d.y, d.x})), tol.eq_rtol);

  const auto xk = index(d.x, tol).k;
  rep.add("x_index", xk > 1 ? static_cast<double>(xk - 1) : 0.0, xk <= 1);

  const auto cs = core_subspaces(a, tol);
  const bool a_nilpotent = cs.range.cols() == 0;
  const bool x_zero = d.x.frobenius() <= tol.nil_atol;
  rep.add("x_nonzero", a_nilpotent == x_zero ? 0.0 : 1.0, a_nilpotent == x_zero);

  rep.add_bounded("y_nil", nilpotency_residual(d.y), tol.nil_atol);

  if (xk <= 1) {
    const auto gx = group_inverse(d.x, tol);
    rep.add_bounded("group_x", relative_residual(gx, z), tol.eq_rtol);
  } else {
    rep.add("group_x", 1.0, false);
  }
  return rep;
}

PolarData polar_idempotent(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "polar_idempotent");
  const auto z = mwgi(a, m, tol).z;
  const auto eye = eye_like(a);
  auto p = eye - a * z;
  const auto q = eye - p;
  auto corner = q * z * q;
  return {std::move(p), std::move(corner)};
}

VerificationReport polar_report(const ComplexMatrix& a, unsigned m, const PolarData& pd,
                                const TolerancePolicy& tol) {
  require_square(a, "polar_report");
  require_m(m);
  const auto& p = pd.p;
  const auto q = eye_like(a) - p;
  const auto am = a.pow(m);
  VerificationReport rep;
  rep.add_bounded("idempotent", relative_residual(p * p, p, factor_scale({p, p})), tol.eq_rtol);

  const auto h = am.adjoint() * am * p;
  rep.add_bounded("hermitian", relative_residual(h, h.adjoint(), factor_scale({am, am, p})), tol.eq_rtol);

  rep.add_bounded("ap_nil", nilpotency_residual(a * p), tol.nil_atol);

  const auto qaq = q * a * q;
  rep.add_bounded("corner", relative_residual(qaq * pd.corner_inverse, q, factor_scale({qaq, pd.corner_inverse})),
                  tol.eq_rtol);

  const double excess = subspace_equality_excess(q, a * q, tol);
  rep.add("corner_range", excess, excess == 0.0);

  const auto r = numerical_rank(a + p, tol);
  rep.add("a_plus_p", static_cast<double>(a.rows() - r), r == a.rows());
  return rep;
}

VerificationReport b_characterization(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "b_characterization");
  const auto b = mwgi(a, m, tol).z;
  const auto a2 = a * a;
  const auto b2 = b * b;
  const auto am = a.pow(m);
  const auto am1 = a.pow(m + 1);
  VerificationReport rep;
  rep.add_bounded("bab", relative_residual(b * a * b, b, factor_scale({b, a, b})), tol.eq_rtol);
  rep.add_bounded("a2b2", relative_residual(a2 * b2, a * b, factor_scale({a2, b2})), tol.eq_rtol);
  const auto h = am.adjoint() * am1 * b;
  rep.add_bounded("herm", relative_residual(h, h.adjoint(), factor_scale({am, am1, b})), tol.eq_rtol);
  const double excess = subspace_equality_excess(a * b, a2 * b, tol);
  rep.add("range", excess, excess == 0.0);
  rep.add_bounded("qnil", nilpotency_residual(a - a2 * b), tol.nil_atol);
  return rep;
}

VerificationReport bc_inverse_check(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "bc_inverse_check");
  require_m(m);
  const auto in = ingredients(a, m, tol);
  const auto z = in.d.pow(m + 1) * a * in.e * in.am;
  const auto dm1 = in.d.pow(m + 1);
  const auto b0 = dm1 * in.am;
  const auto c0 = in.d * a * in.e * in.am;
  VerificationReport rep;
  rep.add_bounded("xab", relative_residual(z * a * b0, b0, factor_scale({z, a, b0})), tol.eq_rtol);
  rep.add_bounded("cax", relative_residual(c0 * a * z, c0, factor_scale({c0, a, z})), tol.eq_rtol);
  const auto col = static_cast<double>(col_space_excess(b0, z, tol));
  rep.add("memb_col", col, col == 0.0);
  const auto row = static_cast<double>(col_space_excess(c0.adjoint(), z.adjoint(), tol));
  rep.add("memb_row", row, row == 0.0);
  return rep;
}

VerificationReport outer_inverse_subspaces(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol) {
  require_square(a, "outer_inverse_subspaces");
  require_m(m);
  const auto in = ingredients(a, m, tol);
  const auto z = in.d.pow(m + 1) * a * in.e * in.am;
  const auto range_gen = in.d.pow(m + 1) * in.am;
  const auto kernel_gen = in.e * in.am;
  VerificationReport rep;
  rep.add_bounded("outer", relative_residual(z * a * z, z, factor_scale({z, a, z})), tol.eq_rtol);
  const double r = subspace_equality_excess(z, range_gen, tol);
  rep.add("range_eq", r, r == 0.0);
  // null(Z) = null(K) iff row(Z) = row(K) iff col(Z*) = col(K*).
  const double kexcess = subspace_equality_excess(z.adjoint(), kernel_gen.adjoint(), tol);
  rep.add("kernel_eq", kexcess, kexcess == 0.0);
  return rep;
}

ComplexMatrix additive_mwgi(const ComplexMatrix& a, const ComplexMatrix& b, unsigned m,
                            const TolerancePolicy& tol) {
  require_square(a, "additive_mwgi");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("additive_mwgi: A and B differ in shape");
  const auto zero = zero_like(a);
  const double scale = factor_scale({a, b});
  const std::array<std::pair<const char*, ComplexMatrix>, 3> products{{
      {"AB", a * b},
      {"BA", b * a},
      {"A*B", a.adjoint() * b},
  }};
  for (const auto& [name, prod] : products)
    if (relative_residual(prod, zero, scale) > tol.eq_rtol)
      throw OrthogonalityViolation(std::string("additive_mwgi: ") + name + " is not zero");
  return mwgi(a, m, tol).z + mwgi(b, m, tol).z;
}

}  // namespace ginv
