#pragma once

// m-weak group inverse (equivalently, in C^{n x n}, the m-generalized right
// group inverse): the canonical core-EP representation, six further routes to
// the same matrix, and verifiers for each characterization of it.
//
// Over C^{n x n} the one-sided ("right") notions coincide with their two-sided
// counterparts: right invertible means invertible, quasinilpotent means
// nilpotent, and every limit condition lim ||.||^{1/n} = 0 becomes an exact
// equation at n = index. Genuinely one-sided behavior lives in shiftlab.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "ginv/matcore.hpp"
#include "ginv/report.hpp"

namespace ginv {

enum class Route {
  CoreEP,
  PowerReduction,
  NormalEquation,
  DrazinSolve,
  Recursive,
  CoreOfDrazin,
  CoreChain,
  RegularLift,
};

std::string route_name(Route r);
/// Inverse of route_name; throws std::invalid_argument on unknown names.
Route parse_route(const std::string& name);

struct MwgiResult {
  ComplexMatrix z;
  unsigned m = 1;
  std::size_t k = 0;
  Route route = Route::CoreEP;
  /// Relative gap between (A^D)^{m+1} A A^(+) A^m and (A^D A A^(+))^{m+1} A^m.
  double form_gap = 0.0;
};

class OrthogonalityViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Z = (A^D)^{m+1} A A^(+) A^m, with A^(+) the core-EP inverse.
MwgiResult mwgi(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// A^{m-1} mwgi(A^m, 1).
ComplexMatrix mwgi_via_power(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// (A^D)^{m+1} x where x = Q^+ A^m, Q = A A^D, solves Q* Q x = Q* A^m.
ComplexMatrix mwgi_normal_equation(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// (A^D)^{m+2} x where x = (A^D)^+ A^m.
ComplexMatrix mwgi_drazin_solve(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// Zm^2 A. Maps mwgi(A, m) to mwgi(A, m+1); no precondition check.
ComplexMatrix mwgi_step(const ComplexMatrix& a, const ComplexMatrix& zm);

/// (A^D)^{m+2} core_inverse(A^D) A^m.
ComplexMatrix mwgi_core_of_drazin(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// core_inverse(A^{m+1} A^(+)); equals (A^(+))^m.
ComplexMatrix core_chain_inner(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// [A^D A^m C]^{m+1} A^m with C = core_chain_inner(A, m).
/// Propagates NoCoreInverse if A^{m+1} A^(+) is judged to have index >= 2.
ComplexMatrix mwgi_core_chain(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// [mwgi(A^2 G, m)]^2 A for the inner inverse G = A^+. Equals mwgi(A, m+1).
ComplexMatrix mwgi_regular_lift(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// Same, with a caller-supplied inner inverse (A G A = A is not re-checked).
ComplexMatrix mwgi_regular_lift(const ComplexMatrix& a, unsigned m, const ComplexMatrix& inner,
                                const TolerancePolicy& tol);

/// mwgi(A, m) computed along the named route. RegularLift needs m >= 2 and
/// evaluates mwgi_regular_lift(A, m-1); Recursive starts from mwgi(A, 1) and
/// applies mwgi_step m-1 times.
ComplexMatrix mwgi_by_route(const ComplexMatrix& a, unsigned m, Route route, const TolerancePolicy& tol);

/// Pairwise relative Frobenius gaps between every route's mwgi(A, m).
/// One check per route (its worst gap to any other route). For m = 1 the
/// regular-lift check compares mwgi_regular_lift(A, 1) with mwgi(A, 2) instead.
VerificationReport route_agreement(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// Defining equations of Z as the m-weak group inverse of A.
///
/// Checks: ax2, right_def, wgm_k, hermitian, core_ep_form, limit, idempotents.
VerificationReport verify_definition(const ComplexMatrix& a, const ComplexMatrix& z, unsigned m,
                                     const TolerancePolicy& tol);

/// X = A X^2 and A X = (A^D A A^(+))^m A^m; mwgi(A, m) is the only solution.
VerificationReport verify_core_ep_system(const ComplexMatrix& a, const ComplexMatrix& x, unsigned m,
                                         const TolerancePolicy& tol);

/// A = X + Y with X* A^{m-1} Y = Y X = 0, X group invertible, Y nilpotent.
struct GroupDecomposition {
  ComplexMatrix x;
  ComplexMatrix y;
};

/// X = A^2 Z, Y = A - A^2 Z with Z = mwgi(A, m).
GroupDecomposition group_decomposition(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// Checks: sum, orth, yx, x_index, x_nonzero, y_nil, group_x.
VerificationReport decomposition_report(const ComplexMatrix& a, unsigned m, const GroupDecomposition& d,
                                        const TolerancePolicy& tol);

struct PolarData {
  ComplexMatrix p;
  /// (I-p) Z (I-p): right inverse of (I-p) A (I-p) inside the corner (I-p) C^{nxn} (I-p).
  ComplexMatrix corner_inverse;
};

/// p = I - A mwgi(A, m).
PolarData polar_idempotent(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// Checks: idempotent, hermitian, ap_nil, corner, corner_range, a_plus_p.
/// Right invertibility in C^{nxn} is tested as full rank (right invertible
/// and invertible coincide for square matrices).
VerificationReport polar_report(const ComplexMatrix& a, unsigned m, const PolarData& pd,
                                const TolerancePolicy& tol);

/// With b = mwgi(A, m): bab, a2b2, herm, range, qnil.
VerificationReport b_characterization(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// (b, c)-inverse conditions for b0 = (A^D)^{m+1} A^m, c0 = A^D A A^(+) A^m:
/// xab, cax, memb_col, memb_row.
VerificationReport bc_inverse_check(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// Z as the outer inverse with range col((A^D)^{m+1} A^m) and kernel
/// null(A^(+) A^m): outer, range_eq, kernel_eq.
VerificationReport outer_inverse_subspaces(const ComplexMatrix& a, unsigned m, const TolerancePolicy& tol);

/// mwgi(A, m) + mwgi(B, m). Requires AB = BA = A*B = 0 to eq_rtol,
/// otherwise throws OrthogonalityViolation.
ComplexMatrix additive_mwgi(const ComplexMatrix& a, const ComplexMatrix& b, unsigned m,
                            const TolerancePolicy& tol);

}  // namespace ginv
