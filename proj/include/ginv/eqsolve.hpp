#pragma once

// Solutions of (A A^D)* A^{m+1} X = (A A^D)* A^m B.

#include <optional>

#include "ginv/matcore.hpp"

namespace ginv {

struct EquationSolution {
  ComplexMatrix x;
  bool free_part_used = false;
};

/// ||(AA^D)* A^{m+1} X - (AA^D)* A^m B||_F / max(1, ||(AA^D)* A^m B||_F).
double residual(const ComplexMatrix& a, const ComplexMatrix& b, unsigned m, const ComplexMatrix& x,
                const TolerancePolicy& tol = {});

/// X = Z B + (I - Z A) Y, Z = mwgi(A, m). Every solution has this form.
EquationSolution solve_general(const ComplexMatrix& a, const ComplexMatrix& b, unsigned m,
                               const ComplexMatrix& y, const TolerancePolicy& tol);

/// The unique solution with columns in col(Z): X = Z B.
EquationSolution solve_in_range(const ComplexMatrix& a, const ComplexMatrix& b, unsigned m,
                                const TolerancePolicy& tol);

/// Whether `other` is a solution supported on col(Z) that equals solve_in_range's X.
/// Returns nullopt if `other` is not such a solution (so uniqueness says nothing).
std::optional<bool> same_range_solution(const ComplexMatrix& a, const ComplexMatrix& b, unsigned m,
                                        const ComplexMatrix& other, const TolerancePolicy& tol);

}  // namespace ginv
