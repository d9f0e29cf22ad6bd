#include "ginv/eqsolve.hpp"

#include "ginv/classical.hpp"
#include "ginv/wgi.hpp"

namespace ginv {

namespace {

void require_conformable(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (!a.square()) throw ShapeError(std::string(what) + ": A is not square");
  if (b.rows() != a.rows())
    throw ShapeError(std::string(what) + ": right-hand side has " + std::to_string(b.rows()) +
                     " rows, A has " + std::to_string(a.rows()));
}

}  // namespace

double residual(const ComplexMatrix& a, const ComplexMatrix& b, unsigned m, const ComplexMatrix& x,
                const TolerancePolicy& tol) {
  require_conformable(a, b, "residual");
  if (x.rows() != a.rows() || x.cols() != b.cols())
    throw ShapeError("residual: X must be " + std::to_string(a.rows()) + "x" + std::to_string(b.cols()));
  const auto qa = (a * drazin(a, tol)).adjoint();
  const auto lhs = qa * a.pow(m + 1) * x;
  const auto rhs = qa * a.pow(m) * b;
  return (lhs - rhs).frobenius() / norm_floor1(rhs);
}

EquationSolution solve_general(const ComplexMatrix& a, const ComplexMatrix& b, unsigned m,
                               const ComplexMatrix& y, const TolerancePolicy& tol) {
  require_conformable(a, b, "solve_general");
  if (y.rows() != b.rows() || y.cols() != b.cols()) throw ShapeError("solve_general: Y must match B's shape");
  const auto z = mwgi(a, m, tol).z;
  const auto eye = ComplexMatrix::identity(a.rows());
  return {z * b + (eye - z * a) * y, y.frobenius() > 0.0};
}

EquationSolution solve_in_range(const ComplexMatrix& a, const ComplexMatrix& b, unsigned m,
                                const TolerancePolicy& tol) {
  require_conformable(a, b, "solve_in_range");
  return {mwgi(a, m, tol).z * b, false};
}

std::optional<bool> same_range_solution(const ComplexMatrix& a, const ComplexMatrix& b, unsigned m,
                                        const ComplexMatrix& other, const TolerancePolicy& tol) {
  require_conformable(a, b, "same_range_solution");
  const auto z = mwgi(a, m, tol).z;
  if (residual(a, b, m, other, tol) > tol.eq_rtol) return std::nullopt;
  if (!col_space_contains(z, other, tol)) return std::nullopt;
  return approx_equal(other, z * b, tol);
}

}  // namespace ginv
