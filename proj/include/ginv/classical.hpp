#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ginv/matcore.hpp"

namespace ginv {

class NoGroupInverse : public std::domain_error {
 public:
  NoGroupInverse() : std::domain_error("matrix has index >= 2: rank(A) != rank(A^2), no group inverse") {}
};

class NoCoreInverse : public std::domain_error {
 public:
  NoCoreInverse() : std::domain_error("matrix has index >= 2: rank(A) != rank(A^2), no core inverse") {}
};

/// Drazin index together with the ranks of A^0, A^1, ..., A^k.
struct IndexResult {
  std::size_t k = 0;
  std::vector<std::size_t> rank_chain;
};

/// Orthonormal bases for the core part of a square matrix.
///
/// `range` spans col(A^k) and `corange` spans col((A^k)*), both with
/// rank(A^k) columns. The rank chain is built by iterating
/// U_{j+1} = orth(A U_j) instead of forming A^j, so high powers of a
/// nilpotent block never have to be rank-decided in isolation.
struct CoreSubspaces {
  IndexResult index;
  Dense range;
  Dense corange;
};

CoreSubspaces core_subspaces(const ComplexMatrix& a, const TolerancePolicy& tol);

ComplexMatrix moore_penrose(const ComplexMatrix& a, const TolerancePolicy& tol);
IndexResult index(const ComplexMatrix& a, const TolerancePolicy& tol);

/// A^D = U (V* A U)^{-1} V* with U, V from core_subspaces. Zero for nilpotent A.
ComplexMatrix drazin(const ComplexMatrix& a, const TolerancePolicy& tol);

/// Drazin inverse of an index <= 1 matrix; throws NoGroupInverse otherwise.
ComplexMatrix group_inverse(const ComplexMatrix& a, const TolerancePolicy& tol);

/// Core inverse (A X^2 = X, (AX)* = AX, AXA = A) of an index <= 1 matrix.
ComplexMatrix core_inverse(const ComplexMatrix& a, const TolerancePolicy& tol);

/// Core-EP inverse A^D A^k (A^k)^+, evaluated as U (U* A U)^{-1} U*.
ComplexMatrix core_ep(const ComplexMatrix& a, const TolerancePolicy& tol);

}  // namespace ginv
