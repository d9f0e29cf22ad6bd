#pragma once

#include "doctest.h"

#include "ginv/matcore.hpp"
#include "ginv/oracle.hpp"

namespace testing {

using ginv::Complex;
using ginv::ComplexMatrix;

inline const ginv::TolerancePolicy kTol{};

inline bool close(const ComplexMatrix& a, const ComplexMatrix& b, double rtol = 1e-10) {
  return a.rows() == b.rows() && a.cols() == b.cols() && ginv::relative_residual(a, b) <= rtol;
}

inline ComplexMatrix jordan(std::size_t n) {
  std::vector<Complex> e(n * n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i * n + i + 1] = 1.0;
  return ComplexMatrix(n, n, e);
}

inline ComplexMatrix eye(std::size_t n) { return ComplexMatrix::identity(n); }
inline ComplexMatrix zeros(std::size_t n) { return ComplexMatrix::zero(n, n); }

// [[1,1],[0,0]]
inline ComplexMatrix idem2() { return {{1.0, 1.0}, {0.0, 0.0}}; }

// diag(1) (+) J2
inline ComplexMatrix one_plus_j2() { return {{1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}}; }

inline ComplexMatrix diag(std::initializer_list<Complex> d) {
  const std::vector<Complex> v(d);
  auto m = ComplexMatrix::zero(v.size(), v.size()).dense();
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v[i];
  return ComplexMatrix(m);
}

inline ginv::exact::RationalMatrix to_exact(const ComplexMatrix& m) { return ginv::exact::RationalMatrix::from_complex(m); }

}  // namespace testing
