#pragma once

#include <algorithm>
#include <complex>
#include <functional>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ginv {

using Complex = std::complex<double>;
using Dense = Eigen::MatrixXcd;

/// Thrown when two operands do not have conformable shapes.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thresholds for every floating-point decision in the library.
///
/// rank_rtol is relative to the largest singular value, eq_rtol is a relative
/// Frobenius residual bound, nil_atol is the absolute level below which a
/// matrix power (or a singular value in an index computation) counts as zero.
struct TolerancePolicy {
  double rank_rtol = 1e-10;
  double eq_rtol = 1e-8;
  double nil_atol = 1e-10;

  /// Throws std::invalid_argument unless all three lie in (0, 1).
  void validate() const;
};

/// Dense complex matrix with finite entries.
///
/// A thin value wrapper over Eigen storage. Construction rejects NaN/Inf;
/// shapes are fixed for the lifetime of the value.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(Dense m);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::span<const Complex> row_major);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(m_.cols()); }
  bool square() const { return m_.rows() == m_.cols(); }
  Complex operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Dense& dense() const { return m_; }

  /// Row-major copy of the entries.
  std::vector<Complex> entries() const;
  double frobenius() const { return m_.norm(); }

  ComplexMatrix adjoint() const;
  ComplexMatrix pow(unsigned e) const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) { return a.m_ == b.m_; }

 private:
  Dense m_;
};

/// Conjugate transpose. An exact involution.
ComplexMatrix conj_transpose(const ComplexMatrix& a);

/// Number of singular values above rank_rtol * sigma_max * max(rows, cols).
std::size_t numerical_rank(const ComplexMatrix& a, const TolerancePolicy& tol);
std::size_t numerical_rank(const Dense& a, const TolerancePolicy& tol);

/// ||A - B||_F <= eq_rtol * max(1, ||A||_F, ||B||_F). Throws ShapeError on mismatch.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, const TolerancePolicy& tol);

/// col(V) is contained in col(U), decided as rank([U | V]) == rank(U).
bool col_space_contains(const ComplexMatrix& u, const ComplexMatrix& v, const TolerancePolicy& tol);

/// rank([U | V]) - rank(U); zero exactly when col_space_contains holds.
std::size_t col_space_excess(const ComplexMatrix& u, const ComplexMatrix& v, const TolerancePolicy& tol);

/// max(1, ||M||_F). Scale factors below are products of these.
inline double norm_floor1(const ComplexMatrix& m) { return std::max(1.0, m.frobenius()); }

/// Product of norm_floor1 over the factors of a matrix product.
double factor_scale(std::initializer_list<std::reference_wrapper<const ComplexMatrix>> factors);

/// Relative residual of the equation lhs = rhs.
///
/// ||lhs - rhs||_F / max(1, ||lhs||_F, ||rhs||_F, scale). `scale` is the
/// product of the floored norms of the factors that built either side, so a
/// product of large factors that should cancel is judged against its inputs.
double relative_residual(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double scale = 1.0);

std::string to_string(const ComplexMatrix& a);

}  // namespace ginv
