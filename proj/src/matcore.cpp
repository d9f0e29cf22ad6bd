#include "ginv/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ginv {

namespace {

void require_finite(const Dense& m) {
  if (!m.allFinite()) throw std::domain_error("matrix has non-finite entries");
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
}

}  // namespace

void TolerancePolicy::validate() const {
  auto ok = [](double v) { return v > 0.0 && v < 1.0; };
  if (!ok(rank_rtol) || !ok(eq_rtol) || !ok(nil_atol))
    throw std::invalid_argument("tolerances must lie strictly between 0 and 1");
}

ComplexMatrix::ComplexMatrix(Dense m) : m_(std::move(m)) { require_finite(m_); }

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::span<const Complex> row_major) {
  if (row_major.size() != rows * cols)
    throw ShapeError("entry count " + std::to_string(row_major.size()) + " does not match " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  m_.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row_major[i * cols + j];
  require_finite(m_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto r = rows.size();
  const auto c = r ? rows.begin()->size() : 0;
  m_.resize(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ragged initializer list");
    Eigen::Index j = 0;
    for (const auto& v : row) m_(i, j++) = v;
    ++i;
  }
  require_finite(m_);
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(Dense::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols)));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return ComplexMatrix(Dense::Identity(k, k));
}

std::vector<Complex> ComplexMatrix::entries() const {
  std::vector<Complex> out;
  out.reserve(rows() * cols());
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = 0; j < m_.cols(); ++j) out.push_back(m_(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(Dense(m_.adjoint())); }

ComplexMatrix ComplexMatrix::pow(unsigned e) const {
  if (!square()) throw ShapeError("pow: matrix is not square");
  Dense result = Dense::Identity(m_.rows(), m_.cols());
  Dense base = m_;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return ComplexMatrix(std::move(result));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  return ComplexMatrix(Dense(a.m_ + b.m_));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "subtract");
  return ComplexMatrix(Dense(a.m_ - b.m_));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()) + " differ");
  return ComplexMatrix(Dense(a.m_ * b.m_));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return ComplexMatrix(Dense(s * a.m_)); }

ComplexMatrix conj_transpose(const ComplexMatrix& a) { return a.adjoint(); }

std::size_t numerical_rank(const Dense& a, const TolerancePolicy& tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Dense> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = tol.rank_rtol * s(0) * static_cast<double>(std::max(a.rows(), a.cols()));
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

std::size_t numerical_rank(const ComplexMatrix& a, const TolerancePolicy& tol) {
  return numerical_rank(a.dense(), tol);
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, const TolerancePolicy& tol) {
  require_same_shape(a, b, "approx_equal");
  const double bound = std::max({1.0, a.frobenius(), b.frobenius()});
  return (a.dense() - b.dense()).norm() <= tol.eq_rtol * bound;
}

std::size_t col_space_excess(const ComplexMatrix& u, const ComplexMatrix& v, const TolerancePolicy& tol) {
  if (u.rows() != v.rows())
    throw ShapeError("col_space_contains: row counts " + std::to_string(u.rows()) + " and " +
                     std::to_string(v.rows()) + " differ");
  Dense joined(u.dense().rows(), u.dense().cols() + v.dense().cols());
  joined << u.dense(), v.dense();
  const auto ru = numerical_rank(u.dense(), tol);
  const auto rj = numerical_rank(joined, tol);
  return rj > ru ? rj - ru : 0;
}

bool col_space_contains(const ComplexMatrix& u, const ComplexMatrix& v, const TolerancePolicy& tol) {
  return col_space_excess(u, v, tol) == 0;
}

double factor_scale(std::initializer_list<std::reference_wrapper<const ComplexMatrix>> factors) {
  double s = 1.0;
  for (const auto& f : factors) s *= norm_floor1(f.get());
  return s;
}

double relative_residual(const ComplexMatrix& lhs, const ComplexMatrix& rhs, double scale) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw ShapeError("relative_residual: shape mismatch");
  const double denom = std::max({1.0, lhs.frobenius(), rhs.frobenius(), scale});
  return (lhs.dense() - rhs.dense()).norm() / denom;
}

std::string to_string(const ComplexMatrix& a) {
  std::ostringstream os;
  os.precision(6);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? "\n[" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto z = a(i, j);
      os << (j ? ", " : "") << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    os << "]";
  }
  return os.str();
}

}  // namespace ginv
