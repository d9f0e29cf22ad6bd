#pragma once

// Exact ground truth over the Gaussian rationals Q[i]. Every generalized
// inverse used by the float path is rational in the entries of A, so all of
// them can be evaluated here with no tolerance at all.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ginv/matcore.hpp"
#include "ginv/report.hpp"

namespace ginv::exact {

/// re + i im with canonical (reduced, positive denominator) parts.
struct GaussQ {
  mpq_class re;
  mpq_class im;

  GaussQ() = default;
  GaussQ(mpq_class r, mpq_class i = 0);
  GaussQ(long r) : GaussQ(mpq_class(r)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussQ conj() const { return GaussQ(re, -im); }
  GaussQ inverse() const;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussQ operator/(const GaussQ& a, const GaussQ& b) { return a * b.inverse(); }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
};

class HeightOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bit bound on any numerator or denominator produced by the oracle.
struct OracleLimits {
  std::size_t max_bits = 4096;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<GaussQ> row_major);
  RationalMatrix(std::initializer_list<std::initializer_list<GaussQ>> rows);

  static RationalMatrix identity(std::size_t n);
  /// Exact conversion of every double (finite doubles are dyadic rationals).
  static RationalMatrix from_complex(const ComplexMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const GaussQ& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  GaussQ& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const std::vector<GaussQ>& entries() const { return e_; }

  bool is_zero() const;
  RationalMatrix adjoint() const;
  RationalMatrix pow(unsigned e) const;
  RationalMatrix columns(const std::vector<std::size_t>& idx) const;
  RationalMatrix top_rows(std::size_t r) const;
  ComplexMatrix to_complex() const;
  /// Largest bit length over all numerators and denominators.
  std::size_t height_bits() const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussQ> e_;
};

struct Echelon {
  RationalMatrix rref;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
Echelon row_reduce(const RationalMatrix& a);
std::size_t rank(const RationalMatrix& a);
/// Throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& a);

/// A = F G with F the pivot columns of A and G the nonzero rows of rref(A).
struct RankFactorization {
  RationalMatrix f;
  RationalMatrix g;
};
RankFactorization rank_factorization(const RationalMatrix& a);

/// Exact index and rank chain rank(A^0), ..., rank(A^k).
struct ExactIndex {
  std::size_t k = 0;
  std::vector<std::size_t> rank_chain;
};
ExactIndex exact_index(const RationalMatrix& a);

/// G* (G G*)^{-1} (F* F)^{-1} F*.
RationalMatrix exact_mp(const RationalMatrix& a, const OracleLimits& lim = {});

/// Cline chain: A = B1 C1, C_i B_i = B_{i+1} C_{i+1}, stopping when C_j B_j is
/// invertible (A^D = B1..Bj (Cj Bj)^{-(j+1)} Cj..C1) or zero (A^D = 0).
RationalMatrix exact_drazin(const RationalMatrix& a, const OracleLimits& lim = {});

/// exact_drazin(A) A^k exact_mp(A^k); checks A X^2 = X, (AX)* = AX and
/// X A^{k+1} = A^k exactly before returning (std::logic_error otherwise).
RationalMatrix exact_core_ep(const RationalMatrix& a, const OracleLimits& lim = {});

/// (A^D)^{m+1} A A^(+) A^m, verified exactly against the defining equations.
RationalMatrix exact_mwgi(const RationalMatrix& a, unsigned m, const OracleLimits& lim = {});

/// Exact evaluation of the identity catalogue for Z = exact_mwgi(A, m).
/// Residuals are the squared Frobenius norm of lhs - rhs (as a double);
/// a check passes only when that is exactly zero.
VerificationReport certify(const RationalMatrix& a, unsigned m, const OracleLimits& lim = {});
VerificationReport certify(const RationalMatrix& a, unsigned m, const RationalMatrix& z,
                           const OracleLimits& lim = {});

/// Parses "p/q" or "p"; throws std::invalid_argument.
mpq_class parse_rational(const std::string& s);
std::string to_string(const mpq_class& q);

}  // namespace ginv::exact
