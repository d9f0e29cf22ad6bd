#pragma once

// Random test matrices with a known index, built as P diag(C, N) P^{-1}:
// C an invertible core with bounded condition number, N a single nilpotent
// Jordan-like block of order k. All draws come from one seeded 64-bit
// Mersenne Twister, so a seed fixes the corpus bit for bit.

#include <cstdint>
#include <random>
#include <vector>

#include "ginv/matcore.hpp"
#include "ginv/oracle.hpp"

namespace ginv::fuzz {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  double normal();
  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 eng_;
};

struct GeneratorConfig {
  std::size_t max_dim = 6;
  std::size_t max_index = 3;
  /// Upper end of the log-uniform draw for cond(C).
  double max_core_condition = 1e2;
  /// Singular values of P are drawn from [1, this].
  double max_similarity_stretch = 3.0;
};

struct FuzzCase {
  ComplexMatrix a;
  std::size_t n = 0;
  std::size_t k = 0;
  double core_condition = 1.0;
};

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
ComplexMatrix random_unitary(Rng& rng, std::size_t n);

FuzzCase make_case(Rng& rng, std::size_t n, std::size_t k, const GeneratorConfig& cfg = {});

/// `count` cases, n uniform in [1, max_dim], k uniform in [0, min(max_index, n)].
std::vector<FuzzCase> corpus(std::uint64_t seed, std::size_t count, const GeneratorConfig& cfg = {});

/// A = U diag(A1, 0) U*, B = U diag(0, B1) U* with U unitary, so AB = BA = A*B = 0.
struct OrthogonalPair {
  ComplexMatrix a, b;
};
OrthogonalPair orthogonal_pair(Rng& rng, const GeneratorConfig& cfg = {});

/// A^+ + (I - A^+ A) R (I - A A^+) for a random R: an inner inverse of A.
ComplexMatrix random_inner_inverse(Rng& rng, const ComplexMatrix& a, const TolerancePolicy& tol);

struct RationalCase {
  exact::RationalMatrix a;
  std::size_t n = 0;
  std::size_t k = 0;
};

/// Gaussian-integer matrix of known index k, every real and imaginary part
/// at most `height` in absolute value. Built from unimodular P so P^{-1} is
/// integral too; rejection-samples until the height bound holds.
RationalCase make_rational_case(Rng& rng, std::size_t n, std::size_t k, long height = 10);

}  // namespace ginv::fuzz
