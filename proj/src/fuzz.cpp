#include "ginv/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ginv/classical.hpp"

namespace ginv::fuzz {

double Rng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

long Rng::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(eng_() % span);
}

double Rng::normal() {
  // Box-Muller; one draw per call keeps the stream position simple.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Dense m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.complex_normal();
  return ComplexMatrix(std::move(m));
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  const Dense g = random_matrix(rng, n, n).dense();
  Eigen::HouseholderQR<Dense> qr(g);
  Dense q = qr.householderQ();
  const Dense r = qr.matrixQR();
  // Fix column phases so the draw is Haar-distributed.
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const auto d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return ComplexMatrix(std::move(q));
}

namespace {

Dense scaled_unitary_product(Rng& rng, std::size_t n, const std::vector<double>& sigma) {
  Dense s = Dense::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = sigma[i];
  return random_unitary(rng, n).dense() * s * random_unitary(rng, n).dense();
}

}  // namespace

FuzzCase make_case(Rng& rng, std::size_t n, std::size_t k, const GeneratorConfig& cfg) {
  if (k > n) throw std::invalid_argument("index cannot exceed dimension");
  const std::size_t r = k == 0 ? n : n - k;
  FuzzCase out;
  out.n = n;
  out.k = k;

  const double cond = std::exp(rng.uniform(0.0, std::log(cfg.max_core_condition)));
  out.core_condition = r > 1 ? cond : 1.0;
  std::vector<double> sigma(r);
  for (auto& s : sigma) s = std::exp(rng.uniform(0.0, std::log(cond)));
  if (r > 0) sigma.front() = 1.0;
  if (r > 1) sigma.back() = cond;
  for (auto& s : sigma) s /= std::sqrt(cond);

  Dense block = Dense::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  if (r > 0) block.topLeftCorner(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)) = scaled_unitary_product(rng, r, sigma);
  for (std::size_t i = 1; i < k; ++i) {
    const auto row = static_cast<Eigen::Index>(r + i - 1);
    block(row, row + 1) = rng.uniform(0.5, 2.0);
  }

  std::vector<double> stretch(n);
  for (auto& s : stretch) s = rng.uniform(1.0, cfg.max_similarity_stretch);
  const Dense p = scaled_unitary_product(rng, n, stretch);
  out.a = ComplexMatrix(Dense(p * block * p.partialPivLu().inverse()));
  return out;
}

std::vector<FuzzCase> corpus(std::uint64_t seed, std::size_t count, const GeneratorConfig& cfg) {
  Rng rng(seed);
  std::vector<FuzzCase> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, static_cast<long>(cfg.max_dim)));
    const auto k = static_cast<std::size_t>(rng.integer(0, static_cast<long>(std::min(cfg.max_index, n))));
    out.push_back(make_case(rng, n, k, cfg));
  }
  return out;
}

OrthogonalPair orthogonal_pair(Rng& rng, const GeneratorConfig& cfg) {
  const auto n1 = static_cast<std::size_t>(rng.integer(1, 3));
  const auto n2 = static_cast<std::size_t>(rng.integer(1, 3));
  const auto k1 = static_cast<std::size_t>(rng.integer(0, static_cast<long>(std::min(cfg.max_index, n1))));
  const auto k2 = static_cast<std::size_t>(rng.integer(0, static_cast<long>(std::min(cfg.max_index, n2))));
  const auto a1 = make_case(rng, n1, k1, cfg).a.dense();
  const auto b1 = make_case(rng, n2, k2, cfg).a.dense();
  const auto n = static_cast<Eigen::Index>(n1 + n2);
  Dense a = Dense::Zero(n, n), b = Dense::Zero(n, n);
  a.topLeftCorner(a1.rows(), a1.cols()) = a1;
  b.bottomRightCorner(b1.rows(), b1.cols()) = b1;
  const Dense u = random_unitary(rng, static_cast<std::size_t>(n)).dense();
  return {ComplexMatrix(Dense(u * a * u.adjoint())), ComplexMatrix(Dense(u * b * u.adjoint()))};
}

ComplexMatrix random_inner_inverse(Rng& rng, const ComplexMatrix& a, const TolerancePolicy& tol) {
  const auto pinv = moore_penrose(a, tol);
  const auto r = random_matrix(rng, a.cols(), a.rows());
  const auto left = ComplexMatrix::identity(a.cols()) - pinv * a;
  const auto right = ComplexMatrix::identity(a.rows()) - a * pinv;
  return pinv + left * r * right;
}

RationalCase make_rational_case(Rng& rng, std::size_t n, std::size_t k, long height) {
  using exact::GaussQ;
  using exact::RationalMatrix;
  if (k > n) throw std::invalid_argument("index cannot exceed dimension");
  const std::size_t r = k == 0 ? n : n - k;
  auto small = [&](long lim) { return GaussQ(mpq_class(rng.integer(-lim, lim)), mpq_class(rng.integer(-lim, lim))); };

  for (;;) {
    RationalMatrix block(n, n);
    RationalMatrix core(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) core(i, j) = small(2);
    if (exact::rank(core) != r) continue;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) block(i, j) = core(i, j);
    for (std::size_t i = 1; i < k; ++i) block(r + i - 1, r + i) = GaussQ(rng.integer(1, 2));

    // Unimodular P = L U: unit triangular factors with sparse small entries.
    RationalMatrix lo = RationalMatrix::identity(n), up = RationalMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        if (rng.integer(0, 2) == 0) lo(i, j) = small(1);
        if (rng.integer(0, 2) == 0) up(j, i) = small(1);
      }
    const auto p = lo * up;
    const auto a = p * block * exact::inverse(p);
    const bool fits = std::all_of(a.entries().begin(), a.entries().end(), [&](const GaussQ& z) {
      return abs(z.re) <= height && abs(z.im) <= height;
    });
    if (fits) return {a, n, k};
  }
}

}  // namespace ginv::fuzz
