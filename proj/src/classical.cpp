#include "ginv/classical.hpp"

#include <algorithm>

namespace ginv {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.square())
    throw ShapeError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + ", expected square");
}

// Leading r left singular vectors of w.
Dense leading_basis(const Dense& w, Eigen::Index r) {
  Eigen::JacobiSVD<Dense> svd(w, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(r);
}

Eigen::Index count_above(const Dense& w, double cut) {
  if (w.cols() == 0) return 0;
  Eigen::JacobiSVD<Dense> svd(w);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

}  // namespace

CoreSubspaces core_subspaces(const ComplexMatrix& a, const TolerancePolicy& tol) {
  require_square(a, "index");
  const Dense& m = a.dense();
  const Eigen::Index n = m.rows();

  CoreSubspaces out;
  out.index.rank_chain.push_back(static_cast<std::size_t>(n));

  const double sigma_max = n ? Eigen::JacobiSVD<Dense>(m).singularValues()(0) : 0.0;
  const double cut = std::max(tol.rank_rtol * sigma_max * static_cast<double>(n), tol.nil_atol);

  Dense u = Dense::Identity(n, n);
  for (;;) {
    if (u.cols() == 0) break;
    const Dense w = m * u;
    const Eigen::Index r = count_above(w, cut);
    if (r == u.cols()) break;
    u = leading_basis(w, r);
    out.index.rank_chain.push_back(static_cast<std::size_t>(r));
  }
  out.index.k = out.index.rank_chain.size() - 1;
  out.range = std::move(u);

  // Same rank sequence for A*, since rank(A^j) = rank((A^j)*).
  Dense v = Dense::Identity(n, n);
  for (std::size_t j = 1; j <= out.index.k; ++j) {
    const auto r = static_cast<Eigen::Index>(out.index.rank_chain[j]);
    v = r ? leading_basis(m.adjoint() * v, r) : Dense(n, 0);
  }
  out.corange = std::move(v);
  return out;
}

IndexResult index(const ComplexMatrix& a, const TolerancePolicy& tol) {
  return core_subspaces(a, tol).index;
}

ComplexMatrix moore_penrose(const ComplexMatrix& a, const TolerancePolicy& tol) {
  const Dense& m = a.dense();
  if (m.size() == 0) return ComplexMatrix(Dense(m.cols(), m.rows()));
  Eigen::JacobiSVD<Dense> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double cut = tol.rank_rtol * s(0) * static_cast<double>(std::max(m.rows(), m.cols()));
  Dense pinv = Dense::Zero(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (!(s(i) > cut)) break;
    pinv += (svd.matrixV().col(i) / s(i)) * svd.matrixU().col(i).adjoint();
  }
  return ComplexMatrix(std::move(pinv));
}

ComplexMatrix drazin(const ComplexMatrix& a, const TolerancePolicy& tol) {
  const auto cs = core_subspaces(a, tol);
  const auto n = a.rows();
  if (cs.range.cols() == 0) return ComplexMatrix::zero(n, n);
  const Dense& u = cs.range;
  const Dense& v = cs.corange;
  const Dense core = v.adjoint() * a.dense() * u;
  return ComplexMatrix(Dense(u * core.partialPivLu().solve(v.adjoint())));
}

ComplexMatrix group_inverse(const ComplexMatrix& a, const TolerancePolicy& tol) {
  require_square(a, "group_inverse");
  if (index(a, tol).k > 1) throw NoGroupInverse();
  return drazin(a, tol);
}

ComplexMatrix core_ep(const ComplexMatrix& a, const TolerancePolicy& tol) {
  const auto cs = core_subspaces(a, tol);
  const auto n = a.rows();
  if (cs.range.cols() == 0) return ComplexMatrix::zero(n, n);
  const Dense& u = cs.range;
  const Dense core = u.adjoint() * a.dense() * u;
  return ComplexMatrix(Dense(u * core.partialPivLu().solve(u.adjoint())));
}

ComplexMatrix core_inverse(const ComplexMatrix& a, const TolerancePolicy& tol) {
  require_square(a, "core_inverse");
  if (index(a, tol).k > 1) throw NoCoreInverse();
  return core_ep(a, tol);
}

}  // namespace ginv
