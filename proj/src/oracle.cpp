#include "ginv/oracle.hpp"

#include <algorithm>

namespace ginv::exact {

namespace {

void require_square(const RationalMatrix& a, const char* what) {
  if (!a.square())
    throw ShapeError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + ", expected square");
}

const RationalMatrix& guard(const RationalMatrix& m, const OracleLimits& lim) {
  if (const auto bits = m.height_bits(); bits > lim.max_bits)
    throw HeightOverflow("intermediate entry needs " + std::to_string(bits) + " bits, limit is " +
                         std::to_string(lim.max_bits));
  return m;
}

// Squared Frobenius norm of lhs - rhs, exact.
mpq_class defect(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) throw ShapeError("defect: shape mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < lhs.entries().size(); ++i) {
    const auto d = lhs.entries()[i] - rhs.entries()[i];
    acc += d.re * d.re + d.im * d.im;
  }
  return acc;
}

void add_exact(VerificationReport& rep, const std::string& name, const mpq_class& d) {
  rep.add(name, d.get_d(), sgn(d) == 0);
}

RationalMatrix zero_of(const RationalMatrix& a) { return RationalMatrix(a.rows(), a.cols()); }

// (A^D)^{m+1} A A^(+) A^m without the post-hoc checks.
struct MwgiParts {
  RationalMatrix d, e, am, z;
  std::size_t k = 0;
};

MwgiParts evaluate_mwgi(const RationalMatrix& a, unsigned m, const OracleLimits& lim) {
  MwgiParts p;
  p.k = exact_index(a).k;
  p.d = exact_drazin(a, lim);
  p.e = exact_core_ep(a, lim);
  p.am = a.pow(m);
  p.z = guard(p.d.pow(m + 1) * a * p.e * p.am, lim);
  return p;
}

// Deterministic small Gaussian-integer test matrices for the equation checks.
RationalMatrix probe(std::size_t rows, std::size_t cols, int salt) {
  RationalMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const auto ii = static_cast<long>(i), jj = static_cast<long>(j);
      out(i, j) = GaussQ(mpq_class((ii + 2 * jj + salt) % 5 - 2), mpq_class((2 * ii + jj + salt) % 3 - 1));
    }
  return out;
}

}  // namespace

GaussQ::GaussQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
  re.canonicalize();
  im.canonicalize();
}

GaussQ GaussQ::inverse() const {
  const mpq_class n = re * re + im * im;
  if (sgn(n) == 0) throw std::domain_error("division by zero in Q[i]");
  return {re / n, -im / n};
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, GaussQ(0)) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<GaussQ> row_major)
    : rows_(rows), cols_(cols), e_(std::move(row_major)) {
  if (e_.size() != rows * cols)
    throw ShapeError("entry count " + std::to_string(e_.size()) + " does not match " + std::to_string(rows) +
                     "x" + std::to_string(cols));
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<GaussQ>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged initializer list");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = GaussQ(1);
  return out;
}

RationalMatrix RationalMatrix::from_complex(const ComplexMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = GaussQ(mpq_class(m(i, j).real()), mpq_class(m(i, j).imag()));
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const GaussQ& z) { return z.is_zero(); });
}

RationalMatrix RationalMatrix::adjoint() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

RationalMatrix RationalMatrix::pow(unsigned e) const {
  if (!square()) throw ShapeError("pow: matrix is not square");
  RationalMatrix out = identity(rows_);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

RationalMatrix RationalMatrix::columns(const std::vector<std::size_t>& idx) const {
  RationalMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  return out;
}

RationalMatrix RationalMatrix::top_rows(std::size_t r) const {
  RationalMatrix out(r, cols_);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
  return out;
}

ComplexMatrix RationalMatrix::to_complex() const {
  std::vector<Complex> v;
  v.reserve(e_.size());
  for (const auto& z : e_) v.push_back(z.to_complex());
  return ComplexMatrix(rows_, cols_, v);
}

std::size_t RationalMatrix::height_bits() const {
  std::size_t bits = 0;
  for (const auto& z : e_)
    for (const mpq_class* q : {&z.re, &z.im}) {
      bits = std::max(bits, mpz_sizeinbase(q->get_num_mpz_t(), 2));
      bits = std::max(bits, mpz_sizeinbase(q->get_den_mpz_t(), 2));
    }
  return bits;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("add: shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("subtract: shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] = a.e_[i] - b.e_[i];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("multiply: inner dimensions differ");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const auto& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + x * b(l, j);
    }
  return out;
}

Echelon row_reduce(const RationalMatrix& a) {
  Echelon out{a, {}};
  auto& m = out.rref;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const auto inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const auto f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const RationalMatrix& a) { return row_reduce(a).pivots.size(); }

RationalMatrix inverse(const RationalMatrix& a) {
  require_square(a, "inverse");
  const auto n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = GaussQ(1);
  }
  const auto ech = row_reduce(aug);
  if (ech.pivots.size() < n || (n && ech.pivots[n - 1] != n - 1)) throw std::domain_error("matrix is singular");
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.rref(i, n + j);
  return out;
}

RankFactorization rank_factorization(const RationalMatrix& a) {
  const auto ech = row_reduce(a);
  return {a.columns(ech.pivots), ech.rref.top_rows(ech.pivots.size())};
}

ExactIndex exact_index(const RationalMatrix& a) {
  require_square(a, "exact_index");
  ExactIndex out;
  RationalMatrix p = RationalMatrix::identity(a.rows());
  out.rank_chain.push_back(a.rows());
  for (;;) {
    p = p * a;
    const auto r = rank(p);
    if (r == out.rank_chain.back()) break;
    out.rank_chain.push_back(r);
  }
  out.k = out.rank_chain.size() - 1;
  return out;
}

RationalMatrix exact_mp(const RationalMatrix& a, const OracleLimits& lim) {
  const auto [f, g] = rank_factorization(a);
  if (f.cols() == 0) return RationalMatrix(a.cols(), a.rows());
  const auto fa = f.adjoint();
  const auto ga = g.adjoint();
  return guard(ga * guard(inverse(g * ga), lim) * guard(inverse(fa * f), lim) * fa, lim);
}

RationalMatrix exact_drazin(const RationalMatrix& a, const OracleLimits& lim) {
  require_square(a, "exact_drazin");
  const auto n = a.rows();
  std::vector<RationalMatrix> bs, cs;
  RationalMatrix current = a;
  for (;;) {
    auto [b, c] = rank_factorization(current);
    if (b.cols() == 0) return RationalMatrix(n, n);
    auto next = guard(c * b, lim);
    bs.push_back(std::move(b));
    cs.push_back(std::move(c));
    if (next.is_zero()) return RationalMatrix(n, n);
    if (rank(next) == next.rows()) {
      const auto j = static_cast<unsigned>(bs.size());
      RationalMatrix left = RationalMatrix::identity(n);
      for (const auto& bi : bs) left = left * bi;
      RationalMatrix right = RationalMatrix::identity(n);
      for (const auto& ci : cs) right = ci * right;
      return guard(left * guard(inverse(next).pow(j + 1), lim) * right, lim);
    }
    current = std::move(next);
  }
}

RationalMatrix exact_core_ep(const RationalMatrix& a, const OracleLimits& lim) {
  require_square(a, "exact_core_ep");
  const auto k = static_cast<unsigned>(exact_index(a).k);
  const auto ak = a.pow(k);
  const auto x = guard(exact_drazin(a, lim) * ak * exact_mp(ak, lim), lim);
  const auto ax = a * x;
  if (!(a * x * x == x) || !(ax.adjoint() == ax) || !(x * a.pow(k + 1) == ak))
    throw std::logic_error("exact_core_ep: defining equations fail");
  return x;
}

RationalMatrix exact_mwgi(const RationalMatrix& a, unsigned m, const OracleLimits& lim) {
  require_square(a, "exact_mwgi");
  if (m == 0) throw std::invalid_argument("m must be a positive integer");
  const auto p = evaluate_mwgi(a, m, lim);
  const auto k = static_cast<unsigned>(p.k);
  const auto qa = (a * p.d).adjoint();
  const auto am1 = a.pow(m + 1);
  const auto ak = a.pow(k);
  const bool ok = p.z == a * p.z * p.z && qa * am1 * p.z == qa * p.am && p.z * a.pow(k + 1) == ak &&
                  ak.adjoint() * am1 * p.z == ak.adjoint() * p.am &&
                  p.z == (p.d * a * p.e).pow(m + 1) * p.am;
  if (!ok) throw std::logic_error("exact_mwgi: defining equations fail");
  return p.z;
}

VerificationReport certify(const RationalMatrix& a, unsigned m, const OracleLimits& lim) {
  return certify(a, m, exact_mwgi(a, m, lim), lim);
}

VerificationReport certify(const RationalMatrix& a, unsigned m, const RationalMatrix& z, const OracleLimits& lim) {
  require_square(a, "certify");
  if (m == 0) throw std::invalid_argument("m must be a positive integer");
  if (z.rows() != a.rows() || z.cols() != a.cols()) throw ShapeError("certify: candidate shape differs from A");
  const auto n = a.rows();
  const auto p = evaluate_mwgi(a, m, lim);
  const auto k = static_cast<unsigned>(p.k);
  const auto eye = RationalMatrix::identity(n);
  const auto zero = zero_of(a);
  const auto am1 = a.pow(m + 1);
  const auto qa = (a * p.d).adjoint();
  const auto ak = a.pow(k);

  VerificationReport rep;
  add_exact(rep, "forms_agree", defect(z, (p.d * a * p.e).pow(m + 1) * p.am));
  add_exact(rep, "ax2", defect(z, a * z * z));
  add_exact(rep, "right_def", defect(qa * am1 * z, qa * p.am));
  add_exact(rep, "wgm_k", defect(z * a.pow(k + 1), ak) + defect(ak.adjoint() * am1 * z, ak.adjoint() * p.am));

  const auto w = exact_mwgi(p.am, 1, lim);
  add_exact(rep, "power_route", defect(z, a.pow(m - 1) * w));
  add_exact(rep, "power_of_z", defect(w, z.pow(m)));
  add_exact(rep, "step_route", defect(exact_mwgi(a, m + 1, lim), z * z * a));

  const auto az = a * z;
  add_exact(rep, "idempotents", defect(az, a.pow(2) * z.pow(2)) + defect(az, a.pow(3) * z.pow(3)));

  const auto x = a * a * z;
  const auto y = a - x;
  add_exact(rep, "decomp_orth", defect(x.adjoint() * a.pow(m - 1) * y, zero) + defect(y * x, zero));
  add_exact(rep, "decomp_y_nil", defect(y.pow(static_cast<unsigned>(n)), zero));
  add_exact(rep, "decomp_group", defect(x * z, z * x) + defect(z * x * z, z) + defect(x * z * x, x));

  const auto& b = z;
  add_exact(rep, "b_bab", defect(b * a * b, b));
  add_exact(rep, "b_a2b2", defect(a * a * b * b, a * b));
  const auto h = p.am.adjoint() * am1 * b;
  add_exact(rep, "b_herm", defect(h, h.adjoint()));
  add_exact(rep, "b_qnil", defect((a - a * a * b).pow(static_cast<unsigned>(n)), zero));
  {
    // col(Ab) = col(A^2 b): equal ranks and rank of the concatenation
    const auto ab = a * b, a2b = a * a * b;
    RationalMatrix joined(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        joined(i, j) = ab(i, j);
        joined(i, n + j) = a2b(i, j);
      }
    const auto r1 = rank(ab), r2 = rank(a2b), rj = rank(joined);
    const long gap = static_cast<long>(rj - r1) + static_cast<long>(rj - r2);
    add_exact(rep, "b_range", mpq_class(gap));
  }

  const auto bp = probe(n, 2, 0);
  const auto yp = probe(n, 2, 3);
  const auto sol = z * bp + (eye - z * a) * yp;
  add_exact(rep, "equation", defect(qa * am1 * sol, qa * p.am * bp));
  return rep;
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  mpq_class q(mpz_class(num[0] == '+' ? num.substr(1) : num), mpz_class(den));
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace ginv::exact
