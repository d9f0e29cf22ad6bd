#include "ginv/shiftlab.hpp"

#include <stdexcept>

namespace ginv::shift {

namespace {

constexpr const char* kCompose = "\xE2\x88\x98";  // U+2218 RING OPERATOR

std::size_t differing_basis_vectors(const ShiftWord& lhs, const ShiftWord& rhs, std::size_t window) {
  std::size_t bad = 0;
  for (std::size_t i = 1; i <= window; ++i)
    if (!(apply(lhs, FinSeq::basis(i)) == apply(rhs, FinSeq::basis(i)))) ++bad;
  return bad;
}

// Pairs (i, j) with <W e_i, e_j> != <e_i, W e_j>.
std::size_t self_adjoint_defects(const ShiftWord& w, std::size_t window) {
  std::size_t bad = 0;
  for (std::size_t i = 1; i <= window; ++i)
    for (std::size_t j = 1; j <= window; ++j)
      if (inner(apply(w, FinSeq::basis(i)), FinSeq::basis(j)) !=
          inner(FinSeq::basis(i), apply(w, FinSeq::basis(j))))
        ++bad;
  return bad;
}

}  // namespace

FinSeq::FinSeq(std::vector<std::complex<double>> coeffs) : c_(std::move(coeffs)) { trim(); }

FinSeq FinSeq::basis(std::size_t i) {
  if (i == 0) throw std::invalid_argument("basis vectors are 1-based");
  std::vector<std::complex<double>> c(i, 0.0);
  c[i - 1] = 1.0;
  return FinSeq(std::move(c));
}

std::complex<double> FinSeq::at(std::size_t i) const {
  if (i == 0 || i > c_.size()) return 0.0;
  return c_[i - 1];
}

void FinSeq::trim() {
  while (!c_.empty() && c_.back() == std::complex<double>(0.0)) c_.pop_back();
}

std::complex<double> inner(const FinSeq& u, const FinSeq& v) {
  std::complex<double> acc = 0.0;
  const auto n = std::min(u.coeffs().size(), v.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) acc += u.coeffs()[i] * std::conj(v.coeffs()[i]);
  return acc;
}

ShiftWord ShiftWord::s(std::size_t n) { return n ? ShiftWord{{Letter{Gen::S, n}}} : ShiftWord{}; }
ShiftWord ShiftWord::l(std::size_t n) { return n ? ShiftWord{{Letter{Gen::L, n}}} : ShiftWord{}; }

ShiftWord ShiftWord::then_after(const ShiftWord& rhs) const {
  ShiftWord out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

ShiftWord ShiftWord::power(std::size_t e) const {
  ShiftWord out;
  for (std::size_t i = 0; i < e; ++i) out = out.then_after(*this);
  return out;
}

FinSeq apply(const ShiftWord& w, const FinSeq& v) {
  std::vector<std::complex<double>> c = v.coeffs();
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->gen == Gen::S) {
      c.insert(c.begin(), it->n, std::complex<double>(0.0));
    } else {
      c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(it->n, c.size())));
    }
  }
  return FinSeq(std::move(c));
}

ShiftWord adjoint(const ShiftWord& w) {
  ShiftWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(Letter{it->gen == Gen::S ? Gen::L : Gen::S, it->n});
  return out;
}

ShiftWord normalize(const ShiftWord& w) {
  // Running value S(p) ∘ L(q), extended on the right one letter at a time.
  std::size_t p = 0, q = 0;
  for (const auto& g : w.letters) {
    if (g.gen == Gen::L) {
      q += g.n;
    } else if (g.n >= q) {  // L(q) ∘ S(n) = S(n - q)
      p += g.n - q;
      q = 0;
    } else {  // L(q) ∘ S(n) = L(q - n)
      q -= g.n;
    }
  }
  return ShiftWord::s(p) * ShiftWord::l(q);
}

std::string to_string(const ShiftWord& w) {
  if (w.letters.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += kCompose;
    out += static_cast<char>(w.letters[i].gen);
    out += std::to_string(w.letters[i].n);
  }
  return out;
}

ShiftWord parse_word(const std::string& text) {
  if (text == "I") return {};
  ShiftWord out;
  std::size_t pos = 0;
  const std::string sep = kCompose;
  while (pos < text.size()) {
    const char g = text[pos];
    if (g != 'S' && g != 'L') throw std::invalid_argument("bad shift word '" + text + "': expected S or L");
    std::size_t end = pos + 1;
    while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
    if (end == pos + 1) throw std::invalid_argument("bad shift word '" + text + "': missing exponent");
    const auto n = std::stoul(text.substr(pos + 1, end - pos - 1));
    if (n == 0) throw std::invalid_argument("bad shift word '" + text + "': exponent must be positive");
    out.letters.push_back(Letter{g == 'S' ? Gen::S : Gen::L, n});
    pos = end;
    if (pos == text.size()) break;
    if (text.compare(pos, sep.size(), sep) == 0) {
      pos += sep.size();
    } else if (text[pos] == '*') {
      ++pos;
    } else {
      throw std::invalid_argument("bad shift word '" + text + "': expected a composition sign");
    }
    if (pos == text.size()) throw std::invalid_argument("bad shift word '" + text + "': trailing composition");
  }
  return out;
}

ShiftWord mwgi_shift(unsigned m) {
  if (m == 0) throw std::invalid_argument("m must be a positive integer");
  return ShiftWord::s(m + 1) * ShiftWord::l(m);
}

VerificationReport verify_shift_identities(unsigned m, std::size_t window, const ShiftWord& z) {
  if (m == 0) throw std::invalid_argument("m must be a positive integer");
  if (window < m + 2)
    throw std::invalid_argument("window " + std::to_string(window) + " too small, need at least m + 2 = " +
                                std::to_string(m + 2));
  const auto a = ShiftWord::l(1);
  const auto x = ShiftWord::s(1);  // generalized right Drazin and core inverse of a
  auto count = [](std::size_t bad) { return static_cast<double>(bad); };

  VerificationReport rep;

  // a x^2 = x, a^2 x = a x a, a - a x a = 0
  const std::size_t drazin_bad = differing_basis_vectors(a * x * x, x, window) +
                                 differing_basis_vectors(a * a * x, a * x * a, window) +
                                 differing_basis_vectors(a, a * x * a, window);
  rep.add("drazin_L1", count(drazin_bad), drazin_bad == 0);

  // a x^2 = x, (a x)* = a x
  const std::size_t core_bad = differing_basis_vectors(a * x * x, x, window) + self_adjoint_defects(a * x, window);
  rep.add("core_L1", count(core_bad), core_bad == 0);

  const std::size_t ax2_bad = differing_basis_vectors(z, a * z * z, window);
  rep.add("ax2", count(ax2_bad), ax2_bad == 0);

  const auto qa = adjoint(a * x);
  const std::size_t def_bad = differing_basis_vectors(qa * a.power(m + 1) * z, qa * a.power(m), window);
  rep.add("right_def", count(def_bad), def_bad == 0);

  const auto word41 = normalize(x.power(m + 1) * a * x * a.power(m));
  const bool word_ok = word41 == normalize(z) && word41 == mwgi_shift(m);
  rep.add("normal_form", word_ok ? 0.0 : 1.0, word_ok);

  // a z a^n = a^n for n = m, m+1, m+2
  std::size_t limit_bad = 0;
  for (unsigned n = m; n <= m + 2; ++n) limit_bad += differing_basis_vectors(a * z * a.power(n), a.power(n), window);
  rep.add("limit", count(limit_bad), limit_bad == 0);
  return rep;
}

VerificationReport verify_shift_identities(unsigned m, std::size_t window) {
  return verify_shift_identities(m, window, mwgi_shift(m));
}

}  // namespace ginv::shift
