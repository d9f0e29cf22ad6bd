#pragma once

// Unilateral shifts on finitely supported sequences, kept as exact rewrite
// words. S(n) prepends n zeros, L(n) drops the first n terms, so
// L(n) S(n) = I while S(n) L(n) != I. Truncating to matrices would break
// the first identity at the boundary, which is why nothing here is a matrix.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "ginv/report.hpp"

namespace ginv::shift {

/// Coefficients x_1, x_2, ... of a sequence; everything past the end is zero.
class FinSeq {
 public:
  FinSeq() = default;
  explicit FinSeq(std::vector<std::complex<double>> coeffs);

  /// e_i, 1-based.
  static FinSeq basis(std::size_t i);

  /// Coefficient x_i (1-based); zero beyond the stored support.
  std::complex<double> at(std::size_t i) const;
  /// Stored coefficients with trailing zeros trimmed.
  const std::vector<std::complex<double>>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  friend bool operator==(const FinSeq& a, const FinSeq& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<std::complex<double>> c_;
};

/// sum_i u_i conj(v_i).
std::complex<double> inner(const FinSeq& u, const FinSeq& v);

enum class Gen : char { S = 'S', L = 'L' };

struct Letter {
  Gen gen;
  std::size_t n;  // >= 1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// g_1 ∘ g_2 ∘ ... ∘ g_r, applied right to left. Empty is the identity.
struct ShiftWord {
  std::vector<Letter> letters;

  static ShiftWord identity() { return {}; }
  static ShiftWord s(std::size_t n);
  static ShiftWord l(std::size_t n);

  /// Composition: (*this) ∘ rhs.
  ShiftWord then_after(const ShiftWord& rhs) const;
  ShiftWord power(std::size_t e) const;

  friend bool operator==(const ShiftWord&, const ShiftWord&) = default;
};

inline ShiftWord operator*(const ShiftWord& a, const ShiftWord& b) { return a.then_after(b); }

FinSeq apply(const ShiftWord& w, const FinSeq& v);

/// l2 adjoint: reverses the word and swaps S(n) with L(n).
ShiftWord adjoint(const ShiftWord& w);

/// Canonical form S(p) ∘ L(q) with zero exponents dropped.
ShiftWord normalize(const ShiftWord& w);

/// Formats as e.g. "S3∘L2"; the identity prints as "I".
std::string to_string(const ShiftWord& w);

/// Parses the to_string format; throws std::invalid_argument.
ShiftWord parse_word(const std::string& text);

/// S(m+1) ∘ L(m), the m-weak group inverse of L(1).
ShiftWord mwgi_shift(unsigned m);

/// Exact checks of the one-sided identities for a = L(1), on e_1..e_window.
/// Residuals count basis vectors (or vector pairs) on which the two sides differ.
///
/// Checks: drazin_L1, core_L1, ax2, right_def, normal_form, limit.
VerificationReport verify_shift_identities(unsigned m, std::size_t window);

/// Same checks with a caller-supplied candidate in place of S(m+1) ∘ L(m).
VerificationReport verify_shift_identities(unsigned m, std::size_t window, const ShiftWord& candidate);

}  // namespace ginv::shift
