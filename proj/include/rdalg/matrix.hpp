#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rdalg/polynomial.hpp"
#include "rdalg/series.hpp"

namespace rdalg {

enum class MatrixKind {
  Mult,        // <a, x>: entry(n, k) = a_{n/k}
  Column,      // <x | a>: column m is a^(m)
  Mixed,       // <b | a> = <b, x><x | a>
  RiordanOrd,  // ordinary Riordan array (b, a)
  Rd,          // Riordan-Dirichlet <b, a>
  Product,
  Inverse,
  Diagonal,
};

const char* to_string(MatrixKind kind) noexcept;

/// Generators (b, a) of a Riordan-Dirichlet matrix <b, a>.
struct RdGenerators {
  DirSeries b;
  DirSeries a;
};

/// Finite sparse truncation of one of the matrix families. Rows run over
/// row_base..size and columns over col_base..size; Dirichlet-indexed axes
/// start at 1, ordinary axes at 0. Absent entries are zero.
class DirMatrix {
 public:
  DirMatrix(MatrixKind kind, unsigned size, unsigned row_base, unsigned col_base);

  MatrixKind kind() const noexcept { return kind_; }
  unsigned size() const noexcept { return size_; }
  unsigned row_base() const noexcept { return row_base_; }
  unsigned col_base() const noexcept { return col_base_; }

  const Polynomial& operator()(unsigned row, unsigned col) const;
  void set(unsigned row, unsigned col, Polynomial value);
  const std::map<std::pair<unsigned, unsigned>, Polynomial>& entries() const noexcept { return entries_; }

  /// Largest column holding a nonzero entry (col_base when empty).
  unsigned last_nonzero_col() const noexcept;

  const std::optional<RdGenerators>& generators() const noexcept { return generators_; }
  void set_generators(RdGenerators g) { generators_ = std::move(g); }
  void set_kind(MatrixKind kind) noexcept { kind_ = kind; }

  /// Structural equality of entries over the shared index range; kind and
  /// generators are ignored.
  friend bool same_entries(const DirMatrix& a, const DirMatrix& b);

 private:
  MatrixKind kind_;
  unsigned size_;
  unsigned row_base_;
  unsigned col_base_;
  std::map<std::pair<unsigned, unsigned>, Polynomial> entries_;
  std::optional<RdGenerators> generators_;
};

DirMatrix identity_matrix(unsigned size);
/// diag(ln 1, ln 2, ..., ln N), the matrix of the star derivative.
DirMatrix log_diagonal(unsigned size);

/// Dense product over the shared inner index range.
DirMatrix multiply(const DirMatrix& a, const DirMatrix& b);
/// Applies M to the coefficient vector of a Dirichlet series.
DirSeries apply(const DirMatrix& m, const DirSeries& v);
/// Row n read as the polynomial sum_k M(n, k) x^k.
Polynomial row_polynomial(const DirMatrix& m, unsigned row, Symbol x);

DirMatrix build_mult(const DirSeries& a, unsigned size);
DirMatrix build_column(const DirSeries& a, unsigned size);
DirMatrix build_mixed(const DirSeries& b, const DirSeries& a, unsigned size);
DirMatrix build_riordan_ord(const OrdSeries& b, const OrdSeries& a, unsigned size);
DirMatrix build_rd(const DirSeries& b, const DirSeries& a, unsigned size);

/// b_d o (a): coefficient n is sum_{d|n} b_d [x^{n/d}] a^(ln d). Needs a_1 = 1.
DirSeries rd_action(const DirSeries& a, const DirSeries& b);

/// Group-law product <b o f_d o (a), a o g_d o (a)>. With cross_check set
/// the raw matrix product is computed too and a mismatch raises Internal.
#ifdef NDEBUG
inline constexpr bool kRdCrossCheckDefault = false;
#else
inline constexpr bool kRdCrossCheckDefault = true;
#endif
DirMatrix rd_multiply(const DirMatrix& m1, const DirMatrix& m2, bool cross_check = kRdCrossCheckDefault);

/// Solves M X = I over the divisibility order. Diagonal entries must be
/// nonzero rational constants.
DirMatrix rd_inverse(const DirMatrix& m);

/// Entry (n, k) -> n! M(n, k) / k! for n, k <= size (size <= 500).
DirMatrix exp_conjugate(const DirMatrix& m, unsigned size);

}  // namespace rdalg
