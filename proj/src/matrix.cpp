#include "rdalg/matrix.hpp"

#include <algorithm>

#include "rdalg/error.hpp"

namespace rdalg {

const char* to_string(MatrixKind kind) noexcept {
  switch (kind) {
    case MatrixKind::Mult: return "mult";
    case MatrixKind::Column: return "column";
    case MatrixKind::Mixed: return "mixed";
    case MatrixKind::RiordanOrd: return "riordan_ord";
    case MatrixKind::Rd: return "rd";
    case MatrixKind::Product: return "product";
    case MatrixKind::Inverse: return "inverse";
    case MatrixKind::Diagonal: return "diagonal";
  }
  return "unknown";
}

namespace {

const Polynomial& zero_poly() {
  static const Polynomial z;
  return z;
}

void require_trunc(const DirSeries& a, unsigned size, const char* what) {
  if (a.trunc() < size)
    throw Error(ErrorCode::TruncationTooSmall, std::string(what) + ": series truncation " +
                                                   std::to_string(a.trunc()) + " below matrix size " +
                                                   std::to_string(size));
}

bool is_one(const Polynomial& p) { return p.is_constant() && p.constant() == 1; }

// [x^j] a^(ln k) for j <= limit, from the symbolic power series in psi.
DirSeries power_at_log(const DirSeries& power_psi, std::uint64_t k, unsigned limit) {
  DirSeries out(limit);
  const Polynomial ln_k = log_n_poly(k);
  const Symbol psi = Symbol::psi();
  for (unsigned j = 1; j <= limit; ++j)
    if (!power_psi[j].is_zero()) out.set(j, poly_substitute(power_psi[j], psi, ln_k));
  return out;
}

}  // namespace

DirMatrix::DirMatrix(MatrixKind kind, unsigned size, unsigned row_base, unsigned col_base)
    : kind_(kind), size_(size), row_base_(row_base), col_base_(col_base) {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "matrix size must be >= 1");
  if (row_base > 1 || col_base > 1) throw Error(ErrorCode::InvalidArgument, "index bases are 0 or 1");
}

const Polynomial& DirMatrix::operator()(unsigned row, unsigned col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? zero_poly() : it->second;
}

void DirMatrix::set(unsigned row, unsigned col, Polynomial value) {
  if (row < row_base_ || row > size_ || col < col_base_ || col > size_)
    throw Error(ErrorCode::InvalidArgument,
                "entry (" + std::to_string(row) + "," + std::to_string(col) + ") outside the matrix");
  if (value.is_zero())
    entries_.erase({row, col});
  else
    entries_[{row, col}] = std::move(value);
}

unsigned DirMatrix::last_nonzero_col() const noexcept {
  unsigned last = col_base_;
  for (const auto& [rc, v] : entries_) last = std::max(last, rc.second);
  return last;
}

bool same_entries(const DirMatrix& a, const DirMatrix& b) { return a.entries_ == b.entries_; }

DirMatrix identity_matrix(unsigned size) {
  DirMatrix m(MatrixKind::Rd, size, 1, 1);
  for (unsigned n = 1; n <= size; ++n) m.set(n, n, Polynomial(1));
  m.set_generators({DirSeries::identity(size), DirSeries::identity(size)});
  return m;
}

DirMatrix log_diagonal(unsigned size) {
  DirMatrix m(MatrixKind::Diagonal, size, 1, 1);
  for (unsigned n = 2; n <= size; ++n) m.set(n, n, log_n_poly(n));
  return m;
}

DirMatrix multiply(const DirMatrix& a, const DirMatrix& b) {
  unsigned size = std::min(a.size(), b.size());
  DirMatrix r(MatrixKind::Product, size, a.row_base(), b.col_base());
  std::vector<std::vector<std::pair<unsigned, const Polynomial*>>> b_rows(size + 1);
  for (const auto& [rc, v] : b.entries())
    if (rc.first <= size && rc.second <= size) b_rows[rc.first].emplace_back(rc.second, &v);
  std::map<std::pair<unsigned, unsigned>, Polynomial> acc;
  for (const auto& [rc, v] : a.entries()) {
    auto [row, mid] = rc;
    if (row > size || mid > size) continue;
    for (const auto& [col, w] : b_rows[mid]) acc[{row, col}] += v * *w;
  }
  for (auto& [rc, v] : acc)
    if (!v.is_zero()) r.set(rc.first, rc.second, std::move(v));
  return r;
}

DirSeries apply(const DirMatrix& m, const DirSeries& v) {
  unsigned size = std::min(m.size(), v.trunc());
  std::vector<Polynomial> out(size + 1);
  for (const auto& [rc, e] : m.entries()) {
    auto [row, col] = rc;
    if (row == 0 || row > size || col == 0 || col > size) continue;
    if (!v[col].is_zero()) out[row] += e * v[col];
  }
  return DirSeries(size, std::move(out));
}

Polynomial row_polynomial(const DirMatrix& m, unsigned row, Symbol x) {
  Polynomial r;
  for (unsigned k = m.col_base(); k <= m.size(); ++k) {
    const Polynomial& e = m(row, k);
    if (!e.is_zero()) r += e * Polynomial(Monomial(x, k), Rational(1));
  }
  return r;
}

DirMatrix build_mult(const DirSeries& a, unsigned size) {
  require_trunc(a, size, "build_mult");
  DirMatrix m(MatrixKind::Mult, size, 1, 1);
  for (unsigned k = 1; k <= size; ++k)
    for (unsigned j = 1; j * k <= size; ++j)
      if (!a[j].is_zero()) m.set(j * k, k, a[j]);
  return m;
}

namespace {

void fill_columns(DirMatrix& m, DirSeries first, const DirSeries& a, unsigned size) {
  // Column m is first o a^(m); a_1 = 0 makes column m vanish below 2^m.
  DirSeries column = std::move(first);
  for (unsigned col = 0; col <= size && !column.is_zero(); ++col) {
    for (unsigned n = 1; n <= size; ++n)
      if (!column[n].is_zero()) m.set(n, col, column[n]);
    column = dir_mul(column, a);
  }
}

}  // namespace

DirMatrix build_column(const DirSeries& a, unsigned size) {
  require_trunc(a, size, "build_column");
  if (!a[1].is_zero()) throw Error(ErrorCode::LeadingCoefficientNotZero, "<x|a> needs a_1 = 0");
  DirMatrix m(MatrixKind::Column, size, 0, 0);
  fill_columns(m, DirSeries::identity(size), a.truncated(size), size);
  return m;
}

DirMatrix build_mixed(const DirSeries& b, const DirSeries& a, unsigned size) {
  require_trunc(a, size, "build_mixed");
  require_trunc(b, size, "build_mixed");
  if (!a[1].is_zero()) throw Error(ErrorCode::LeadingCoefficientNotZero, "<b|a> needs a_1 = 0");
  DirMatrix m(MatrixKind::Mixed, size, 0, 0);
  fill_columns(m, b.truncated(size), a.truncated(size), size);
  return m;
}

DirMatrix build_riordan_ord(const OrdSeries& b, const OrdSeries& a, unsigned size) {
  if (a.trunc() < size || b.trunc() < size)
    throw Error(ErrorCode::TruncationTooSmall, "build_riordan_ord: series truncation below matrix size");
  if (!a[0].is_zero()) throw Error(ErrorCode::LeadingCoefficientNotZero, "Riordan array needs a_0 = 0");
  DirMatrix m(MatrixKind::RiordanOrd, size, 0, 0);
  OrdSeries column = b.truncated(size);
  const OrdSeries a_t = a.truncated(size);
  for (unsigned k = 0; k <= size; ++k) {
    for (unsigned n = k; n <= size; ++n)
      if (!column[n].is_zero()) m.set(n, k, column[n]);
    column = ord_mul(column, a_t);
  }
  return m;
}

DirMatrix build_rd(const DirSeries& b, const DirSeries& a, unsigned size) {
  require_trunc(a, size, "build_rd");
  require_trunc(b, size, "build_rd");
  if (!is_one(a[1])) throw Error(ErrorCode::LeadingCoefficientNotOne, "<b,a> needs a_1 = 1");
  if (!b[1].is_constant() || b[1].is_zero())
    throw Error(ErrorCode::NonUnitLeadingCoefficient, "<b,a> needs a nonzero rational b_1");
  DirMatrix m(MatrixKind::Rd, size, 1, 1);
  const DirSeries power = dir_pow_param(a.truncated(size));
  for (unsigned k = 1; k <= size; ++k) {
    unsigned limit = size / k;
    DirSeries column = dir_mul(b.truncated(limit), power_at_log(power, k, limit));
    for (unsigned j = 1; j <= limit; ++j)
      if (!column[j].is_zero()) m.set(j * k, k, column[j]);
  }
  m.set_generators({b.truncated(size), a.truncated(size)});
  return m;
}

DirSeries rd_action(const DirSeries& a, const DirSeries& b) {
  unsigned size = std::min(a.trunc(), b.trunc());
  if (!is_one(a[1])) throw Error(ErrorCode::LeadingCoefficientNotOne, "b_d o (a) needs a_1 = 1");
  const DirSeries power = dir_pow_param(a.truncated(size));
  std::vector<Polynomial> out(size + 1);
  for (unsigned d = 1; d <= size; ++d) {
    if (b[d].is_zero()) continue;
    unsigned limit = size / d;
    DirSeries column = power_at_log(power, d, limit);
    for (unsigned j = 1; j <= limit; ++j)
      if (!column[j].is_zero()) out[d * j] += b[d] * column[j];
  }
  return DirSeries(size, std::move(out));
}

DirMatrix rd_multiply(const DirMatrix& m1, const DirMatrix& m2, bool cross_check) {
  if (m1.kind() != MatrixKind::Rd || m2.kind() != MatrixKind::Rd || !m1.generators() || !m2.generators())
    throw Error(ErrorCode::KindMismatch, "group-law product needs two <b,a> matrices with known generators");
  if (m1.size() != m2.size()) throw Error(ErrorCode::KindMismatch, "group-law product needs equal sizes");
  const unsigned size = m1.size();
  const auto& [b, a] = *m1.generators();
  const auto& [f, g] = *m2.generators();
  DirSeries new_b = dir_mul(b, rd_action(a, f));
  DirSeries new_a = dir_mul(a, rd_action(a, g));
  DirMatrix result = build_rd(new_b, new_a, size);
  if (cross_check && !same_entries(result, multiply(m1, m2)))
    throw Error(ErrorCode::Internal, "group-law product disagrees with the raw matrix product");
  return result;
}

DirMatrix rd_inverse(const DirMatrix& m) {
  if (m.row_base() != m.col_base())
    throw Error(ErrorCode::InvalidArgument, "inverse needs a square index range");
  const unsigned size = m.size();
  const unsigned base = m.row_base();
  std::vector<std::vector<std::pair<unsigned, const Polynomial*>>> rows(size + 1);
  for (const auto& [rc, v] : m.entries()) {
    if (rc.second > rc.first)
      throw Error(ErrorCode::InvalidArgument, "inverse needs a lower-triangular matrix");
    if (rc.second < rc.first) rows[rc.first].emplace_back(rc.second, &v);
  }
  std::vector<Rational> inv_diag(size + 1);
  for (unsigned n = base; n <= size; ++n) {
    const Polynomial& d = m(n, n);
    if (!d.is_constant() || d.is_zero())
      throw Error(ErrorCode::SingularDiagonal,
                  "diagonal entry " + std::to_string(n) + " is not a nonzero rational constant");
    inv_diag[n] = 1 / d.constant();
  }
  DirMatrix x(MatrixKind::Inverse, size, base, base);
  // Column by column, rows in increasing order; X(d, k) is final before row n > d reads it.
  for (unsigned k = base; k <= size; ++k) {
    x.set(k, k, Polynomial(inv_diag[k]));
    for (unsigned n = k + 1; n <= size; ++n) {
      Polynomial acc;
      for (const auto& [d, v] : rows[n]) {
        if (d < k) continue;
        const Polynomial& xd = x(d, k);
        if (!xd.is_zero()) acc += *v * xd;
      }
      if (!acc.is_zero()) x.set(n, k, acc * (-inv_diag[n]));
    }
  }
  return x;
}

DirMatrix exp_conjugate(const DirMatrix& m, unsigned size) {
  if (size > 500) throw Error(ErrorCode::InvalidArgument, "exponential conjugation is capped at size 500");
  size = std::min(size, m.size());
  DirMatrix r(m.kind(), size, m.row_base(), m.col_base());
  for (const auto& [rc, v] : m.entries()) {
    auto [row, col] = rc;
    if (row > size || col > size) continue;
    r.set(row, col, v * make_rational(factorial(row), factorial(col)));
  }
  return r;
}

}  // namespace rdalg
