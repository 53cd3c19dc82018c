#pragma once

#include <cstdint>
#include <vector>

#include "rdalg/polynomial.hpp"

namespace rdalg {

/// Truncated ordinary power series: coefficients of x^0..x^N, multiplied by
/// the Cauchy product.
class OrdSeries {
 public:
  explicit OrdSeries(unsigned trunc);
  OrdSeries(unsigned trunc, std::vector<Polynomial> coeffs);

  static OrdSeries constant(unsigned trunc, const Polynomial& c);
  static OrdSeries variable(unsigned trunc);  // the series x

  unsigned trunc() const noexcept { return trunc_; }
  const Polynomial& operator[](unsigned n) const;
  void set(unsigned n, Polynomial value);
  const std::vector<Polynomial>& coeffs() const noexcept { return c_; }
  OrdSeries truncated(unsigned trunc) const;

  friend bool operator==(const OrdSeries&, const OrdSeries&) = default;

 private:
  unsigned trunc_;
  std::vector<Polynomial> c_;
};

/// Truncated series without constant term, coefficients of x^1..x^N,
/// multiplied by Dirichlet composition: c_n = sum_{d|n} a_d b_{n/d}.
class DirSeries {
 public:
  explicit DirSeries(unsigned trunc);
  /// coeffs[k] is the coefficient of x^k; coeffs[0] must be zero.
  DirSeries(unsigned trunc, std::vector<Polynomial> coeffs);

  static DirSeries identity(unsigned trunc);  // x
  static DirSeries monomial(unsigned trunc, unsigned k, const Polynomial& c = Polynomial(1));

  unsigned trunc() const noexcept { return trunc_; }
  const Polynomial& operator[](unsigned n) const;
  void set(unsigned n, Polynomial value);
  bool is_zero() const noexcept;
  DirSeries truncated(unsigned trunc) const;
  const std::vector<Polynomial>& coeffs() const noexcept { return c_; }

  DirSeries& operator+=(const DirSeries& b);
  DirSeries& operator-=(const DirSeries& b);
  DirSeries& operator*=(const Polynomial& c);
  friend DirSeries operator+(DirSeries a, const DirSeries& b) { return a += b; }
  friend DirSeries operator-(DirSeries a, const DirSeries& b) { return a -= b; }
  friend DirSeries operator*(DirSeries a, const Polynomial& c) { return a *= c; }
  friend DirSeries operator*(const Polynomial& c, DirSeries a) { return a *= c; }

  friend bool operator==(const DirSeries&, const DirSeries&) = default;

 private:
  unsigned trunc_;
  std::vector<Polynomial> c_;  // slot 0 unused and always zero
};

// Mixed truncations are resolved by taking the smaller one.

// -- Dirichlet algebra ------------------------------------------------------

DirSeries dir_mul(const DirSeries& a, const DirSeries& b);
/// b with a o b = x. a_1 must be a nonzero rational constant.
DirSeries dir_inverse(const DirSeries& a);
/// k-fold power; k = 0 gives x, k < 0 inverts first.
DirSeries dir_pow_int(const DirSeries& a, long k);
/// a(x^k) = x^k o a.
DirSeries dir_subst_xk(const DirSeries& a, unsigned k);
/// x f_0 + sum_{m>=1} f_m a^(m), with a_1 = 0. Exact up to
/// min(a.trunc, 2^(f.trunc+1) - 1).
DirSeries dir_apply_series(const OrdSeries& f, const DirSeries& a);
/// a^(psi) = sum_m C(psi, m) (a - x)^(m), with a_1 = 1.
DirSeries dir_pow_param(const DirSeries& a);
/// log o a = sum_m (-1)^(m+1) (a - x)^(m) / m, with a_1 = 1.
DirSeries dir_log(const DirSeries& b);
/// x + sum_m psi^m b^(m) / m!, with b_1 = 0.
DirSeries dir_exp_param(const DirSeries& b);
/// a* = sum ln n a_n x^n, ln n expanded over prime-log symbols.
DirSeries star_derivative(const DirSeries& a);
/// Coefficient n multiplied by n^k.
DirSeries twist_int(const DirSeries& a, long k);
/// Coefficient a_n placed at index m^n; a_0 lands on x.
DirSeries perfect_power_embed(const OrdSeries& a, unsigned m, unsigned trunc);

DirSeries series_substitute_symbol(const DirSeries& a, Symbol s, const Polynomial& r);
OrdSeries series_substitute_symbol(const OrdSeries& a, Symbol s, const Polynomial& r);

// -- Ordinary algebra -------------------------------------------------------

OrdSeries ord_add(const OrdSeries& a, const OrdSeries& b);
OrdSeries ord_mul(const OrdSeries& a, const OrdSeries& b);
/// a(b(x)); b_0 must be 0.
OrdSeries ord_compose(const OrdSeries& a, const OrdSeries& b);
/// 1/a; a_0 must be a nonzero rational constant.
OrdSeries ord_inverse_mul(const OrdSeries& a);
/// log a; a_0 must be 1.
OrdSeries ord_log(const OrdSeries& a);
/// exp b; b_0 must be 0.
OrdSeries ord_exp(const OrdSeries& b);
/// a^psi = exp(psi log a); a_0 must be 1.
OrdSeries ord_pow_param(const OrdSeries& a);

namespace detail {
// Fault injection for verifier self-tests: when set to n > 0, dir_mul adds 1
// to coefficient n of every product it returns. 0 disables.
void set_convolution_fault(unsigned index) noexcept;
unsigned convolution_fault() noexcept;
}  // namespace detail

}  // namespace rdalg
