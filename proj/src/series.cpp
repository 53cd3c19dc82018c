#include "rdalg/series.hpp"

#include <algorithm>
#include <atomic>
#include <functional>

#include "rdalg/error.hpp"

namespace rdalg {

namespace {

std::atomic<unsigned> g_convolution_fault{0};

const Polynomial& zero_poly() {
  static const Polynomial z;
  return z;
}

void require_trunc(unsigned trunc) {
  if (trunc == 0) throw Error(ErrorCode::InvalidArgument, "truncation order must be >= 1");
}

bool is_one(const Polynomial& p) { return p.is_constant() && p.constant() == 1; }

bool is_unit_constant(const Polynomial& p) { return p.is_constant() && !p.is_zero(); }

}  // namespace

namespace detail {
void set_convolution_fault(unsigned index) noexcept { g_convolution_fault.store(index); }
unsigned convolution_fault() noexcept { return g_convolution_fault.load(); }
}  // namespace detail

// ---------------------------------------------------------------------------
// OrdSeries

OrdSeries::OrdSeries(unsigned trunc) : trunc_(trunc), c_(trunc + 1) {}

OrdSeries::OrdSeries(unsigned trunc, std::vector<Polynomial> coeffs) : trunc_(trunc), c_(std::move(coeffs)) {
  c_.resize(trunc + 1);
}

OrdSeries OrdSeries::constant(unsigned trunc, const Polynomial& c) {
  OrdSeries s(trunc);
  s.c_[0] = c;
  return s;
}

OrdSeries OrdSeries::variable(unsigned trunc) {
  OrdSeries s(trunc);
  if (trunc >= 1) s.c_[1] = Polynomial(1);
  return s;
}

const Polynomial& OrdSeries::operator[](unsigned n) const { return n <= trunc_ ? c_[n] : zero_poly(); }

void OrdSeries::set(unsigned n, Polynomial value) {
  if (n > trunc_) throw Error(ErrorCode::InvalidArgument, "index beyond truncation");
  c_[n] = std::move(value);
}

OrdSeries OrdSeries::truncated(unsigned trunc) const {
  std::vector<Polynomial> c(c_.begin(), c_.begin() + std::min(trunc, trunc_) + 1);
  return OrdSeries(trunc, std::move(c));
}

// ---------------------------------------------------------------------------
// DirSeries

DirSeries::DirSeries(unsigned trunc) : trunc_(trunc), c_(trunc + 1) { require_trunc(trunc); }

DirSeries::DirSeries(unsigned trunc, std::vector<Polynomial> coeffs) : trunc_(trunc), c_(std::move(coeffs)) {
  require_trunc(trunc);
  c_.resize(trunc + 1);
  if (!c_[0].is_zero()) throw Error(ErrorCode::InvalidArgument, "Dirichlet series have no index 0");
}

DirSeries DirSeries::identity(unsigned trunc) { return monomial(trunc, 1); }

DirSeries DirSeries::monomial(unsigned trunc, unsigned k, const Polynomial& c) {
  DirSeries s(trunc);
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "Dirichlet series have no index 0");
  if (k <= trunc) s.c_[k] = c;
  return s;
}

const Polynomial& DirSeries::operator[](unsigned n) const {
  return (n >= 1 && n <= trunc_) ? c_[n] : zero_poly();
}

void DirSeries::set(unsigned n, Polynomial value) {
  if (n == 0 || n > trunc_) throw Error(ErrorCode::InvalidArgument, "index outside 1..trunc");
  c_[n] = std::move(value);
}

bool DirSeries::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

DirSeries DirSeries::truncated(unsigned trunc) const {
  std::vector<Polynomial> c(c_.begin(), c_.begin() + std::min(trunc, trunc_) + 1);
  return DirSeries(trunc, std::move(c));
}

DirSeries& DirSeries::operator+=(const DirSeries& b) {
  if (b.trunc_ < trunc_) *this = truncated(b.trunc_);
  for (unsigned n = 1; n <= trunc_; ++n) c_[n] += b.c_[n];
  return *this;
}

DirSeries& DirSeries::operator-=(const DirSeries& b) {
  if (b.trunc_ < trunc_) *this = truncated(b.trunc_);
  for (unsigned n = 1; n <= trunc_; ++n) c_[n] -= b.c_[n];
  return *this;
}

DirSeries& DirSeries::operator*=(const Polynomial& c) {
  for (auto& p : c_) p *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// Dirichlet algebra

DirSeries dir_mul(const DirSeries& a, const DirSeries& b) {
  unsigned n_max = std::min(a.trunc(), b.trunc());
  DirSeries c(n_max);
  std::vector<Polynomial> out(n_max + 1);
  for (unsigned d = 1; d <= n_max; ++d) {
    const Polynomial& ad = a[d];
    if (ad.is_zero()) continue;
    for (unsigned e = 1; d * e <= n_max; ++e) {
      const Polynomial& be = b[e];
      if (be.is_zero()) continue;
      out[d * e] += ad * be;
    }
  }
  if (unsigned fault = g_convolution_fault.load(std::memory_order_relaxed); fault != 0 && fault <= n_max)
    out[fault] += Polynomial(1);
  return DirSeries(n_max, std::move(out));
}

DirSeries dir_inverse(const DirSeries& a) {
  if (!is_unit_constant(a[1]))
    throw Error(ErrorCode::NonUnitLeadingCoefficient, "inverse needs a nonzero rational a_1");
  const unsigned n_max = a.trunc();
  Rational inv = 1 / a[1].constant();
  std::vector<Polynomial> b(n_max + 1);
  b[1] = Polynomial(inv);
  // Accumulate sum_{d|n, d>1} a_d b_{n/d} as soon as b_{n/d} is final.
  std::vector<Polynomial> acc(n_max + 1);
  for (unsigned q = 1; q <= n_max; ++q) {
    if (q > 1) b[q] = acc[q] * (-inv);
    if (b[q].is_zero()) continue;
    for (unsigned d = 2; d * q <= n_max; ++d) {
      if (a[d].is_zero()) continue;
      acc[d * q] += a[d] * b[q];
    }
  }
  return DirSeries(n_max, std::move(b));
}

DirSeries dir_pow_int(const DirSeries& a, long k) {
  if (k < 0) return dir_pow_int(dir_inverse(a), -k);
  DirSeries result = DirSeries::identity(a.trunc());
  DirSeries base = a;
  auto e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1u) result = dir_mul(result, base);
    e >>= 1u;
    if (e) base = dir_mul(base, base);
  }
  return result;
}

DirSeries dir_subst_xk(const DirSeries& a, unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "x^k substitution needs k >= 1");
  DirSeries r(a.trunc());
  for (unsigned j = 1; std::uint64_t(j) * k <= a.trunc(); ++j) r.set(j * k, a[j]);
  return r;
}

namespace {

// c(0) x + sum_{m>=1} c(m) d^(m), with d_1 = 0 so the powers die out after
// log2 N steps.
DirSeries power_ladder_sum(const DirSeries& d, unsigned max_m, const std::function<Polynomial(unsigned)>& coeff) {
  DirSeries result = DirSeries::identity(d.trunc()) * coeff(0);
  DirSeries power = d;
  for (unsigned m = 1; m <= max_m && !power.is_zero(); ++m) {
    Polynomial c = coeff(m);
    if (!c.is_zero()) result += power * c;
    power = dir_mul(power, d);
  }
  return result;
}

unsigned ladder_depth(unsigned trunc) {
  unsigned m = 0;
  while ((std::uint64_t(1) << (m + 1)) <= trunc) ++m;
  return m;
}

DirSeries shifted_from_one(const DirSeries& a, const char* op) {
  if (!is_one(a[1])) throw Error(ErrorCode::LeadingCoefficientNotOne, std::string(op) + " needs a_1 = 1");
  return a - DirSeries::identity(a.trunc());
}

}  // namespace

DirSeries dir_apply_series(const OrdSeries& f, const DirSeries& a) {
  if (!a[1].is_zero()) throw Error(ErrorCode::LeadingCoefficientNotZero, "series application needs a_1 = 0");
  unsigned n_max = a.trunc();
  if (f.trunc() < 63) n_max = static_cast<unsigned>(std::min<std::uint64_t>(n_max, (std::uint64_t(1) << (f.trunc() + 1)) - 1));
  DirSeries base = a.truncated(n_max);
  return power_ladder_sum(base, f.trunc(), [&f](unsigned m) { return f[m]; });
}

DirSeries dir_pow_param(const DirSeries& a) {
  DirSeries d = shifted_from_one(a, "parametric power");
  const Symbol psi = Symbol::psi();
  return power_ladder_sum(d, ladder_depth(a.trunc()), [psi](unsigned m) { return binom_poly(psi, m); });
}

DirSeries dir_log(const DirSeries& a) {
  DirSeries d = shifted_from_one(a, "logarithm");
  return power_ladder_sum(d, ladder_depth(a.trunc()), [](unsigned m) {
    if (m == 0) return Polynomial();
    return Polynomial(Rational(m % 2 ? 1 : -1, m));
  });
}

DirSeries dir_exp_param(const DirSeries& b) {
  if (!b[1].is_zero()) throw Error(ErrorCode::LeadingCoefficientNotZero, "exponential needs b_1 = 0");
  const Symbol psi = Symbol::psi();
  return power_ladder_sum(b, ladder_depth(b.trunc()), [psi](unsigned m) {
    return Polynomial(Monomial(psi, m), make_rational(Integer(1), factorial(m)));
  });
}

DirSeries star_derivative(const DirSeries& a) {
  DirSeries r(a.trunc());
  for (unsigned n = 2; n <= a.trunc(); ++n)
    if (!a[n].is_zero()) r.set(n, a[n] * log_n_poly(n));
  return r;
}

DirSeries twist_int(const DirSeries& a, long k) {
  DirSeries r(a.trunc());
  for (unsigned n = 1; n <= a.trunc(); ++n) {
    if (a[n].is_zero()) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), n, static_cast<unsigned long>(k < 0 ? -k : k));
    Rational factor = k < 0 ? make_rational(Integer(1), p) : Rational(p);
    r.set(n, a[n] * factor);
  }
  return r;
}

DirSeries perfect_power_embed(const OrdSeries& a, unsigned m, unsigned trunc) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "perfect-power embedding needs m >= 2");
  // Only a_0..a_K are known, so indices at or beyond m^(K+1) are not exact.
  std::uint64_t limit = 1;
  for (unsigned k = 0; k <= a.trunc() && limit <= trunc; ++k) limit *= m;
  unsigned n_max = static_cast<unsigned>(std::min<std::uint64_t>(trunc, limit - 1));
  DirSeries r(n_max);
  std::uint64_t index = 1;
  for (unsigned k = 0; index <= n_max; ++k, index *= m) r.set(static_cast<unsigned>(index), a[k]);
  return r;
}

DirSeries series_substitute_symbol(const DirSeries& a, Symbol s, const Polynomial& r) {
  DirSeries out(a.trunc());
  for (unsigned n = 1; n <= a.trunc(); ++n)
    if (!a[n].is_zero()) out.set(n, poly_substitute(a[n], s, r));
  return out;
}

OrdSeries series_substitute_symbol(const OrdSeries& a, Symbol s, const Polynomial& r) {
  OrdSeries out(a.trunc());
  for (unsigned n = 0; n <= a.trunc(); ++n)
    if (!a[n].is_zero()) out.set(n, poly_substitute(a[n], s, r));
  return out;
}

// ---------------------------------------------------------------------------
// Ordinary algebra

OrdSeries ord_add(const OrdSeries& a, const OrdSeries& b) {
  unsigned n_max = std::min(a.trunc(), b.trunc());
  OrdSeries r(n_max);
  for (unsigned n = 0; n <= n_max; ++n) r.set(n, a[n] + b[n]);
  return r;
}

OrdSeries ord_mul(const OrdSeries& a, const OrdSeries& b) {
  unsigned n_max = std::min(a.trunc(), b.trunc());
  std::vector<Polynomial> out(n_max + 1);
  for (unsigned i = 0; i <= n_max; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= n_max; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return OrdSeries(n_max, std::move(out));
}

OrdSeries ord_compose(const OrdSeries& a, const OrdSeries& b) {
  if (!b[0].is_zero()) throw Error(ErrorCode::LeadingCoefficientNotZero, "composition needs b_0 = 0");
  unsigned n_max = std::min(a.trunc(), b.trunc());
  OrdSeries result = OrdSeries::constant(n_max, a[n_max]);
  for (unsigned k = n_max; k-- > 0;) {
    result = ord_mul(result, b);
    result.set(0, result[0] + a[k]);
  }
  return result;
}

OrdSeries ord_inverse_mul(const OrdSeries& a) {
  if (!is_unit_constant(a[0]))
    throw Error(ErrorCode::NonUnitLeadingCoefficient, "reciprocal needs a nonzero rational a_0");
  Rational inv = 1 / a[0].constant();
  OrdSeries c(a.trunc());
  c.set(0, Polynomial(inv));
  for (unsigned n = 1; n <= a.trunc(); ++n) {
    Polynomial acc;
    for (unsigned k = 1; k <= n; ++k)
      if (!a[k].is_zero() && !c[n - k].is_zero()) acc += a[k] * c[n - k];
    c.set(n, acc * (-inv));
  }
  return c;
}

OrdSeries ord_log(const OrdSeries& a) {
  if (!is_one(a[0])) throw Error(ErrorCode::ConstantTermNotOne, "logarithm needs a_0 = 1");
  OrdSeries l(a.trunc());
  for (unsigned n = 1; n <= a.trunc(); ++n) {
    Polynomial acc = a[n] * Rational(n);
    for (unsigned k = 1; k < n; ++k)
      if (!l[k].is_zero() && !a[n - k].is_zero()) acc -= l[k] * a[n - k] * Rational(k);
    l.set(n, acc * Rational(1, n));
  }
  return l;
}

OrdSeries ord_exp(const OrdSeries& b) {
  if (!b[0].is_zero()) throw Error(ErrorCode::LeadingCoefficientNotZero, "exponential needs b_0 = 0");
  OrdSeries e(b.trunc());
  e.set(0, Polynomial(1));
  for (unsigned n = 1; n <= b.trunc(); ++n) {
    Polynomial acc;
    for (unsigned k = 1; k <= n; ++k)
      if (!b[k].is_zero() && !e[n - k].is_zero()) acc += b[k] * e[n - k] * Rational(k);
    e.set(n, acc * Rational(1, n));
  }
  return e;
}

OrdSeries ord_pow_param(const OrdSeries& a) {
  OrdSeries l = ord_log(a);
  OrdSeries scaled(l.trunc());
  const Polynomial psi(Symbol::psi());
  for (unsigned n = 1; n <= l.trunc(); ++n) scaled.set(n, l[n] * psi);
  return ord_exp(scaled);
}

}  // namespace rdalg
