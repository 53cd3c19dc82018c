#include "rdalg/transforms.hpp"

#include "rdalg/arith.hpp"
#include "rdalg/error.hpp"

namespace rdalg {

namespace {

const Polynomial kPhi{Symbol::phi()};
const Polynomial kBeta{Symbol::beta()};

Polynomial binomial(unsigned m, unsigned k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), m, k);
  return Polynomial(Rational(c));
}

// phi * (u / psi)(phi + shift); u must be divisible by psi.
Polynomial lagrange_coefficient(const Polynomial& u, const Polynomial& shift) {
  if (u.is_zero()) return {};
  const Symbol psi = Symbol::psi();
  Polynomial q;
  try {
    q = poly_divide_by_symbol(u, psi);
  } catch (const Error&) {
    throw Error(ErrorCode::Internal, "power coefficient is not divisible by psi: " + u.to_string());
  }
  return kPhi * poly_substitute(q, psi, kPhi + shift);
}

void require_free_of_parameters(const DirSeries& a) {
  for (unsigned n = 1; n <= a.trunc(); ++n)
    if (a[n].contains(Symbol::phi()) || a[n].contains(Symbol::psi()))
      throw Error(ErrorCode::InvalidArgument, "base series must not contain phi or psi");
}

}  // namespace

// ---------------------------------------------------------------------------
// Special series

DirSeries zeta(unsigned trunc) {
  DirSeries z(trunc);
  for (unsigned n = 1; n <= trunc; ++n) z.set(n, Polynomial(1));
  return z;
}

DirSeries prime_indicator(unsigned trunc) {
  DirSeries p(trunc);
  for (unsigned n = 2; n <= trunc; ++n)
    if (is_prime(n)) p.set(n, Polynomial(1));
  return p;
}

DirSeries eps_param(unsigned trunc) { return dir_exp_param(prime_indicator(trunc)); }

DirSeries eps(unsigned trunc) {
  return series_substitute_symbol(eps_param(trunc), Symbol::psi(), Polynomial(1));
}

OrdSeries ord_exp_x(unsigned trunc) {
  OrdSeries e(trunc);
  for (unsigned n = 0; n <= trunc; ++n) e.set(n, Polynomial(make_rational(Integer(1), factorial(n))));
  return e;
}

OrdSeries ord_one_plus_x(unsigned trunc) {
  OrdSeries s = OrdSeries::constant(trunc, Polynomial(1));
  if (trunc >= 1) s.set(1, Polynomial(1));
  return s;
}

OrdSeries ord_geometric(unsigned trunc) {
  OrdSeries s(trunc);
  for (unsigned n = 0; n <= trunc; ++n) s.set(n, Polynomial(1));
  return s;
}

// ---------------------------------------------------------------------------
// Lift

DirSeries lift_theorem1(const OrdSeries& a, unsigned trunc) {
  if (!(a[0].is_constant() && a[0].constant() == 1))
    throw Error(ErrorCode::ConstantTermNotOne, "lift needs a_0 = 1");
  unsigned depth = 0;
  while ((std::uint64_t(1) << (depth + 1)) <= trunc) ++depth;
  if (a.trunc() < depth)
    throw Error(ErrorCode::TruncationTooSmall, "lift to order " + std::to_string(trunc) + " needs a known through x^" +
                                                   std::to_string(depth));
  const OrdSeries power = ord_pow_param(a.truncated(std::max(depth, 1u)));
  DirSeries out(trunc);
  for (unsigned n = 1; n <= trunc; ++n) {
    Polynomial c(1);
    for (const auto& [p, m] : factorize(n)) c *= power[m];
    out.set(n, std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lagrange series

LagrangeFamily lagrange_dir(const DirSeries& a, const Polynomial& beta) {
  require_free_of_parameters(a);
  const DirSeries power = dir_pow_param(a);
  DirSeries derived(a.trunc());
  derived.set(1, Polynomial(1));
  for (unsigned n = 2; n <= a.trunc(); ++n) derived.set(n, lagrange_coefficient(power[n], beta * log_n_poly(n)));
  return {a, beta, std::move(derived)};
}

DirSeries lagrange_dir_middle(const DirSeries& a, const Polynomial& beta) {
  require_free_of_parameters(a);
  const Symbol psi = Symbol::psi();
  DirSeries shifted = DirSeries::identity(a.trunc()) - star_derivative(dir_log(a)) * beta;
  DirSeries member = dir_mul(shifted, dir_pow_param(a));
  DirSeries out(a.trunc());
  for (unsigned n = 1; n <= a.trunc(); ++n)
    out.set(n, poly_substitute(member[n], psi, kPhi + beta * log_n_poly(n)));
  return out;
}

OrdSeries lagrange_ord(const OrdSeries& a, const Polynomial& beta) {
  const OrdSeries power = ord_pow_param(a);
  OrdSeries out(a.trunc());
  out.set(0, Polynomial(1));
  for (unsigned n = 1; n <= a.trunc(); ++n)
    out.set(n, lagrange_coefficient(power[n], beta * Rational(n)));
  return out;
}

// ---------------------------------------------------------------------------
// Abel analogs

std::optional<std::string> first_difference(const Polynomial& p, const Polynomial& q) {
  Polynomial d = p - q;
  if (d.is_zero()) return std::nullopt;
  const auto& [m, c] = *d.terms().begin();
  return Polynomial(m, c).to_string();
}

namespace {

IdentityOutcome compare(const std::pair<Polynomial, Polynomial>& sides) {
  IdentityOutcome o;
  o.counterexample = first_difference(sides.first, sides.second);
  o.holds = !o.counterexample;
  return o;
}

// t (t + shift)^{s-1}, with the whole factor equal to 1 when s = 0.
Polynomial shifted_kernel(const Polynomial& t, const Polynomial& shift, unsigned s) {
  if (s == 0) return Polynomial(1);
  return t * (t + shift).pow(s - 1);
}

}  // namespace

Polynomial abel_kernel(const Polynomial& t, std::uint64_t n) { return shifted_kernel(t, log_n_poly(n), s_of(n)); }

std::pair<Polynomial, Polynomial> abel_sides(std::uint64_t n, unsigned which) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "Abel analogs need n >= 2");
  if (which > 3) throw Error(ErrorCode::InvalidArgument, "identity index must be 0..3");
  const Polynomial ln_n = log_n_poly(n);
  const unsigned s_n = s_of(n);
  Polynomial lhs;
  switch (which) {
    case 0: lhs = shifted_kernel(kPhi + kBeta, ln_n, s_n); break;
    case 1: lhs = (kPhi + kBeta + ln_n).pow(s_n); break;
    case 2: lhs = ln_n * abel_kernel(kPhi, n); break;
    case 3: lhs = kPhi.pow(s_n); break;
  }
  Polynomial rhs;
  for (std::uint64_t d : divisors(n)) {
    const std::uint64_t e = n / d;
    const Polynomial ln_d = log_n_poly(d);
    Polynomial term;
    switch (which) {
      case 0: term = abel_kernel(kPhi, d) * abel_kernel(kBeta, e); break;
      case 1: term = (kPhi + ln_d).pow(s_of(d)) * abel_kernel(kBeta, e); break;
      case 2: term = kPhi.pow(s_of(d)) * ln_d * ln_n.pow(s_of(e)); break;
      case 3: term = abel_kernel(kPhi, d) * (-ln_d).pow(s_of(e)); break;
    }
    rhs += term * binom_f(n, d);
  }
  return {lhs, rhs};
}

std::pair<Polynomial, Polynomial> abel_classic_sides(std::uint64_t p, unsigned m, unsigned which) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "classic Abel identities need m >= 1");
  if (which > 3) throw Error(ErrorCode::InvalidArgument, "identity index must be 0..3");
  const Polynomial a(Symbol::prime_log(p));
  auto ka = [&a](unsigned k) { return a * Rational(k); };
  Polynomial lhs;
  switch (which) {
    case 0: lhs = shifted_kernel(kPhi + kBeta, ka(m), m); break;
    case 1: lhs = (kPhi + kBeta + ka(m)).pow(m); break;
    case 2: lhs = ka(m) * shifted_kernel(kPhi, ka(m), m); break;
    case 3: lhs = kPhi.pow(m); break;
  }
  Polynomial rhs;
  for (unsigned k = 0; k <= m; ++k) {
    Polynomial term;
    switch (which) {
      case 0: term = shifted_kernel(kPhi, ka(k), k) * shifted_kernel(kBeta, ka(m - k), m - k); break;
      case 1: term = (kPhi + ka(k)).pow(k) * shifted_kernel(kBeta, ka(m - k), m - k); break;
      case 2: term = kPhi.pow(k) * ka(k) * ka(m).pow(m - k); break;
      case 3: term = shifted_kernel(kPhi, ka(k), k) * (-ka(k)).pow(m - k); break;
    }
    rhs += term * binomial(m, k);
  }
  return {lhs, rhs};
}

bool AbelReport::all_hold() const noexcept {
  for (const auto& i : identities)
    if (!i.holds) return false;
  return true;
}

AbelReport abel_check(std::uint64_t n) {
  AbelReport r;
  r.n = n;
  for (unsigned i = 0; i < 4; ++i) r.identities[i] = compare(abel_sides(n, i));
  return r;
}

std::array<IdentityOutcome, 4> abel_classic_check(std::uint64_t p, unsigned m) {
  std::array<IdentityOutcome, 4> out;
  for (unsigned i = 0; i < 4; ++i) out[i] = compare(abel_classic_sides(p, m, i));
  return out;
}

// ---------------------------------------------------------------------------
// u_n family

bool UFamilyReport::all_hold() const noexcept {
  auto ok = [](const Line& l) { return l.forward.holds && l.inverse.holds && l.lagrange.holds; };
  for (const auto& l : lines)
    if (!ok(l)) return false;
  for (const auto& l : prime_power_lines)
    if (!ok(l)) return false;
  return true;
}

UFamilyReport u_family_check(const OrdSeries& a, const Rational& beta_value, unsigned trunc) {
  const Symbol psi = Symbol::psi();
  const Polynomial beta(beta_value);
  const DirSeries power = lift_theorem1(a, trunc);

  std::vector<Polynomial> u(trunc + 1);  // u_n(psi)
  for (unsigned n = 1; n <= trunc; ++n) u[n] = power[n] * Rational(f_of(n));
  auto u_at = [&](std::uint64_t n, const Polynomial& x) { return poly_substitute(u[n], psi, x); };
  // phi/(phi + beta ln n) u_n(phi + beta ln n), equal to 1 at n = 1.
  std::vector<Polynomial> lag(trunc + 1);
  lag[1] = Polynomial(1);
  for (unsigned n = 2; n <= trunc; ++n) lag[n] = lagrange_coefficient(u[n], beta * log_n_poly(n));

  const DirSeries base = series_substitute_symbol(power, psi, Polynomial(1));
  const DirSeries derived = lagrange_dir(base, beta).derived;

  UFamilyReport report;
  for (unsigned n = 2; n <= trunc; ++n) {
    const Polynomial ln_n = log_n_poly(n);
    Polynomial fwd_rhs, inv_rhs;
    for (std::uint64_t d : divisors(n)) {
      const std::uint64_t e = n / d;
      const Rational w = binom_f(n, d);
      const Polynomial ln_d = log_n_poly(d);
      if (!ln_d.is_zero()) fwd_rhs += u_at(d, kPhi) * ln_d * u_at(e, beta * ln_n) * w;
      inv_rhs += lag[d] * u_at(e, -(beta * ln_d)) * w;
    }
    UFamilyReport::Line line{n, {}, {}, {}};
    line.forward = compare({ln_n * lag[n], fwd_rhs});
    line.inverse = compare({u_at(n, kPhi), inv_rhs});
    line.lagrange = compare({lag[n] * make_rational(Integer(1), f_of(n)), derived[n]});
    report.lines.push_back(std::move(line));
  }

  // n = p^m: the same relations written with s_k(x) = k! [x^k] a^x.
  unsigned max_m = 0;
  while ((std::uint64_t(2) << max_m) <= trunc) ++max_m;
  const OrdSeries ord_power = ord_pow_param(a.truncated(std::max(max_m, 1u)));
  std::vector<Polynomial> s(max_m + 1);
  for (unsigned k = 0; k <= max_m; ++k) s[k] = ord_power[k] * Rational(factorial(k));
  auto s_at = [&](unsigned k, const Polynomial& x) { return poly_substitute(s[k], psi, x); };
  for (std::uint64_t p = 2; p <= trunc; ++p) {
    if (!is_prime(p)) continue;
    const Polynomial alpha = beta * Polynomial(Symbol::prime_log(p));
    std::uint64_t n = p;
    for (unsigned m = 1; n <= trunc; ++m, n *= p) {
      auto lag_s = [&](unsigned k) {
        return k == 0 ? Polynomial(1) : lagrange_coefficient(s[k], alpha * Rational(k));
      };
      Polynomial fwd_rhs, inv_rhs;
      for (unsigned k = 0; k <= m; ++k) {
        const Polynomial c = binomial(m, k);
        fwd_rhs += c * s_at(k, kPhi) * Rational(k) * s_at(m - k, alpha * Rational(m));
        inv_rhs += c * lag_s(k) * s_at(m - k, -(alpha * Rational(k)));
      }
      UFamilyReport::Line line{n, {}, {}, {}};
      line.forward = compare({lag_s(m) * Rational(m), fwd_rhs});
      line.inverse = compare({s_at(m, kPhi), inv_rhs});
      // The prime-power coefficient of the lifted family is s_m / m!.
      line.lagrange = compare({u[n], s[m]});
      report.prime_power_lines.push_back(std::move(line));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Basis expansion

std::vector<Polynomial> expand_over_basis(const DirSeries& b, const DirSeries& a, unsigned trunc) {
  const unsigned size = std::min({trunc, a.trunc(), b.trunc()});
  const Symbol psi = Symbol::psi();
  const DirSeries power = dir_pow_param(a.truncated(size));
  std::vector<Polynomial> c(size + 1);
  for (unsigned n = 1; n <= size; ++n) {
    const Polynomial ln_n = log_n_poly(n);
    for (std::uint64_t d : divisors(n))
      if (!b[d].is_zero() && !power[n / d].is_zero())
        c[n] += b[d] * poly_substitute(power[n / d], psi, ln_n);
  }
  return c;
}

DirSeries reconstruct_from_basis(const std::vector<Polynomial>& c, const DirSeries& a, unsigned trunc) {
  const unsigned size = std::min<unsigned>({trunc, a.trunc(), static_cast<unsigned>(c.size() - 1)});
  const Symbol psi = Symbol::psi();
  const DirSeries power = dir_pow_param(a.truncated(size));
  std::vector<Polynomial> sum(size + 1);
  for (unsigned n = 1; n <= size; ++n) {
    if (c[n].is_zero()) continue;
    const Polynomial minus_ln_n = -log_n_poly(n);
    for (unsigned j = 1; j * n <= size; ++j)
      if (!power[j].is_zero()) sum[j * n] += c[n] * poly_substitute(power[j], psi, minus_ln_n);
  }
  const DirSeries shifted = DirSeries::identity(size) - star_derivative(dir_log(a.truncated(size)));
  return dir_mul(shifted, DirSeries(size, std::move(sum)));
}

}  // namespace rdalg
