#include "rdalg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include <json.hpp>

#include "rdalg/arith.hpp"
#include "rdalg/error.hpp"
#include "rdalg/expr.hpp"
#include "rdalg/io.hpp"
#include "rdalg/matrix.hpp"
#include "rdalg/random.hpp"
#include "rdalg/transforms.hpp"

namespace rdalg {

namespace {

using Lines = std::vector<CheckLine>;
using Diff = std::optional<std::string>;

struct Task {
  std::string id;  // reported when the task throws
  std::uint64_t n;
  std::function<Lines()> run;
};

const Symbol kPsi = Symbol::psi();
const Polynomial kPhi{Symbol::phi()};
const Polynomial kBeta{Symbol::beta()};

CheckLine line(std::string id, std::uint64_t n, const Diff& diff) {
  return {std::move(id), n, !diff, diff.value_or("")};
}

Lines single(std::string id, std::uint64_t n, const Diff& diff) { return {line(std::move(id), n, diff)}; }

template <class S>
Diff series_diff(const S& a, const S& b) {
  const unsigned hi = std::max(a.trunc(), b.trunc());
  for (unsigned n = 0; n <= hi; ++n)
    if (auto d = first_difference(a[n], b[n])) return "x^" + std::to_string(n) + ": " + *d;
  return std::nullopt;
}

Diff matrix_diff(const DirMatrix& a, const DirMatrix& b) {
  std::set<std::pair<unsigned, unsigned>> keys;
  for (const auto& e : a.entries()) keys.insert(e.first);
  for (const auto& e : b.entries()) keys.insert(e.first);
  for (const auto& [r, c] : keys)
    if (auto d = first_difference(a(r, c), b(r, c)))
      return "(" + std::to_string(r) + "," + std::to_string(c) + "): " + *d;
  return std::nullopt;
}

template <class F>
Diff first_of(Diff d, F next) {
  return d ? d : next();
}

Diff poly_diff(const Polynomial& a, const Polynomial& b) { return first_difference(a, b); }

Diff check(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

DirSeries at_psi(const DirSeries& s, const Polynomial& value) { return series_substitute_symbol(s, kPsi, value); }

class Bounds {
 public:
  explicit Bounds(std::optional<unsigned> bound) : bound_(bound) {}
  unsigned operator()(unsigned fallback, unsigned cap) const {
    if (!bound_) return fallback;
    return std::clamp(*bound_, 2u, cap);
  }

 private:
  std::optional<unsigned> bound_;
};

struct Context {
  Bounds bounds;
  std::uint64_t seed;
  SeriesRng rng(std::uint64_t salt) const { return SeriesRng(seed * 1000003u + salt); }
};

// -- pow ------------------------------------------------------------------------

void pow_suite(const Context& ctx, std::vector<Task>& out) {
  const unsigned n = ctx.bounds(64, 128);
  for (unsigned k = 1; k <= 5; ++k) {
    out.push_back({"pow.group." + std::to_string(k), n, [=] {
                     DirSeries a = ctx.rng(100 + k).dir(n, 1);
                     const DirSeries p = dir_pow_param(a);
                     return single("pow.group." + std::to_string(k), n,
                                   series_diff(dir_mul(at_psi(p, kPhi), at_psi(p, kBeta)), at_psi(p, kPhi + kBeta)));
                   }});
  }
  for (unsigned k = 1; k <= 3; ++k) {
    out.push_back({"pow.commute." + std::to_string(k), n, [=] {
                     SeriesRng rng = ctx.rng(200 + k);
                     DirSeries a = rng.dir(n, rng.small_rational()), b = rng.dir(n, rng.small_rational());
                     return single("pow.commute." + std::to_string(k), n, series_diff(dir_mul(a, b), dir_mul(b, a)));
                   }});
    out.push_back({"pow.inverse." + std::to_string(k), n, [=] {
                     SeriesRng rng = ctx.rng(300 + k);
                     DirSeries a = rng.dir(n, make_rational(k + 1, 2));
                     return single("pow.inverse." + std::to_string(k), n,
                                   series_diff(dir_mul(a, dir_inverse(a)), DirSeries::identity(n)));
                   }});
  }
  out.push_back({"pow.int_param", n, [=] {
                   DirSeries a = ctx.rng(400).dir(n, 1);
                   const DirSeries p = dir_pow_param(a);
                   Lines lines;
                   for (long k = -3; k <= 4; ++k) {
                     Diff d = series_diff(dir_pow_int(a, k), at_psi(p, Polynomial(k)));
                     if (!d && k < 0) d = series_diff(dir_pow_int(a, k), dir_pow_int(dir_inverse(a), -k));
                     lines.push_back(line("pow.int_param.k" + std::to_string(k), n, d));
                   }
                   return lines;
                 }});
  const unsigned n_iter = ctx.bounds(32, 64);
  out.push_back({"pow.iterated", n_iter, [=] {
                   DirSeries a = ctx.rng(500).dir(n_iter, 1);
                   const DirSeries p = dir_pow_param(a);
                   Lines lines;
                   for (long phi : {2L, 3L}) {
                     const DirSeries lhs = at_psi(dir_pow_param(dir_pow_int(a, phi)), kBeta);
                     lines.push_back(line("pow.iterated.phi" + std::to_string(phi), n_iter,
                                          series_diff(lhs, at_psi(p, kBeta * Rational(phi)))));
                   }
                   return lines;
                 }});
  const unsigned n_mul = ctx.bounds(48, 96);
  out.push_back({"pow.product_power", n_mul, [=] {
                   SeriesRng rng = ctx.rng(600);
                   DirSeries a = rng.dir(n_mul, 1), b = rng.dir(n_mul, 1);
                   const DirSeries lhs = at_psi(dir_pow_param(dir_mul(a, b)), kPhi);
                   const DirSeries rhs = dir_mul(at_psi(dir_pow_param(a), kPhi), at_psi(dir_pow_param(b), kPhi));
                   return single("pow.product_power", n_mul, series_diff(lhs, rhs));
                 }});
  out.push_back({"pow.subst_xk", n, [=] {
                   DirSeries a = ctx.rng(700).dir(n, 2);
                   Lines lines;
                   for (unsigned k : {2u, 3u, 5u})
                     lines.push_back(line("pow.subst_xk.k" + std::to_string(k), n,
                                          series_diff(dir_subst_xk(a, k), dir_mul(DirSeries::monomial(n, k), a))));
                   return lines;
                 }});
  out.push_back({"pow.twist", n, [=] {
                   SeriesRng rng = ctx.rng(800);
                   DirSeries a = rng.dir(n, 1), b = rng.dir(n, -1);
                   Lines lines;
                   for (long k : {-2L, -1L, 1L, 2L, 3L})
                     lines.push_back(line("pow.twist.k" + std::to_string(k), n,
                                          series_diff(twist_int(dir_mul(a, b), k),
                                                      dir_mul(twist_int(a, k), twist_int(b, k)))));
                   return lines;
                 }});
  const unsigned n_embed = ctx.bounds(256, 1024);
  out.push_back({"pow.embed", n_embed, [=] {
                   unsigned depth = 0;
                   while ((2u << depth) <= n_embed) ++depth;
                   SeriesRng rng = ctx.rng(900);
                   OrdSeries a = rng.ord(depth, 1), b = rng.ord(depth, rng.small_rational());
                   const DirSeries lhs = perfect_power_embed(ord_mul(a, b), 2, n_embed);
                   const DirSeries rhs =
                       dir_mul(perfect_power_embed(a, 2, n_embed), perfect_power_embed(b, 2, n_embed));
                   return single("pow.embed.m2", n_embed, series_diff(lhs, rhs));
                 }});
  out.push_back({"pow.apply", n, [=] {
                   SeriesRng rng = ctx.rng(1000);
                   DirSeries b = rng.dir(n, 0);
                   OrdSeries f = rng.ord(n, 1), g = rng.ord(n, 2);
                   const DirSeries lhs = dir_apply_series(ord_mul(f, g), b);
                   const DirSeries rhs = dir_mul(dir_apply_series(f, b), dir_apply_series(g, b));
                   return single("pow.apply.hom", n, series_diff(lhs, rhs));
                 }});
}

// -- log ------------------------------------------------------------------------

void log_suite(const Context& ctx, std::vector<Task>& out) {
  const unsigned n = ctx.bounds(64, 128);
  for (unsigned k = 1; k <= 5; ++k) {
    out.push_back({"log.hom." + std::to_string(k), n, [=] {
                     SeriesRng rng = ctx.rng(1100 + k);
                     DirSeries a = rng.dir(n, 1), b = rng.dir(n, 1);
                     const std::string id = std::to_string(k);
                     Lines lines;
                     lines.push_back(
                         line("log.hom." + id, n, series_diff(dir_log(dir_mul(a, b)), dir_log(a) + dir_log(b))));
                     lines.push_back(line("log.exp." + id, n, series_diff(dir_exp_param(dir_log(a)), dir_pow_param(a))));
                     return lines;
                   }});
  }
  const unsigned n_star = ctx.bounds(48, 96);
  out.push_back({"log.star", n_star, [=] {
                   DirSeries a = ctx.rng(1200).dir(n_star, 1);
                   return single("log.star", n_star,
                                 series_diff(star_derivative(dir_log(a)),
                                             dir_mul(star_derivative(a), dir_inverse(a))));
                 }});
  const unsigned n_chain = ctx.bounds(32, 64);
  out.push_back({"log.chain", n_chain, [=] {
                   DirSeries a = ctx.rng(1300).dir(n_chain, 1);
                   const DirSeries p = dir_pow_param(a);
                   const DirSeries rhs = dir_mul(at_psi(p, kPhi - Polynomial(1)), star_derivative(a)) * kPhi;
                   return single("log.chain", n_chain, series_diff(star_derivative(at_psi(p, kPhi)), rhs));
                 }});
  const unsigned n_eps = ctx.bounds(120, 500);
  out.push_back({"log.eps", n_eps, [=] {
                   const DirSeries l = dir_log(eps(n_eps));
                   Lines lines;
                   lines.push_back(line("log.eps.primes", n_eps, series_diff(l, prime_indicator(n_eps))));
                   unsigned max_m = 0;
                   while ((2u << max_m) <= n_eps) ++max_m;
                   for (unsigned m = 0; m <= max_m; ++m) {
                     const DirSeries pm = dir_pow_int(l, m);
                     Diff d;
                     for (unsigned i = 1; i <= n_eps && !d; ++i) {
                       Polynomial expected;
                       if (s_of(i) == m) expected = Polynomial(make_rational(factorial(m), f_of(i)));
                       if (auto e = first_difference(pm[i], expected)) d = "x^" + std::to_string(i) + ": " + *e;
                     }
                     lines.push_back(line("log.eps.power_m" + std::to_string(m), n_eps, d));
                   }
                   return lines;
                 }});
  const unsigned n_rows = ctx.bounds(32, 64);
  out.push_back({"log.rows", n_rows, [=] {
                   DirSeries a = ctx.rng(1400).dir(n_rows, 1);
                   const DirSeries b = dir_log(a);
                   const DirMatrix c = exp_conjugate(build_column(b, n_rows), n_rows);
                   const DirSeries p = at_psi(dir_pow_param(a), kPhi);
                   std::vector<Polynomial> values(b.coeffs());
                   Diff bell, power;
                   for (unsigned i = 1; i <= n_rows; ++i) {
                     const Polynomial row = row_polynomial(c, i, Symbol::phi());
                     Polynomial expected;
                     for (unsigned m = 0; m <= i; ++m)
                       expected += bell_Btilde(i, m, values) * kPhi.pow(m) * make_rational(Integer(1), factorial(m));
                     expected *= Rational(factorial(i));
                     if (!bell)
                       if (auto d = first_difference(row, expected)) bell = "row " + std::to_string(i) + ": " + *d;
                     if (!power)
                       if (auto d = first_difference(row, p[i] * Rational(factorial(i))))
                         power = "row " + std::to_string(i) + ": " + *d;
                   }
                   Lines lines;
                   lines.push_back(line("log.rows.bell", n_rows, bell));
                   lines.push_back(line("log.rows.power", n_rows, power));
                   return lines;
                 }});
  const unsigned n_ord = ctx.bounds(24, 48);
  out.push_back({"log.ord", n_ord, [=] {
                   SeriesRng rng = ctx.rng(1500);
                   OrdSeries a = rng.ord(n_ord, 1), b = rng.ord(n_ord, 0);
                   Lines lines;
                   lines.push_back(line("log.ord.exp_log", n_ord, series_diff(ord_log(ord_exp(b)), b)));
                   lines.push_back(line("log.ord.pow2", n_ord,
                                        series_diff(series_substitute_symbol(ord_pow_param(a), kPsi, Polynomial(2)),
                                                    ord_mul(a, a))));
                   lines.push_back(line("log.ord.inverse", n_ord,
                                        series_diff(ord_mul(a, ord_inverse_mul(a)),
                                                    OrdSeries::constant(n_ord, Polynomial(1)))));
                   return lines;
                 }});
}

// -- thm1 -----------------------------------------------------------------------

OrdSeries random_lift_input(SeriesRng& rng, unsigned n) {
  unsigned depth = 1;
  while ((2u << depth) <= n) ++depth;
  return rng.ord(depth, 1);
}

Polynomial zeta_closed(std::uint64_t n) {
  Polynomial c(1);
  for (const auto& [p, m] : factorize(n)) c *= rising_poly(kPsi, m) * make_rational(Integer(1), factorial(m));
  return c;
}

void thm1_suite(const Context& ctx, std::vector<Task>& out) {
  const unsigned n = ctx.bounds(60, 120);
  for (unsigned k = 1; k <= 5; ++k) {
    out.push_back({"thm1.hom." + std::to_string(k), n, [=] {
                     SeriesRng rng = ctx.rng(2000 + k);
                     OrdSeries a = random_lift_input(rng, n), b = random_lift_input(rng, n);
                     const DirSeries lhs = dir_mul(lift_theorem1(a, n), lift_theorem1(b, n));
                     const DirSeries rhs = lift_theorem1(ord_mul(a, b), n);
                     const std::string id = std::to_string(k);
                     Lines lines;
                     lines.push_back(line("thm1.hom.psi." + id, n, series_diff(lhs, rhs)));
                     lines.push_back(line("thm1.hom.one." + id, n,
                                          series_diff(at_psi(lhs, Polynomial(1)), at_psi(rhs, Polynomial(1)))));
                     const DirSeries log_lift = dir_log(at_psi(lift_theorem1(a, n), Polynomial(1)));
                     const OrdSeries log_a = ord_log(a);
                     Diff support;
                     for (unsigned i = 2; i <= n && !support; ++i) {
                       const auto f = factorize(i);
                       const Polynomial expected = f.size() == 1 ? log_a[f[0].multiplicity] : Polynomial();
                       if (auto d = first_difference(log_lift[i], expected)) support = "x^" + std::to_string(i) + ": " + *d;
                     }
                     lines.push_back(line("thm1.log_support." + id, n, support));
                     return lines;
                   }});
  }
  const unsigned n_closed = ctx.bounds(120, 500);
  out.push_back({"thm1.zeta", n_closed, [=] {
                   const DirSeries p = dir_pow_param(zeta(n_closed));
                   const DirSeries lifted = lift_theorem1(ord_geometric(n_closed), n_closed);
                   Diff closed;
                   for (unsigned i = 1; i <= n_closed && !closed; ++i)
                     if (auto d = first_difference(p[i], zeta_closed(i))) closed = "x^" + std::to_string(i) + ": " + *d;
                   Lines lines;
                   lines.push_back(line("thm1.zeta.closed", n_closed, closed));
                   lines.push_back(line("thm1.zeta.lift", n_closed, series_diff(lifted, p)));
                   return lines;
                 }});
  out.push_back({"thm1.eps", n_closed, [=] {
                   const DirSeries p = eps_param(n_closed);
                   Diff closed;
                   for (unsigned i = 1; i <= n_closed && !closed; ++i) {
                     const Polynomial expected = Polynomial(kPsi).pow(s_of(i)) * make_rational(Integer(1), f_of(i));
                     if (auto d = first_difference(p[i], expected)) closed = "x^" + std::to_string(i) + ": " + *d;
                   }
                   Lines lines;
                   lines.push_back(line("thm1.eps.closed", n_closed, closed));
                   lines.push_back(
                       line("thm1.eps.lift", n_closed, series_diff(lift_theorem1(ord_exp_x(n_closed), n_closed), p)));
                   return lines;
                 }});
  out.push_back({"thm1.squarefree", n, [=] {
                   const DirSeries s = at_psi(lift_theorem1(ord_one_plus_x(n), n), Polynomial(1));
                   const auto mu = mobius_sieve(n);
                   DirSeries expected(n);
                   for (unsigned i = 1; i <= n; ++i) expected.set(i, Polynomial(mu[i] * mu[i]));
                   return single("thm1.squarefree", n, series_diff(s, expected));
                 }});
}

// -- thm2 -----------------------------------------------------------------------

void thm2_coeff(const std::string& name, const DirSeries& a, Lines& lines) {
  const unsigned n = a.trunc();
  const LagrangeFamily fam = lagrange_dir(a, kBeta);
  const DirSeries middle = lagrange_dir_middle(a, kBeta);
  const DirSeries power = dir_pow_param(a);
  for (unsigned i = 2; i <= n; ++i) {
    const Polynomial shift = kBeta * log_n_poly(i);
    const Polynomial srow_lhs = (kPhi + shift) * fam.derived[i];
    const Polynomial srow_rhs = kPhi * poly_substitute(power[i], kPsi, kPhi + shift);
    lines.push_back(line("thm2.coeff." + name, i, poly_diff(fam.derived[i], middle[i])));
    lines.push_back(line("thm2.srow." + name, i, poly_diff(srow_lhs, srow_rhs)));
  }
  lines.push_back(line("thm2.beta0." + name, n,
                       series_diff(lagrange_dir(a, Polynomial()).derived, at_psi(power, kPhi))));
}

void thm2_suite(const Context& ctx, std::vector<Task>& out) {
  const unsigned n = ctx.bounds(64, 128);
  out.push_back({"thm2.coeff.eps", n, [=] {
                   Lines lines;
                   thm2_coeff("eps", eps(n), lines);
                   const DirSeries derived = lagrange_dir(eps(n), kBeta).derived;
                   Diff closed;
                   for (unsigned i = 2; i <= n && !closed; ++i) {
                     const Polynomial expected = kPhi * (kPhi + kBeta * log_n_poly(i)).pow(s_of(i) - 1) *
                                                 make_rational(Integer(1), f_of(i));
                     if (auto d = first_difference(derived[i], expected)) closed = "x^" + std::to_string(i) + ": " + *d;
                   }
                   lines.push_back(line("thm2.eps_closed", n, closed));
                   return lines;
                 }});
  out.push_back({"thm2.coeff.zeta", n, [=] {
                   Lines lines;
                   thm2_coeff("zeta", zeta(n), lines);
                   return lines;
                 }});
  out.push_back({"thm2.coeff.random", n, [=] {
                   Lines lines;
                   thm2_coeff("random", ctx.rng(3000).dir(n, 1), lines);
                   return lines;
                 }});
  const unsigned n_ord = ctx.bounds(20, 40);
  out.push_back({"thm2.ord", n_ord, [=] {
                   const OrdSeries binom = lagrange_ord(ord_one_plus_x(n_ord), kBeta);
                   const OrdSeries expo = lagrange_ord(ord_exp_x(n_ord), kBeta);
                   Diff db, de;
                   for (unsigned i = 1; i <= n_ord; ++i) {
                     const Polynomial shifted = kPhi + kBeta * Rational(i);
                     if (!db)
                       if (auto d = first_difference(shifted * binom[i], kPhi * binom_poly(shifted, i)))
                         db = "x^" + std::to_string(i) + ": " + *d;
                     if (!de)
                       if (auto d = first_difference(expo[i], kPhi * shifted.pow(i - 1) *
                                                                  make_rational(Integer(1), factorial(i))))
                         de = "x^" + std::to_string(i) + ": " + *d;
                   }
                   Lines lines;
                   lines.push_back(line("thm2.ord.binomial", n_ord, db));
                   lines.push_back(line("thm2.ord.exponential", n_ord, de));
                   return lines;
                 }});
  const unsigned n_pair = ctx.bounds(24, 48);
  for (long beta : {1L, -1L, 2L}) {
    out.push_back({"thm2.pairing.b" + std::to_string(beta), n_pair, [=] {
                     Lines lines;
                     const std::pair<std::string, DirSeries> bases[] = {{"eps", eps(n_pair)},
                                                                        {"random", ctx.rng(3100).dir(n_pair, 1)}};
                     for (const auto& [name, a] : bases) {
                       const Polynomial b(beta);
                       const DirMatrix left = build_rd(DirSeries::identity(n_pair), at_psi(dir_pow_param(a), -b), n_pair);
                       const DirSeries right_gen =
                           series_substitute_symbol(lagrange_dir(a, b).derived, Symbol::phi(), b);
                       const DirMatrix right = build_rd(DirSeries::identity(n_pair), right_gen, n_pair);
                       lines.push_back(line("thm2.pairing." + name + ".b" + std::to_string(beta), n_pair,
                                            matrix_diff(multiply(left, right), identity_matrix(n_pair))));
                       lines.push_back(line("thm2.pairing_inverse." + name + ".b" + std::to_string(beta), n_pair,
                                            matrix_diff(rd_inverse(left), right)));
                     }
                     return lines;
                   }});
  }
  const unsigned n_u = ctx.bounds(60, 120);
  const std::pair<const char*, Rational> betas[] = {{"1", Rational(1)}, {"2", Rational(2)}, {"-1/2", make_rational(-1, 2)}};
  for (const char* series : {"expx", "ordgeom", "random"}) {
    for (const auto& [beta_name, beta] : betas) {
      const std::string id = std::string("thm2.ufamily.") + series + ".b" + beta_name;
      out.push_back({id, n_u, [=, series = std::string(series), beta = beta] {
                       SeriesRng rng = ctx.rng(3200);
                       const OrdSeries a = series == "expx"      ? ord_exp_x(8)
                                           : series == "ordgeom" ? ord_geometric(8)
                                                                 : random_lift_input(rng, n_u);
                       const UFamilyReport r = u_family_check(a, beta, n_u);
                       Diff fwd, inv, lag;
                       auto note = [](Diff& slot, std::uint64_t n, const IdentityOutcome& o) {
                         if (!slot && !o.holds) slot = "n=" + std::to_string(n) + ": " + o.counterexample.value_or("");
                       };
                       for (const auto* group : {&r.lines, &r.prime_power_lines})
                         for (const auto& l : *group) {
                           note(fwd, l.n, l.forward);
                           note(inv, l.n, l.inverse);
                           note(lag, l.n, l.lagrange);
                         }
                       Lines lines;
                       lines.push_back(line(id + ".forward", n_u, fwd));
                       lines.push_back(line(id + ".inverse", n_u, inv));
                       lines.push_back(line(id + ".lagrange", n_u, lag));
                       return lines;
                     }});
    }
  }
  const unsigned n_basis = ctx.bounds(32, 64);
  for (unsigned k = 1; k <= 5; ++k) {
    const std::string id = "thm2.basis." + std::to_string(k);
    out.push_back({id, n_basis, [=] {
                     SeriesRng rng = ctx.rng(3300 + k);
                     DirSeries b = rng.dir(n_basis, rng.small_rational()), a = rng.dir(n_basis, 1);
                     const auto c = expand_over_basis(b, a, n_basis);
                     return single(id, n_basis, series_diff(reconstruct_from_basis(c, a, n_basis), b));
                   }});
  }
  out.push_back({"thm2.basis.trivial", n_basis, [=] {
                   SeriesRng rng = ctx.rng(3400);
                   DirSeries b = rng.dir(n_basis, 1), a = rng.dir(n_basis, 1);
                   const DirSeries x = DirSeries::identity(n_basis);
                   const auto c_x = expand_over_basis(b, x, n_basis);
                   Diff coeffs;
                   for (unsigned i = 1; i <= n_basis && !coeffs; ++i)
                     if (auto d = first_difference(c_x[i], b[i])) coeffs = "c_" + std::to_string(i) + ": " + *d;
                   Lines lines;
                   lines.push_back(line("thm2.basis.a_is_x", n_basis, coeffs));
                   const auto c = expand_over_basis(x, a, n_basis);
                   lines.push_back(
                       line("thm2.basis.b_is_x", n_basis, series_diff(reconstruct_from_basis(c, a, n_basis), x)));
                   return lines;
                 }});
}

// -- thm3 -----------------------------------------------------------------------

void thm3_suite(const Context& ctx, std::vector<Task>& out) {
  const unsigned n = ctx.bounds(24, 48);
  const DirSeries x = DirSeries::identity(n);
  for (unsigned k = 1; k <= 5; ++k) {
    const std::string id = std::to_string(k);
    out.push_back({"thm3.product." + id, n, [=] {
                     SeriesRng rng = ctx.rng(4000 + k);
                     DirSeries b = rng.dir(n, Rational(k)), a = rng.dir(n, 1);
                     DirSeries f = rng.dir(n, make_rational(-1, 2)), g = rng.dir(n, 1);
                     const DirMatrix m1 = build_rd(b, a, n), m2 = build_rd(f, g, n);
                     const DirMatrix group = rd_multiply(m1, m2, false);
                     Lines lines;
                     lines.push_back(line("thm3.product." + id, n, matrix_diff(group, multiply(m1, m2))));
                     const DirMatrix inv = rd_inverse(m1);
                     lines.push_back(line("thm3.inverse." + id, n,
                                          first_of(matrix_diff(multiply(m1, inv), identity_matrix(n)),
                                                   [&] { return matrix_diff(multiply(inv, m1), identity_matrix(n)); })));
                     lines.push_back(line("thm3.identity." + id, n,
                                          first_of(matrix_diff(rd_multiply(m1, identity_matrix(n), false), m1),
                                                   [&] { return matrix_diff(rd_multiply(identity_matrix(n), m1, false), m1); })));
                     lines.push_back(line("thm3.associative." + id, n,
                                          matrix_diff(rd_multiply(rd_multiply(m1, m2, false), m1, false),
                                                      rd_multiply(m1, rd_multiply(m2, m1, false), false))));
                     return lines;
                   }});
  }
  out.push_back({"thm3.family", n, [=] {
                   SeriesRng rng = ctx.rng(4100);
                   DirSeries a = rng.dir(n, 1), b = rng.dir(n, 1), c = rng.dir(n, 3);
                   Lines lines;
                   lines.push_back(line("thm3.mult_commute", n,
                                        matrix_diff(multiply(build_mult(a, n), build_mult(c, n)),
                                                    multiply(build_mult(c, n), build_mult(a, n)))));
                   lines.push_back(
                       line("thm3.action", n, series_diff(rd_action(a, c), apply(build_rd(x, a, n), c))));
                   lines.push_back(line("thm3.x_a_x_b", n,
                                        matrix_diff(multiply(build_rd(x, a, n), build_rd(x, b, n)),
                                                    build_rd(x, dir_mul(a, rd_action(a, b)), n))));
                   lines.push_back(line("thm3.x_a_b_x", n,
                                        matrix_diff(multiply(build_rd(x, a, n), build_rd(c, x, n)),
                                                    build_rd(rd_action(a, c), a, n))));
                   lines.push_back(line("thm3.column1", n, [&]() -> Diff {
                     const DirMatrix m = build_rd(c, a, n);
                     for (unsigned i = 1; i <= n; ++i)
                       if (auto d = first_difference(m(i, 1), c[i])) return "row " + std::to_string(i) + ": " + *d;
                     return std::nullopt;
                   }()));
                   lines.push_back(line("thm3.exp_identity", n,
                                        matrix_diff(exp_conjugate(identity_matrix(n), n), identity_matrix(n))));
                   return lines;
                 }});
  const unsigned n_small = ctx.bounds(16, 32);
  out.push_back({"thm3.mixed", n_small, [=] {
                   const unsigned m = n_small;
                   const DirSeries xs = DirSeries::identity(m);
                   SeriesRng rng = ctx.rng(4200);
                   DirSeries a = rng.dir(m, 0), b = rng.dir(m, 2), bb = rng.dir(m, 1);
                   DirSeries f_d = rng.dir(m, 1), g_d = rng.dir(m, 1);
                   OrdSeries f = rng.ord(m, 1), g = rng.ord(m, 0);
                   Lines lines;
                   const DirMatrix col = build_column(a, m);
                   lines.push_back(line("thm3.mixed.column_f", m,
                                        matrix_diff(multiply(col, build_riordan_ord(f, OrdSeries::variable(m), m)),
                                                    build_mixed(dir_apply_series(f, a), a, m))));
                   lines.push_back(line("thm3.mixed.column_g", m,
                                        matrix_diff(multiply(col, build_riordan_ord(OrdSeries::constant(m, 1), g, m)),
                                                    build_column(dir_apply_series(g, a), m))));
                   lines.push_back(line("thm3.mixed.riordan", m,
                                        matrix_diff(multiply(build_mixed(b, a, m), build_riordan_ord(f, g, m)),
                                                    build_mixed(dir_mul(b, dir_apply_series(f, a)),
                                                                dir_apply_series(g, a), m))));
                   lines.push_back(line("thm3.mixed.complementary", m,
                                        matrix_diff(multiply(build_rd(f_d, g_d, m), build_mixed(b, a, m)),
                                                    build_mixed(dir_mul(f_d, rd_action(g_d, b)), rd_action(g_d, a), m))));
                   const DirMatrix d = log_diagonal(m);
                   lines.push_back(line("thm3.star_conjugation", m,
                                        matrix_diff(multiply(d, build_rd(xs, bb, m)),
                                                    multiply(build_rd(xs + star_derivative(dir_log(bb)), bb, m), d))));
                   return lines;
                 }});
}

// -- abel -----------------------------------------------------------------------

const char* const kRoman[] = {"i", "ii", "iii", "iv"};

void abel_suite(const Context& ctx, std::vector<Task>& out) {
  const unsigned n = ctx.bounds(200, 2000);
  for (unsigned i = 2; i <= n; ++i) {
    out.push_back({"abel.i", i, [i] {
                     const AbelReport r = abel_check(i);
                     Lines lines;
                     for (unsigned k = 0; k < 4; ++k)
                       lines.push_back(line(std::string("abel.") + kRoman[k], i, r.identities[k].counterexample));
                     return lines;
                   }});
  }
  out.push_back({"abel.kernel", n, [n] {
                   const DirSeries derived = lagrange_dir(eps(n), Polynomial(1)).derived;
                   Diff diff;
                   for (unsigned i = 1; i <= n && !diff; ++i)
                     if (auto d = first_difference(abel_kernel(kPhi, i) * make_rational(Integer(1), f_of(i)), derived[i]))
                       diff = "x^" + std::to_string(i) + ": " + *d;
                   return single("abel.kernel", n, diff);
                 }});
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    std::uint64_t q = 1;
    for (unsigned m = 1; m <= 7; ++m) {
      q *= p;
      out.push_back({"abel.classic", q, [p, m, q] {
                       const auto classic = abel_classic_check(p, m);
                       Lines lines;
                       for (unsigned k = 0; k < 4; ++k) {
                         lines.push_back(line(std::string("abel.classic.") + kRoman[k], q, classic[k].counterexample));
                         const auto analog = abel_sides(q, k), reduced = abel_classic_sides(p, m, k);
                         Diff d = poly_diff(analog.first, reduced.first);
                         if (!d) d = poly_diff(analog.second, reduced.second);
                         lines.push_back(line(std::string("abel.reduction.") + kRoman[k], q, d));
                       }
                       return lines;
                     }});
    }
  }
}

// -- binomf ---------------------------------------------------------------------

void binomf_suite(const Context& ctx, std::vector<Task>& out) {
  const unsigned n = ctx.bounds(500, 5000);
  out.push_back({"binomf.sums", n, [n] {
                   Lines lines;
                   for (unsigned i = 1; i <= n; ++i) {
                     Rational total;
                     Polynomial log_sum;
                     Diff sym;
                     for (std::uint64_t d : divisors(i)) {
                       const Rational w = binom_f(i, d);
                       total += w;
                       log_sum += log_n_poly(d) * (s_of(i / d) % 2 ? -w : w);
                       if (!sym && w != binom_f(i, i / d)) sym = "d=" + std::to_string(d);
                     }
                     lines.push_back(line("binomf.sum", i,
                                          check(total == Rational(Integer(1) << s_of(i)), "sum " + to_string(total))));
                     if (i > 1 && !is_prime(i)) lines.push_back(line("binomf.log_sum", i, poly_diff(log_sum, Polynomial())));
                     lines.push_back(line("binomf.symmetry", i, sym));
                   }
                   return lines;
                 }});
  const unsigned n_bell = ctx.bounds(120, 500);
  out.push_back({"bell.factorizations", n_bell, [n_bell] {
                   Lines lines;
                   const auto ones = unit_values(n_bell);
                   for (unsigned i = 1; i <= n_bell; ++i) {
                     Diff count;
                     Polynomial sum;
                     for (unsigned m = 0; m <= s_of(i); ++m) {
                       const Polynomial b = bell_Btilde(i, m, ones);
                       const Rational brute(static_cast<long>(ordered_factorizations(i, m).size()));
                       if (!count) count = check(b == Polynomial(brute), "m=" + std::to_string(m) + ": " + b.to_string());
                       sum += binom_poly(Symbol::phi(), m) * b;
                     }
                     Polynomial product(1);
                     for (const auto& [p, s] : factorize(i)) product *= binom_poly(kPhi + Polynomial(Rational(s - 1)), s);
                     lines.push_back(line("bell.count", i, count));
                     lines.push_back(line("bell.binomial", i, poly_diff(sum, product)));
                   }
                   return lines;
                 }});
  const unsigned n_cauchy = ctx.bounds(24, 40);
  out.push_back({"bell.cauchy", n_cauchy, [n_cauchy] {
                   const auto values = indeterminate_values(n_cauchy);
                   OrdSeries a(n_cauchy, values);
                   OrdSeries power = a;
                   Diff diff;
                   for (unsigned m = 1; m <= n_cauchy && !diff; ++m) {
                     for (unsigned i = m; i <= n_cauchy && !diff; ++i)
                       if (auto d = first_difference(bell_B(i, m, values), power[i]))
                         diff = "B(" + std::to_string(i) + "," + std::to_string(m) + "): " + *d;
                     power = ord_mul(power, a);
                   }
                   return single("bell.cauchy", n_cauchy, diff);
                 }});
  const unsigned n_col = ctx.bounds(16, 64);
  out.push_back({"bell.column_rows", n_col, [n_col] {
                   const auto values = indeterminate_values(n_col);
                   DirSeries a(n_col, values);
                   a.set(1, Polynomial());
                   std::vector<Polynomial> shifted(values);
                   const DirMatrix m = build_column(a, n_col);
                   Diff diff;
                   for (unsigned i = 1; i <= n_col && !diff; ++i) {
                     Polynomial expected;
                     for (unsigned k = 0; k <= i; ++k) expected += bell_Btilde(i, k, values) * kPhi.pow(k);
                     if (auto d = first_difference(row_polynomial(m, i, Symbol::phi()), expected))
                       diff = "row " + std::to_string(i) + ": " + *d;
                   }
                   return single("bell.column_rows", n_col, diff);
                 }});
}

// -- oracle ---------------------------------------------------------------------

DirSeries naive_convolution(const DirSeries& a, const DirSeries& b) {
  const unsigned n = std::min(a.trunc(), b.trunc());
  std::vector<Polynomial> c(n + 1);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; i * j <= n; ++j) c[i * j] += a[i] * b[j];
  return DirSeries(n, std::move(c));
}

Diff golden_rows(const DirMatrix& m, const std::vector<std::vector<std::string>>& rows, unsigned first_row,
                 unsigned first_col) {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const unsigned row = first_row + r, col = first_col + c;
      if (auto d = first_difference(m(row, col), Polynomial::parse(rows[r][c])))
        return "(" + std::to_string(row) + "," + std::to_string(col) + "): " + *d;
    }
  return std::nullopt;
}

void oracle_suite(const Context& ctx, std::vector<Task>& out) {
  const unsigned n_mu = ctx.bounds(1000, 20000);
  out.push_back({"oracle.mobius", n_mu, [n_mu] {
                   const DirSeries inv = dir_inverse(zeta(n_mu));
                   const auto mu = mobius_sieve(n_mu);
                   DirSeries expected(n_mu);
                   for (unsigned i = 1; i <= n_mu; ++i) expected.set(i, Polynomial(mu[i]));
                   return single("oracle.mobius", n_mu, series_diff(inv, expected));
                 }});
  const unsigned n_conv = ctx.bounds(1000, 20000);
  out.push_back({"oracle.convolution", n_conv, [=] {
                   SeriesRng rng = ctx.rng(5000);
                   Lines lines;
                   DirSeries a = rng.dir(n_conv, rng.small_rational()), b = rng.dir(n_conv, rng.small_rational());
                   lines.push_back(
                       line("oracle.convolution.rational", n_conv, series_diff(dir_mul(a, b), naive_convolution(a, b))));
                   const unsigned n_sym = std::min(n_conv, 128u);
                   DirSeries g(n_sym, indeterminate_values(n_sym));
                   lines.push_back(line("oracle.convolution.symbolic", n_sym,
                                        series_diff(dir_mul(g, g), naive_convolution(g, g))));
                   return lines;
                 }});
  out.push_back({"oracle.golden", 16, [] {
                   Lines lines;
                   DirSeries geom2 = zeta(13);
                   geom2.set(1, Polynomial());
                   const std::vector<std::vector<std::string>> section3 = {
                       {"0", "0", "0", "0"}, {"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "1", "0", "0"},
                       {"0", "1", "1", "0"}, {"0", "1", "0", "0"}, {"0", "1", "2", "0"}, {"0", "1", "0", "0"},
                       {"0", "1", "2", "1"}, {"0", "1", "1", "0"}, {"0", "1", "2", "0"}, {"0", "1", "0", "0"},
                       {"0", "1", "4", "3"}};
                   lines.push_back(line("oracle.golden.column", 13, golden_rows(build_column(geom2, 13), section3, 0, 0)));

                   DirSeries gen2(16, indeterminate_values(16));
                   gen2.set(1, Polynomial());
                   const std::vector<std::vector<std::string>> section4 = {
                       {"0", "0", "0", "0", "0"},
                       {"1", "0", "0", "0", "0"},
                       {"0", "a2", "0", "0", "0"},
                       {"0", "a3", "0", "0", "0"},
                       {"0", "a4", "a2^2", "0", "0"},
                       {"0", "a5", "0", "0", "0"},
                       {"0", "a6", "2*a2*a3", "0", "0"},
                       {"0", "a7", "0", "0", "0"},
                       {"0", "a8", "2*a2*a4", "a2^3", "0"},
                       {"0", "a9", "a3^2", "0", "0"},
                       {"0", "a10", "2*a2*a5", "0", "0"},
                       {"0", "a11", "0", "0", "0"},
                       {"0", "a12", "2*a2*a6+2*a4*a3", "3*a2^2*a3", "0"},
                       {"0", "a13", "0", "0", "0"},
                       {"0", "a14", "2*a2*a7", "0", "0"},
                       {"0", "a15", "2*a3*a5", "0", "0"},
                       {"0", "a16", "2*a2*a8+a4^2", "3*a2^2*a4", "a2^4"}};
                   lines.push_back(line("oracle.golden.bell", 16, golden_rows(build_column(gen2, 16), section4, 0, 0)));

                   OrdSeries ogen(6, indeterminate_values(6));
                   const std::vector<std::vector<std::string>> riordan = {
                       {"1", "0", "0", "0", "0", "0", "0"},
                       {"0", "a1", "0", "0", "0", "0", "0"},
                       {"0", "a2", "a1^2", "0", "0", "0", "0"},
                       {"0", "a3", "2*a1*a2", "a1^3", "0", "0", "0"},
                       {"0", "a4", "2*a1*a3+a2^2", "3*a1^2*a2", "a1^4", "0", "0"},
                       {"0", "a5", "2*a1*a4+2*a2*a3", "3*a1^2*a3+3*a1*a2^2", "4*a1^3*a2", "a1^5", "0"},
                       {"0", "a6", "2*a1*a5+2*a2*a4+a3^2", "3*a1^2*a4+6*a1*a2*a3+a2^3", "4*a1^3*a3+6*a1^2*a2^2",
                        "5*a1^4*a2", "a1^6"}};
                   lines.push_back(line("oracle.golden.riordan", 6,
                                        golden_rows(build_riordan_ord(OrdSeries::constant(6, 1), ogen, 6), riordan, 0, 0)));

                   DirSeries gen(7, indeterminate_values(7));
                   const std::vector<std::vector<std::string>> mult_row6 = {{"a6", "a3", "a2", "0", "0", "a1"}};
                   lines.push_back(line("oracle.golden.mult", 7, golden_rows(build_mult(gen, 7), mult_row6, 6, 1)));
                   lines.push_back(line("oracle.golden.eps12", 12,
                                        poly_diff(eps_param(12)[12], Polynomial::parse("1/2*psi^3"))));
                   return lines;
                 }});
  out.push_back({"oracle.poly", 100, [=] {
                   SeriesRng rng = ctx.rng(5100);
                   auto random_poly = [&rng] {
                     const Polynomial vars[] = {kPhi, kBeta, Polynomial(Symbol::prime_log(2)), Polynomial(Symbol::prime_log(3))};
                     Polynomial p;
                     for (int t = 0; t < 4; ++t) {
                       Polynomial term(rng.small_rational());
                       for (const auto& v : vars)
                         if (rng.small_rational() > 0) term *= v;
                       p += term;
                     }
                     return p;
                   };
                   Diff ring, divide, eval;
                   for (int t = 0; t < 50; ++t) {
                     const Polynomial p = random_poly(), q = random_poly(), r = random_poly();
                     if (!ring) ring = poly_diff(p * (q + r), p * q + p * r);
                     if (!ring) ring = poly_diff((p * q) * r, p * (q * r));
                     if (!divide) divide = poly_diff(poly_divide_by_symbol(p * kPhi, Symbol::phi()), p);
                     std::map<Symbol, Rational> at = {{Symbol::phi(), rng.small_rational()},
                                                      {Symbol::beta(), rng.small_rational()},
                                                      {Symbol::prime_log(2), rng.small_rational()},
                                                      {Symbol::prime_log(3), rng.small_rational()}};
                     if (!eval) eval = check(poly_eval(p * q, at) == poly_eval(p, at) * poly_eval(q, at), "eval");
                   }
                   Diff additive, binom;
                   for (unsigned i = 1; i <= 100 && !additive; ++i)
                     for (unsigned j = 1; j <= 100 && !additive; ++j)
                       additive = check(log_n_poly(i * j) == log_n_poly(i) + log_n_poly(j),
                                        std::to_string(i) + "*" + std::to_string(j));
                   for (unsigned m = 0; m <= 10 && !binom; ++m)
                     for (unsigned t = m; t <= 20 && !binom; ++t) {
                       Integer c;
                       mpz_bin_uiui(c.get_mpz_t(), t, m);
                       const std::map<Symbol, Rational> at = {{Symbol::phi(), Rational(t)}};
                       binom = check(poly_eval(binom_poly(Symbol::phi(), m), at) == Rational(c),
                                     "C(" + std::to_string(t) + "," + std::to_string(m) + ")");
                     }
                   Lines lines;
                   lines.push_back(line("oracle.poly.ring", 50, ring));
                   lines.push_back(line("oracle.poly.divide", 50, divide));
                   lines.push_back(line("oracle.poly.eval", 50, eval));
                   lines.push_back(line("oracle.poly.log_additive", 100, additive));
                   lines.push_back(line("oracle.poly.binomial", 20, binom));
                   return lines;
                 }});
  out.push_back({"oracle.expr", 64, [] {
                   Lines lines;
                   const char* exprs[] = {"dmul(zeta, dinv(zeta))", "lagrange_dir(eps, 1)", "dpow_param(eps)",
                                          "subst(lift(expx), psi, \"phi+2*beta\")", "dexp(primes, -1/2)"};
                   Diff round, json;
                   for (const char* text : exprs) {
                     const Expr e = parse_expr(text);
                     if (!round) round = check(parse_expr(to_string(e)) == e, text);
                     const SeriesValue v = evaluate(e, 64);
                     if (!json) json = check(series_from_json(series_to_json(v)) == v, text);
                   }
                   lines.push_back(line("oracle.expr.roundtrip", 64, round));
                   lines.push_back(line("oracle.expr.json", 64, json));
                   lines.push_back(line("oracle.expr.zeta_inverse", 64,
                                        series_diff(std::get<DirSeries>(evaluate("dmul(zeta, dinv(zeta))", 64)),
                                                    DirSeries::identity(64))));
                   return lines;
                 }});
}

using SuiteBuilder = void (*)(const Context&, std::vector<Task>&);

const std::vector<std::pair<std::string, SuiteBuilder>>& suites() {
  static const std::vector<std::pair<std::string, SuiteBuilder>> table = {
      {"pow", pow_suite},   {"log", log_suite},   {"thm1", thm1_suite},     {"thm2", thm2_suite},
      {"thm3", thm3_suite}, {"abel", abel_suite}, {"binomf", binomf_suite}, {"oracle", oracle_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : suites()) v.push_back(s.first);
    return v;
  }();
  return names;
}

bool VerifyReport::all_pass() const noexcept { return failures() == 0; }

std::size_t VerifyReport::failures() const noexcept {
  return std::count_if(lines.begin(), lines.end(), [](const CheckLine& l) { return !l.pass; });
}

std::string VerifyReport::text() const {
  std::string out;
  for (const auto& l : lines) {
    out += (l.pass ? "PASS " : "FAIL ") + l.id + " n=" + std::to_string(l.n);
    if (!l.pass && !l.detail.empty()) out += " -- " + l.detail;
    out += "\n";
  }
  return out;
}

std::string VerifyReport::json_summary() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["total"] = lines.size();
  j["failed"] = failures();
  j["passed"] = lines.size() - failures();
  nlohmann::json f = nlohmann::json::array();
  for (const auto& l : lines)
    if (!l.pass) f.push_back(l.id + " n=" + std::to_string(l.n));
  j["failures"] = std::move(f);
  return j.dump();
}

VerifyReport run_verify(const VerifyOptions& options) {
  const Context ctx{Bounds(options.bound), options.seed};
  std::vector<Task> tasks;
  bool found = false;
  for (const auto& [name, build] : suites()) {
    if (options.suite != "all" && options.suite != name) continue;
    found = true;
    build(ctx, tasks);
  }
  if (!found) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + options.suite + "'");

  std::vector<Lines> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception& e) {
        results[i] = {CheckLine{tasks[i].id, tasks[i].n, false, e.what()}};
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerifyReport report;
  report.suite = options.suite;
  for (auto& r : results)
    for (auto& l : r) report.lines.push_back(std::move(l));
  return report;
}

}  // namespace rdalg
