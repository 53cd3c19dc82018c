#include <doctest.h>

#include "rdalg/arith.hpp"
#include "rdalg/error.hpp"
#include "rdalg/random.hpp"
#include "rdalg/series.hpp"
#include "rdalg/transforms.hpp"
#include "test_support.hpp"

using namespace rdalg;
using rdalg::test::dir_from;
using rdalg::test::P;

namespace {

DirSeries at_psi(const DirSeries& s, const Polynomial& v) { return series_substitute_symbol(s, Symbol::psi(), v); }

}  // namespace

TEST_CASE("dir_mul") {
  SeriesRng rng(1);
  const DirSeries a = rng.dir(64, 2), b = rng.dir(64, -1);
  CHECK(dir_mul(DirSeries::identity(64), a) == a);
  CHECK(dir_mul(DirSeries::monomial(12, 2), DirSeries::monomial(12, 3)) == DirSeries::monomial(12, 6));
  CHECK(dir_mul(zeta(6), zeta(6))[6] == Polynomial(4));
  CHECK(dir_mul(a, b) == dir_mul(b, a));
  CHECK(dir_mul(a, b.truncated(10)).trunc() == 10);
}

TEST_CASE("dir_inverse") {
  CHECK(dir_inverse(DirSeries::identity(8)) == DirSeries::identity(8));
  const DirSeries mu = dir_inverse(zeta(1000));
  const auto sieve = mobius_sieve(1000);
  for (unsigned n = 1; n <= 1000; ++n) REQUIRE(mu[n] == Polynomial(sieve[n]));
  SeriesRng rng(2);
  const DirSeries a = rng.dir(64, 1);
  CHECK(dir_mul(a, dir_inverse(a)) == DirSeries::identity(64));
  const DirSeries c = rng.dir(32, make_rational(-2, 3));
  CHECK(dir_mul(c, dir_inverse(c)) == DirSeries::identity(32));
  try {
    dir_inverse(dir_from(4, {{1, "phi"}}));
    FAIL("expected NonUnitLeadingCoefficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUnitLeadingCoefficient);
  }
}

TEST_CASE("dir_pow_int") {
  SeriesRng rng(3);
  const DirSeries a = rng.dir(32, 1);
  CHECK(dir_pow_int(a, 0) == DirSeries::identity(32));
  CHECK(dir_pow_int(DirSeries::monomial(16, 2), 3) == DirSeries::monomial(16, 8));
  const DirSeries xx2 = dir_from(16, {{1, "1"}, {2, "1"}});
  CHECK(dir_pow_int(xx2, 3) == dir_from(16, {{1, "1"}, {2, "3"}, {4, "3"}, {8, "1"}}));
  CHECK(dir_pow_int(a, -2) == dir_pow_int(dir_inverse(a), 2));
  CHECK(dir_pow_int(a, 3) == dir_mul(a, dir_mul(a, a)));
  CHECK_THROWS_AS(dir_pow_int(dir_from(4, {{1, "0"}, {2, "1"}}), -1), Error);
}

TEST_CASE("dir_subst_xk") {
  SeriesRng rng(4);
  const DirSeries a = rng.dir(30, 3);
  CHECK(dir_subst_xk(a, 1) == a);
  const DirSeries z2 = dir_subst_xk(zeta(20), 2);
  for (unsigned n = 1; n <= 20; ++n) CHECK(z2[n] == Polynomial(n % 2 == 0 ? 1 : 0));
  for (unsigned k : {2u, 3u, 7u}) CHECK(dir_subst_xk(a, k) == dir_mul(DirSeries::monomial(30, k), a));
}

TEST_CASE("dir_apply_series") {
  DirSeries g2 = zeta(16);
  g2.set(1, Polynomial());
  OrdSeries x2(4);
  x2.set(2, Polynomial(1));
  const DirSeries col2 = dir_apply_series(x2, g2);
  const std::map<unsigned, int> expected = {{4, 1}, {6, 2}, {8, 2}, {9, 1}, {10, 2}, {12, 4}, {14, 2}, {15, 2}, {16, 3}};
  for (unsigned n = 1; n <= 16; ++n) CHECK(col2[n] == Polynomial(expected.count(n) ? expected.at(n) : 0));
  CHECK(dir_apply_series(OrdSeries::constant(4, 1), g2) == DirSeries::identity(16));
  CHECK(dir_apply_series(OrdSeries::variable(4), g2) == g2);
  CHECK_THROWS_AS(dir_apply_series(x2, zeta(8)), Error);
}

TEST_CASE("dir_pow_param") {
  CHECK(dir_pow_param(DirSeries::identity(20)) == DirSeries::identity(20));
  const DirSeries p = dir_pow_param(dir_from(64, {{1, "1"}, {2, "1"}}));
  for (unsigned n = 0; (1u << n) <= 64; ++n) CHECK(p[1u << n] == binom_poly(Symbol::psi(), n));
  SeriesRng rng(5);
  const DirSeries a = rng.dir(64, 1);
  const DirSeries ap = dir_pow_param(a);
  CHECK(at_psi(ap, Polynomial(3)) == dir_pow_int(a, 3));
  CHECK(at_psi(ap, Polynomial(0)) == DirSeries::identity(64));
  CHECK(at_psi(ap, Polynomial(-2)) == dir_pow_int(a, -2));
  for (unsigned n = 2; n <= 64; ++n) {
    REQUIRE(ap[n].degree_in(Symbol::psi()) >= (ap[n].is_zero() ? 0u : 1u));
    REQUIRE_NOTHROW(poly_divide_by_symbol(ap[n], Symbol::psi()));
  }
  try {
    dir_pow_param(rng.dir(8, 2));
    FAIL("expected LeadingCoefficientNotOne");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LeadingCoefficientNotOne);
  }
}

TEST_CASE("power laws") {
  SeriesRng rng(6);
  const DirSeries a = rng.dir(48, 1), b = rng.dir(48, 1);
  const DirSeries ap = dir_pow_param(a);
  CHECK(dir_mul(at_psi(ap, P("phi")), at_psi(ap, P("beta"))) == at_psi(ap, P("phi + beta")));
  CHECK(at_psi(dir_pow_param(dir_mul(a, b)), P("phi")) ==
        dir_mul(at_psi(ap, P("phi")), at_psi(dir_pow_param(b), P("phi"))));
  const DirSeries a32 = a.truncated(32);
  CHECK(at_psi(dir_pow_param(dir_pow_int(a32, 3)), P("beta")) == at_psi(dir_pow_param(a32), P("3*beta")));
}

TEST_CASE("dir_log") {
  const DirSeries lz = dir_log(zeta(200));
  for (unsigned n = 2; n <= 200; ++n) {
    const auto f = factorize(n);
    REQUIRE(lz[n] == (f.size() == 1 ? Polynomial(make_rational(1, f[0].multiplicity)) : Polynomial()));
  }
  CHECK(dir_log(eps(200)) == prime_indicator(200));
  CHECK(dir_log(DirSeries::identity(10)).is_zero());
  SeriesRng rng(7);
  const DirSeries a = rng.dir(64, 1), b = rng.dir(64, 1);
  CHECK(dir_log(dir_mul(a, b)) == dir_log(a) + dir_log(b));
}

TEST_CASE("dir_exp_param") {
  CHECK(dir_exp_param(DirSeries(10)) == DirSeries::identity(10));
  SeriesRng rng(8);
  const DirSeries a = rng.dir(64, 1);
  CHECK(dir_exp_param(dir_log(a)) == dir_pow_param(a));
  const DirSeries e = dir_exp_param(dir_log(eps(120)));
  for (unsigned n = 1; n <= 120; ++n)
    REQUIRE(e[n] == Polynomial(Symbol::psi()).pow(s_of(n)) * make_rational(Integer(1), f_of(n)));
  CHECK_THROWS_AS(dir_exp_param(zeta(8)), Error);
}

TEST_CASE("star_derivative") {
  CHECK(star_derivative(DirSeries::identity(10)).is_zero());
  CHECK(star_derivative(zeta(12))[12] == P("2*L2 + L3"));
  SeriesRng rng(9);
  const DirSeries a = rng.dir(48, 1), b = rng.dir(48, 2);
  CHECK(star_derivative(dir_mul(a, b)) == dir_mul(a, star_derivative(b)) + dir_mul(star_derivative(a), b));
  CHECK(star_derivative(dir_log(a)) == dir_mul(star_derivative(a), dir_inverse(a)));
  const DirSeries a32 = a.truncated(32);
  const DirSeries p = dir_pow_param(a32);
  CHECK(star_derivative(at_psi(p, P("phi"))) ==
        dir_mul(at_psi(p, P("phi - 1")), star_derivative(a32)) * P("phi"));
}

TEST_CASE("series_substitute_symbol") {
  SeriesRng rng(10);
  const DirSeries a = rng.dir(24, 1);
  const DirSeries p = dir_pow_param(a);
  CHECK(at_psi(p, Polynomial()) == DirSeries::identity(24));
  CHECK(at_psi(p, log_n_poly(1)) == DirSeries::identity(24));
  CHECK(at_psi(p, Polynomial(2)) == dir_pow_int(a, 2));
}

TEST_CASE("twist_int") {
  SeriesRng rng(11);
  const DirSeries a = rng.dir(64, 1), b = rng.dir(64, 3);
  CHECK(twist_int(a, 0) == a);
  CHECK(twist_int(DirSeries::identity(9), 5) == DirSeries::identity(9));
  CHECK(twist_int(zeta(6), 2)[6] == Polynomial(36));
  CHECK(twist_int(zeta(6), -1)[6] == Polynomial(make_rational(1, 6)));
  for (long k : {-2L, 1L, 3L}) CHECK(twist_int(dir_mul(a, b), k) == dir_mul(twist_int(a, k), twist_int(b, k)));
}

TEST_CASE("perfect_power_embed") {
  CHECK(perfect_power_embed(ord_one_plus_x(3), 2, 8) == dir_from(8, {{1, "1"}, {2, "1"}}));
  CHECK(perfect_power_embed(OrdSeries::constant(5, 1), 3, 30) == DirSeries::identity(30));
  SeriesRng rng(12);
  const OrdSeries a = rng.ord(8, 1), b = rng.ord(8, -2);
  CHECK(perfect_power_embed(ord_mul(a, b), 2, 256) ==
        dir_mul(perfect_power_embed(a, 2, 256), perfect_power_embed(b, 2, 256)));
  CHECK_THROWS_AS(perfect_power_embed(a, 1, 8), Error);
}

TEST_CASE("ordinary algebra") {
  const OrdSeries p = ord_pow_param(ord_one_plus_x(12));
  for (unsigned n = 0; n <= 12; ++n) CHECK(p[n] == binom_poly(Symbol::psi(), n));
  const OrdSeries l = ord_log(ord_one_plus_x(10));
  for (unsigned n = 1; n <= 10; ++n) CHECK(l[n] == Polynomial(make_rational(n % 2 ? 1 : -1, n)));
  SeriesRng rng(13);
  const OrdSeries a = rng.ord(16, 1), b = rng.ord(16, 0);
  CHECK(series_substitute_symbol(ord_pow_param(a), Symbol::psi(), Polynomial(2)) == ord_mul(a, a));
  CHECK(ord_log(ord_exp(b)) == b);
  CHECK(ord_mul(a, ord_inverse_mul(a)) == OrdSeries::constant(16, 1));
  // e^x composed with b equals exp(b).
  CHECK(ord_compose(ord_exp_x(16), b) == ord_exp(b));
  CHECK_THROWS_AS(ord_log(b), Error);
  CHECK_THROWS_AS(ord_compose(a, a), Error);
}

TEST_CASE("row polynomials of the exponential conjugate") {
  // a^(phi) = sum_m phi^m/m! (log o a)^(m), the s~_n rows.
  SeriesRng rng(14);
  const DirSeries a = rng.dir(32, 1);
  const DirSeries b = dir_log(a);
  const DirSeries p = at_psi(dir_pow_param(a), P("phi"));
  for (unsigned n = 1; n <= 32; ++n) {
    Polynomial row;
    for (unsigned m = 0; m <= n; ++m)
      row += bell_Btilde(n, m, b.coeffs()) * P("phi").pow(m) * make_rational(Integer(1), factorial(m));
    REQUIRE(row == p[n]);
  }
}

TEST_CASE("fault hook corrupts exactly one coefficient") {
  SeriesRng rng(15);
  const DirSeries a = rng.dir(20, 1), b = rng.dir(20, 1);
  const DirSeries clean = dir_mul(a, b);
  detail::set_convolution_fault(12);
  const DirSeries dirty = dir_mul(a, b);
  detail::set_convolution_fault(0);
  for (unsigned n = 1; n <= 20; ++n) CHECK((dirty[n] == clean[n]) == (n != 12));
}
