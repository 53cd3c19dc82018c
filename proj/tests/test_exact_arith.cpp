#include <doctest.h>

#include "rdalg/error.hpp"
#include "rdalg/polynomial.hpp"
#include "rdalg/random.hpp"
#include "test_support.hpp"

using namespace rdalg;
using rdalg::test::P;

TEST_CASE("rationals are normalized") {
  CHECK(make_rational(4, 6) == make_rational(2, 3));
  CHECK(to_string(make_rational(-4, 6)) == "-2/3");
  CHECK(to_string(make_rational(3, -1)) == "-3");
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK_THROWS_AS(make_rational(1, 0), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("symbols") {
  CHECK(Symbol::prime_log(7).name() == "L7");
  CHECK(Symbol::coefficient(12).name() == "a12");
  CHECK(Symbol::named("phi") == Symbol::phi());
  CHECK_THROWS_AS(Symbol::named("L4"), Error);
  CHECK_THROWS_AS(Symbol::named("a0"), Error);
  CHECK_THROWS_AS(Symbol::prime_log(9), Error);
}

TEST_CASE("poly_add") {
  const Polynomial phi(Symbol::phi());
  CHECK((phi + (-phi)).is_zero());
  CHECK(poly_add(P("L2 + L3"), P("L2")) == P("2*L2 + L3"));
  CHECK(P("phi^2/2") + P("phi/2") == P("1/2*phi^2 + 1/2*phi"));
}

TEST_CASE("poly_mul") {
  CHECK(poly_mul(P("phi"), P("phi+1")) == P("phi^2 + phi"));
  CHECK(P("L2") * P("L3") == P("L2*L3"));
  const Polynomial s = P("phi + beta*(2*L2+L3)");
  CHECK(s * s == P("phi^2 + 2*phi*beta*(2*L2+L3) + beta^2*(2*L2+L3)^2"));
}

TEST_CASE("poly_substitute") {
  CHECK(poly_substitute(P("psi^2"), Symbol::psi(), P("phi + beta*L2")) == P("phi^2 + 2*phi*beta*L2 + beta^2*L2^2"));
  CHECK(poly_substitute(binom_poly(Symbol::phi(), 2), Symbol::phi(), Polynomial(2)) == Polynomial(1));
  CHECK(poly_substitute(P("psi*L2 + psi^3*beta"), Symbol::psi(), Polynomial()).is_zero());
  CHECK(poly_substitute(P("phi*psi + psi"), Symbol::psi(), P("psi + 1")) == P("phi*psi + phi + psi + 1"));
}

TEST_CASE("poly_divide_by_symbol") {
  CHECK(poly_divide_by_symbol(P("phi^2 + 3*phi"), Symbol::phi()) == P("phi + 3"));
  CHECK(poly_divide_by_symbol(P("phi*L2"), Symbol::phi()) == P("L2"));
  try {
    poly_divide_by_symbol(P("phi + 1"), Symbol::phi());
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(P("phi^2 + phi"), {{Symbol::phi(), Rational(3)}}) == 12);
  CHECK(poly_eval(Polynomial(), {}) == 0);
  CHECK(poly_eval(binom_poly(Symbol::phi(), 3), {{Symbol::phi(), Rational(5)}}) == 10);
  try {
    poly_eval(P("phi*beta"), {{Symbol::phi(), Rational(1)}});
    FAIL("expected MissingSymbol");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingSymbol);
  }
}

TEST_CASE("binom_poly and rising_poly") {
  CHECK(binom_poly(Symbol::phi(), 0) == Polynomial(1));
  CHECK(binom_poly(Symbol::phi(), 2) == P("(phi^2 - phi)/2"));
  CHECK(poly_eval(binom_poly(Symbol::phi(), 3), {{Symbol::phi(), Rational(6)}}) == 20);
  CHECK(rising_poly(Symbol::phi(), 0) == Polynomial(1));
  CHECK(rising_poly(Symbol::phi(), 2) == P("phi^2 + phi"));
  CHECK(poly_eval(rising_poly(Symbol::phi(), 3), {{Symbol::phi(), Rational(2)}}) == 24);
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned t = m; t <= 15; ++t) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), t, m);
      CHECK(poly_eval(binom_poly(Symbol::phi(), m), {{Symbol::phi(), Rational(t)}}) == Rational(c));
    }
}

TEST_CASE("log_n_poly") {
  CHECK(log_n_poly(1).is_zero());
  CHECK(log_n_poly(12) == P("2*L2 + L3"));
  CHECK(log_n_poly(30) == P("L2 + L3 + L5"));
  for (std::uint64_t n = 1; n <= 100; ++n)
    for (std::uint64_t m = 1; m <= 100; ++m) REQUIRE(log_n_poly(n * m) == log_n_poly(n) + log_n_poly(m));
}

TEST_CASE("ring axioms on random polynomials") {
  SeriesRng rng(7);
  auto random_poly = [&rng] {
    Polynomial p;
    for (int t = 0; t < 5; ++t) {
      Polynomial term(rng.small_rational());
      for (const char* v : {"phi", "beta", "L2", "a3"})
        if (rng.small_rational() > 0) term *= P(v);
      p += term;
    }
    return p;
  };
  for (int i = 0; i < 40; ++i) {
    const Polynomial p = random_poly(), q = random_poly(), r = random_poly();
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + q == q + p);
    CHECK(poly_divide_by_symbol(p * P("beta"), Symbol::beta()) == p);
    const std::map<Symbol, Rational> at = {{Symbol::phi(), make_rational(2, 3)},
                                           {Symbol::beta(), Rational(-2)},
                                           {Symbol::prime_log(2), make_rational(1, 5)},
                                           {Symbol::coefficient(3), Rational(3)}};
    CHECK(poly_eval(p * q, at) == poly_eval(p, at) * poly_eval(q, at));
  }
}

TEST_CASE("text form") {
  CHECK(P("psi^3/2").to_string() == "psi^3 * 1/2");
  CHECK(P("0").to_string() == "0");
  CHECK(P("-phi + 1").to_string() == "-phi + 1");
  CHECK(P("2*a2*a6 + 2*a4*a3").to_string() == "a2 * a6 * 2 + a3 * a4 * 2");
  CHECK(P("-(2)^2 - -3").to_string() == "-1");
  for (const char* text : {"phi^3*1/2 + L2*beta - 7/3", "(a2 + a3)^3", "-L5*L7^2*beta + 1/9"}) {
    const Polynomial p = P(text);
    CHECK(P(p.to_string().c_str()) == p);
  }
}

TEST_CASE("parser errors carry offsets") {
  try {
    Polynomial::parse("phi + * 2");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 6);
  }
  CHECK_THROWS_AS(Polynomial::parse("phi^"), SyntaxError);
  CHECK_THROWS_AS(Polynomial::parse("(phi"), SyntaxError);
  CHECK_THROWS_AS(Polynomial::parse(""), SyntaxError);
}
