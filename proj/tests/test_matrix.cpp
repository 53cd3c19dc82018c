#include <doctest.h>

#include "rdalg/arith.hpp"
#include "rdalg/error.hpp"
#include "rdalg/matrix.hpp"
#include "rdalg/random.hpp"
#include "rdalg/transforms.hpp"
#include "test_support.hpp"

using namespace rdalg;
using rdalg::test::P;

namespace {

DirSeries generic(unsigned trunc, unsigned first) {
  DirSeries s(trunc);
  for (unsigned k = first; k <= trunc; ++k) s.set(k, Polynomial(Symbol::coefficient(k)));
  return s;
}

DirSeries geom2(unsigned trunc) {
  DirSeries s = zeta(trunc);
  s.set(1, Polynomial());
  return s;
}

DirMatrix rd_random(SeriesRng& rng, unsigned n) {
  const DirSeries b = rng.dir(n, rng.small_rational() + 4);
  return build_rd(b, rng.dir(n, 1), n);
}

}  // namespace

TEST_CASE("build_mult") {
  const DirMatrix m = build_mult(generic(12, 1), 12);
  CHECK(m(6, 3) == P("a2"));
  CHECK(m(6, 1) == P("a6"));
  CHECK(m(5, 2).is_zero());
  CHECK(same_entries(build_mult(DirSeries::identity(20), 20), identity_matrix(20)));
  SeriesRng rng(1);
  const DirSeries a = rng.dir(24, 2), b = rng.dir(24, -1);
  CHECK(same_entries(multiply(build_mult(a, 24), build_mult(b, 24)), multiply(build_mult(b, 24), build_mult(a, 24))));
  CHECK(apply(build_mult(a, 24), b) == dir_mul(a, b));
  CHECK_THROWS_AS(build_mult(a, 30), Error);
}

TEST_CASE("build_column golden rows") {
  const DirMatrix m = build_column(geom2(13), 13);
  const auto row = [&](unsigned n) {
    std::vector<Polynomial> r;
    for (unsigned k = 0; k <= 3; ++k) r.push_back(m(n, k));
    return r;
  };
  CHECK(row(8) == std::vector<Polynomial>{0, 1, 2, 1});
  CHECK(row(12) == std::vector<Polynomial>{0, 1, 4, 3});
  CHECK(row(1) == std::vector<Polynomial>{1, 0, 0, 0});
  CHECK(m.last_nonzero_col() == 3);

  const DirMatrix s = build_column(generic(16, 2), 16);
  CHECK(s(12, 2) == P("2*a2*a6 + 2*a4*a3"));
  CHECK(s(16, 3) == P("3*a2^2*a4"));
  CHECK(s(16, 4) == P("a2^4"));
  const auto values = indeterminate_values(16);
  for (unsigned n = 2; n <= 16; ++n)
    for (unsigned k = 1; k <= n; ++k) REQUIRE(s(n, k) == bell_Btilde(n, k, values));
  CHECK_THROWS_AS(build_column(zeta(8), 8), Error);
}

TEST_CASE("build_riordan_ord golden rows") {
  OrdSeries a(6);
  for (unsigned k = 1; k <= 6; ++k) a.set(k, Polynomial(Symbol::coefficient(k)));
  const DirMatrix m = build_riordan_ord(OrdSeries::constant(6, 1), a, 6);
  CHECK(m(6, 2) == P("2*a1*a5 + 2*a2*a4 + a3^2"));
  CHECK(m(6, 6) == P("a1^6"));
  CHECK(m(0, 0) == Polynomial(1));
  CHECK(m(3, 1) == P("a3"));
  const DirMatrix id = build_riordan_ord(OrdSeries::constant(9, 1), OrdSeries::variable(9), 9);
  for (unsigned n = 0; n <= 9; ++n)
    for (unsigned k = 0; k <= 9; ++k) REQUIRE(id(n, k) == Polynomial(n == k ? 1 : 0));
}

TEST_CASE("build_mixed factors through mult and column") {
  SeriesRng rng(2);
  const DirSeries b = rng.dir(16, 1), a = geom2(16);
  const DirMatrix mixed = build_mixed(b, a, 16);
  const DirMatrix col = build_column(a, 16);
  for (unsigned k = 0; k <= 4; ++k) {
    DirSeries column(16);
    for (unsigned n = 1; n <= 16; ++n) column.set(n, col(n, k));
    const DirSeries expected = dir_mul(b, column);
    for (unsigned n = 1; n <= 16; ++n) REQUIRE(mixed(n, k) == expected[n]);
  }
}

TEST_CASE("build_rd") {
  SeriesRng rng(3);
  const DirSeries b = rng.dir(20, 2), a = rng.dir(20, 1);
  const DirMatrix m = build_rd(b, a, 20);
  for (unsigned n = 1; n <= 20; ++n) {
    CHECK(m(n, 1) == b[n]);
    CHECK(m(n, n) == Polynomial(2));
  }
  CHECK(same_entries(build_rd(DirSeries::identity(12), DirSeries::identity(12), 12), identity_matrix(12)));
  CHECK(apply(build_rd(DirSeries::identity(20), a, 20), b) == rd_action(a, b));
  CHECK(rd_action(a, DirSeries::identity(20)) == DirSeries::identity(20));
}

TEST_CASE("rd_multiply and rd_inverse") {
  SeriesRng rng(4);
  for (int i = 0; i < 3; ++i) {
    const DirMatrix m1 = rd_random(rng, 24), m2 = rd_random(rng, 24);
    CHECK(same_entries(rd_multiply(m1, m2, true), multiply(m1, m2)));
    CHECK(same_entries(multiply(m1, rd_inverse(m1)), identity_matrix(24)));
    CHECK(same_entries(rd_multiply(m1, build_rd(DirSeries::identity(24), DirSeries::identity(24), 24)), m1));
  }
  CHECK(same_entries(rd_inverse(identity_matrix(10)), identity_matrix(10)));
  DirMatrix singular = identity_matrix(4);
  singular.set(3, 3, Polynomial());
  CHECK_THROWS_AS(rd_inverse(singular), Error);
  CHECK_THROWS_AS(rd_multiply(build_mult(zeta(8), 8), identity_matrix(8)), Error);
}

TEST_CASE("star derivative conjugation") {
  SeriesRng rng(5);
  const DirSeries b = rng.dir(16, 1);
  const DirMatrix d = log_diagonal(16);
  const DirSeries shifted = DirSeries::identity(16) + star_derivative(dir_log(b));
  CHECK(same_entries(multiply(d, build_rd(DirSeries::identity(16), b, 16)), multiply(build_rd(shifted, b, 16), d)));
}

TEST_CASE("exp_conjugate") {
  CHECK(same_entries(exp_conjugate(identity_matrix(8), 8), identity_matrix(8)));
  // For zeta the rows are s~_n(x) = n! prod rising(x, m_i)/m_i!.
  const DirMatrix m = exp_conjugate(build_column(dir_log(zeta(24)), 24), 24);
  for (unsigned n = 2; n <= 24; ++n) {
    Polynomial expected = Polynomial(Rational(factorial(n)));
    for (const auto& f : factorize(n))
      expected *= rising_poly(Symbol::phi(), f.multiplicity) * make_rational(Integer(1), factorial(f.multiplicity));
    REQUIRE(row_polynomial(m, n, Symbol::phi()) == expected);
  }
  CHECK_THROWS_AS(exp_conjugate(identity_matrix(8), 501), Error);
}
