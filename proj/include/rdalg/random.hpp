#pragma once

#include <cstdint>
#include <random>

#include "rdalg/series.hpp"

namespace rdalg {

/// Seeded source of small random rationals and series for property checks.
class SeriesRng {
 public:
  explicit SeriesRng(std::uint64_t seed) : gen_(seed) {}

  /// p/q with |p| <= 3 and 1 <= q <= 4.
  Rational small_rational() {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
    const int p = num(gen_);
    return make_rational(p, den(gen_));
  }

  /// Coefficients 2..trunc random, coefficient 1 fixed.
  DirSeries dir(unsigned trunc, const Rational& first) {
    DirSeries s(trunc);
    s.set(1, Polynomial(first));
    for (unsigned n = 2; n <= trunc; ++n) s.set(n, Polynomial(small_rational()));
    return s;
  }

  /// Coefficients 1..trunc random, constant term fixed.
  OrdSeries ord(unsigned trunc, const Rational& constant) {
    OrdSeries s(trunc);
    s.set(0, Polynomial(constant));
    for (unsigned n = 1; n <= trunc; ++n) s.set(n, Polynomial(small_rational()));
    return s;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace rdalg
