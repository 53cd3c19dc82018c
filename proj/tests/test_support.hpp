#pragma once

#include <doctest.h>

#include "rdalg/polynomial.hpp"
#include "rdalg/series.hpp"

namespace rdalg::test {

inline Polynomial P(const char* text) { return Polynomial::parse(text); }

inline DirSeries dir_from(unsigned trunc, std::initializer_list<std::pair<unsigned, const char*>> coeffs) {
  DirSeries s(trunc);
  for (const auto& [n, c] : coeffs) s.set(n, P(c));
  return s;
}

}  // namespace rdalg::test
