#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rdalg/expr.hpp"
#include "rdalg/matrix.hpp"

namespace rdalg {

/// {"kind":"dir"|"ord","trunc":N,"coeffs":{"<index>":"<polynomial>"}}
/// Zero coefficients are omitted.
std::string series_to_json(const SeriesValue& s);
SeriesValue series_from_json(std::string_view text);
SeriesValue load_series(const std::string& path);

/// Header "n,coeff", one row per index.
std::string series_to_csv(const SeriesValue& s);

/// Header "n,<col>,..." then one row per matrix row. Columns run from
/// col_base to the last column holding a nonzero entry.
std::string matrix_to_csv(const DirMatrix& m);
/// {"kind":..,"size":N,"row_base":..,"col_base":..,"entries":{"n,k":"<poly>"}}
std::string matrix_to_json(const DirMatrix& m);

/// Rows n = 1..n_max, columns m = 0..m_max of B_{n,m} or B~_{n,m}, evaluated
/// at a_k = 1 or kept symbolic.
std::string bell_table_csv(unsigned n_max, unsigned m_max, bool tilde, bool symbolic);

/// Ordered factorizations of n into m factors, one per line as "2*3*2".
/// With m < 0 every m from 1 to s(n) is listed, each block headed "m=<m>".
std::string factorizations_text(std::uint64_t n, int m);

}  // namespace rdalg
