#include "rdalg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rdalg/arith.hpp"
#include "rdalg/error.hpp"

namespace rdalg {

namespace {

using nlohmann::json;

template <class S>
json coeffs_json(const S& s, unsigned first) {
  json c = json::object();
  for (unsigned n = first; n <= s.trunc(); ++n)
    if (!s[n].is_zero()) c[std::to_string(n)] = s[n].to_string();
  return c;
}

}  // namespace

std::string series_to_json(const SeriesValue& s) {
  json j;
  if (const auto* d = std::get_if<DirSeries>(&s)) {
    j["kind"] = "dir";
    j["trunc"] = d->trunc();
    j["coeffs"] = coeffs_json(*d, 1);
  } else {
    const auto& o = std::get<OrdSeries>(s);
    j["kind"] = "ord";
    j["trunc"] = o.trunc();
    j["coeffs"] = coeffs_json(o, 0);
  }
  return j.dump();
}

SeriesValue series_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  try {
    const std::string kind = j.at("kind").get<std::string>();
    const auto trunc = j.at("trunc").get<std::int64_t>();
    if (kind != "dir" && kind != "ord") throw Error(ErrorCode::InvalidArgument, "kind must be \"dir\" or \"ord\"");
    if (trunc < (kind == "dir" ? 1 : 0) || trunc > 100000)
      throw Error(ErrorCode::InvalidArgument, "trunc out of range");
    std::vector<Polynomial> c(trunc + 1);
    for (const auto& [key, value] : j.at("coeffs").items()) {
      std::size_t used = 0;
      long idx = -1;
      try {
        idx = std::stol(key, &used);
      } catch (const std::exception&) {
      }
      if (used != key.size() || idx < 0 || idx > trunc || (kind == "dir" && idx == 0))
        throw Error(ErrorCode::InvalidArgument, "bad coefficient index \"" + key + "\"");
      c[idx] = Polynomial::parse(value.get<std::string>());
    }
    if (kind == "dir") return DirSeries(static_cast<unsigned>(trunc), std::move(c));
    return OrdSeries(static_cast<unsigned>(trunc), std::move(c));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed series JSON: ") + e.what());
  }
}

SeriesValue load_series(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return series_from_json(buf.str());
}

std::string series_to_csv(const SeriesValue& s) {
  std::string out = "n,coeff\n";
  std::visit(
      [&out](const auto& v) {
        const unsigned first = std::is_same_v<std::decay_t<decltype(v)>, DirSeries> ? 1 : 0;
        for (unsigned n = first; n <= v.trunc(); ++n) out += std::to_string(n) + "," + v[n].to_string() + "\n";
      },
      s);
  return out;
}

std::string matrix_to_csv(const DirMatrix& m) {
  const unsigned last = m.last_nonzero_col();
  std::string out = "n";
  for (unsigned k = m.col_base(); k <= last; ++k) out += "," + std::to_string(k);
  out += "\n";
  for (unsigned n = m.row_base(); n <= m.size(); ++n) {
    out += std::to_string(n);
    for (unsigned k = m.col_base(); k <= last; ++k) out += "," + m(n, k).to_string();
    out += "\n";
  }
  return out;
}

std::string matrix_to_json(const DirMatrix& m) {
  json j;
  j["kind"] = to_string(m.kind());
  j["size"] = m.size();
  j["row_base"] = m.row_base();
  j["col_base"] = m.col_base();
  json e = json::object();
  for (const auto& [key, value] : m.entries())
    e[std::to_string(key.first) + "," + std::to_string(key.second)] = value.to_string();
  j["entries"] = std::move(e);
  return j.dump();
}

std::string bell_table_csv(unsigned n_max, unsigned m_max, bool tilde, bool symbolic) {
  const auto values = symbolic ? indeterminate_values(n_max) : unit_values(n_max);
  std::string out = "n";
  for (unsigned m = 0; m <= m_max; ++m) out += "," + std::to_string(m);
  out += "\n";
  for (unsigned n = 1; n <= n_max; ++n) {
    out += std::to_string(n);
    for (unsigned m = 0; m <= m_max; ++m)
      out += "," + (tilde ? bell_Btilde(n, m, values) : bell_B(n, m, values)).to_string();
    out += "\n";
  }
  return out;
}

std::string factorizations_text(std::uint64_t n, int m) {
  auto block = [n](unsigned k) {
    std::string out;
    for (const auto& f : ordered_factorizations(n, k)) {
      for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "*" : "") + std::to_string(f[i]);
      out += "\n";
    }
    return out;
  };
  if (m >= 0) return block(static_cast<unsigned>(m));
  std::string out;
  for (unsigned k = 1; k <= s_of(n); ++k) out += "m=" + std::to_string(k) + "\n" + block(k);
  return out;
}

}  // namespace rdalg
