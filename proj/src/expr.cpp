#include "rdalg/expr.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "rdalg/error.hpp"
#include "rdalg/io.hpp"
#include "rdalg/transforms.hpp"

namespace rdalg {

namespace {

enum class Arg { Dir, Ord, Series, Int, Poly, Sym, Path };

struct FunctionSpec {
  std::vector<Arg> params;
  std::size_t required;
  const char* help;
};

const std::map<std::string, FunctionSpec, std::less<>>& functions() {
  static const std::map<std::string, FunctionSpec, std::less<>> table = {
      {"dmul", {{Arg::Dir, Arg::Dir}, 2, "Dirichlet composition a o b"}},
      {"dadd", {{Arg::Dir, Arg::Dir}, 2, "a + b"}},
      {"dsub", {{Arg::Dir, Arg::Dir}, 2, "a - b"}},
      {"dscale", {{Arg::Dir, Arg::Poly}, 2, "c a"}},
      {"dinv", {{Arg::Dir}, 1, "a^(-1); a_1 a nonzero constant"}},
      {"dpow_int", {{Arg::Dir, Arg::Int}, 2, "a^(k)"}},
      {"dpow_param", {{Arg::Dir, Arg::Poly}, 1, "a^(psi), or a^(p) when p is given; a_1 = 1"}},
      {"dlog", {{Arg::Dir}, 1, "log o a; a_1 = 1"}},
      {"dexp", {{Arg::Dir, Arg::Poly}, 1, "x + sum psi^m b^(m)/m!, psi -> p when given; b_1 = 0"}},
      {"star", {{Arg::Dir}, 1, "a* = sum ln n a_n x^n"}},
      {"subst_xk", {{Arg::Dir, Arg::Int}, 2, "a(x^k)"}},
      {"twist", {{Arg::Dir, Arg::Int}, 2, "sum n^k a_n x^n"}},
      {"rd_action", {{Arg::Dir, Arg::Dir}, 2, "b_d o (a); a_1 = 1"}},
      {"lift", {{Arg::Ord}, 1, "lifted series with psi-power coefficients; a_0 = 1"}},
      {"lagrange_dir", {{Arg::Dir, Arg::Poly}, 2, "_(beta)a^(phi); a_1 = 1"}},
      {"lagrange_ord", {{Arg::Ord, Arg::Poly}, 2, "ordinary _(beta)a^phi; a_0 = 1"}},
      {"apply", {{Arg::Ord, Arg::Dir}, 2, "f o (a) = f_0 x + sum f_m a^(m); a_1 = 0"}},
      {"embed", {{Arg::Ord, Arg::Int}, 2, "a_n placed at index m^n"}},
      {"subst", {{Arg::Series, Arg::Sym, Arg::Poly}, 3, "symbol s replaced by p in every coefficient"}},
      {"load", {{Arg::Path}, 1, "series read from a JSON file"}},
      {"oadd", {{Arg::Ord, Arg::Ord}, 2, "a + b"}},
      {"omul", {{Arg::Ord, Arg::Ord}, 2, "Cauchy product"}},
      {"ocompose", {{Arg::Ord, Arg::Ord}, 2, "a(b(x)); b_0 = 0"}},
      {"oinv", {{Arg::Ord}, 1, "1/a"}},
      {"olog", {{Arg::Ord}, 1, "log a; a_0 = 1"}},
      {"oexp", {{Arg::Ord}, 1, "exp b; b_0 = 0"}},
      {"opow_param", {{Arg::Ord, Arg::Poly}, 1, "a^psi, or a^p when p is given; a_0 = 1"}},
  };
  return table;
}

struct BuiltinSpec {
  bool dirichlet;
  const char* help;
};

const std::map<std::string, BuiltinSpec, std::less<>>& builtins() {
  static const std::map<std::string, BuiltinSpec, std::less<>> table = {
      {"x", {true, "x"}},
      {"zeta", {true, "x + x^2 + x^3 + ..."}},
      {"geom", {true, "x/(1-x), same as zeta"}},
      {"geom2", {true, "x^2/(1-x)"}},
      {"eps", {true, "Dirichlet analog of e^x"}},
      {"eps_param", {true, "eps^(psi)"}},
      {"primes", {true, "prime indicator, log o eps"}},
      {"gen", {true, "x + a2 x^2 + a3 x^3 + ..."}},
      {"gen2", {true, "a2 x^2 + a3 x^3 + ..."}},
      {"one", {false, "ordinary 1"}},
      {"ox", {false, "ordinary x"}},
      {"onepx", {false, "1 + x"}},
      {"expx", {false, "e^x"}},
      {"ordgeom", {false, "1/(1-x)"}},
      {"ogen", {false, "a1 x + a2 x^2 + ..."}},
      {"ogen1", {false, "1 + a1 x + a2 x^2 + ..."}},
  };
  return table;
}

bool is_symbol_name(std::string_view name) {
  try {
    Symbol::named(name);
    return true;
  } catch (const Error&) {
    return false;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = primary();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Expr primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("expected expression", pos_);
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return number();
    if (c == '"') return string();
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  Expr identifier() {
    Expr e;
    e.offset = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    e.text = std::string(text_.substr(e.offset, pos_ - e.offset));
    if (!at('(')) return e;
    e.kind = Expr::Kind::Call;
    ++pos_;
    if (at(')')) {
      ++pos_;
      return e;
    }
    for (;;) {
      e.args.push_back(primary());
      if (at(',')) {
        ++pos_;
        continue;
      }
      if (at(')')) {
        ++pos_;
        return e;
      }
      throw SyntaxError("expected ',' or ')'", pos_);
    }
  }

  Expr number() {
    Expr e;
    e.kind = Expr::Kind::Number;
    e.offset = pos_;
    if (text_[pos_] == '-') ++pos_;
    auto digits = [this] {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) throw SyntaxError("expected digit", pos_);
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      digits();
    }
    e.text = std::string(text_.substr(e.offset, pos_ - e.offset));
    try {
      e.text = to_string(parse_rational(e.text));
    } catch (const Error&) {
      throw SyntaxError("invalid number", e.offset);
    }
    return e;
  }

  Expr string() {
    Expr e;
    e.kind = Expr::Kind::String;
    e.offset = pos_++;
    for (;;) {
      if (pos_ >= text_.size()) throw SyntaxError("unterminated string", e.offset);
      const char c = text_[pos_++];
      if (c == '"') return e;
      if (c == '\\') {
        if (pos_ >= text_.size()) throw SyntaxError("unterminated string", e.offset);
        e.text += text_[pos_++];
      } else {
        e.text += c;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void check_series(const Expr& e);

void check_param(const Expr& e, Arg kind) {
  switch (kind) {
    case Arg::Dir:
    case Arg::Ord:
    case Arg::Series:
      check_series(e);
      return;
    case Arg::Int:
      if (e.kind != Expr::Kind::Number || e.text.find('/') != std::string::npos)
        throw SyntaxError("expected an integer", e.offset);
      return;
    case Arg::Poly:
      if (e.kind == Expr::Kind::Number) return;
      if (e.kind == Expr::Kind::Name && is_symbol_name(e.text)) return;
      if (e.kind == Expr::Kind::String) {
        try {
          Polynomial::parse(e.text);
        } catch (const SyntaxError& err) {
          throw SyntaxError("invalid polynomial", e.offset + 1 + err.offset());
        }
        return;
      }
      throw SyntaxError("expected a number, symbol or quoted polynomial", e.offset);
    case Arg::Sym:
      if (e.kind == Expr::Kind::Name && is_symbol_name(e.text)) return;
      throw SyntaxError("expected a symbol name", e.offset);
    case Arg::Path:
      if (e.kind == Expr::Kind::String) return;
      throw SyntaxError("expected a quoted path", e.offset);
  }
}

void check_series(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Name:
      if (builtins().count(e.text)) return;
      if (functions().count(e.text))
        throw Error(ErrorCode::ArityMismatch, e.text + " needs arguments (offset " + std::to_string(e.offset) + ")");
      throw Error(ErrorCode::UnknownFunction, "unknown series '" + e.text + "' at offset " + std::to_string(e.offset));
    case Expr::Kind::Call: {
      auto it = functions().find(e.text);
      if (it == functions().end()) {
        throw Error(ErrorCode::UnknownFunction,
                    "unknown function '" + e.text + "' at offset " + std::to_string(e.offset));
      }
      const FunctionSpec& spec = it->second;
      if (e.args.size() < spec.required || e.args.size() > spec.params.size()) {
        std::string expected = std::to_string(spec.required);
        if (spec.params.size() != spec.required) expected += " or " + std::to_string(spec.params.size());
        throw Error(ErrorCode::ArityMismatch, e.text + " takes " + expected + " argument(s), got " +
                                                  std::to_string(e.args.size()) + " (offset " +
                                                  std::to_string(e.offset) + ")");
      }
      for (std::size_t i = 0; i < e.args.size(); ++i) check_param(e.args[i], spec.params[i]);
      return;
    }
    default:
      throw SyntaxError("expected a series", e.offset);
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// -- Evaluation ---------------------------------------------------------------

DirSeries builtin_dir(const std::string& name, unsigned n) {
  if (name == "x") return DirSeries::identity(n);
  if (name == "zeta" || name == "geom") return zeta(n);
  if (name == "geom2") {
    DirSeries s = zeta(n);
    s.set(1, Polynomial());
    return s;
  }
  if (name == "eps") return eps(n);
  if (name == "eps_param") return eps_param(n);
  if (name == "primes") return prime_indicator(n);
  DirSeries s(n);
  if (name == "gen") s.set(1, Polynomial(1));
  for (unsigned k = 2; k <= n; ++k) s.set(k, Polynomial(Symbol::coefficient(k)));
  return s;
}

OrdSeries builtin_ord(const std::string& name, unsigned n) {
  if (name == "one") return OrdSeries::constant(n, Polynomial(1));
  if (name == "ox") return OrdSeries::variable(n);
  if (name == "onepx") return ord_one_plus_x(n);
  if (name == "expx") return ord_exp_x(n);
  if (name == "ordgeom") return ord_geometric(n);
  OrdSeries s(n);
  if (name == "ogen1") s.set(0, Polynomial(1));
  for (unsigned k = 1; k <= n; ++k) s.set(k, Polynomial(Symbol::coefficient(k)));
  return s;
}

class Evaluator {
 public:
  explicit Evaluator(unsigned trunc) : n_(trunc) {}

  SeriesValue eval(const Expr& e) {
    if (e.kind == Expr::Kind::Name) {
      if (builtins().at(e.text).dirichlet) return builtin_dir(e.text, n_);
      return builtin_ord(e.text, n_);
    }
    const std::string& f = e.text;
    const auto& a = e.args;
    if (f == "load") {
      SeriesValue v = load_series(a[0].text);
      return std::visit([this](const auto& s) -> SeriesValue { return s.truncated(std::min(s.trunc(), n_)); }, v);
    }
    if (f == "subst") {
      SeriesValue v = eval(a[0]);
      const Symbol s = Symbol::named(a[1].text);
      const Polynomial r = poly(a[2]);
      return std::visit([&](const auto& x) -> SeriesValue { return series_substitute_symbol(x, s, r); }, v);
    }
    if (f == "dmul") return dir_mul(dir(a[0]), dir(a[1]));
    if (f == "dadd") return dir(a[0]) + dir(a[1]);
    if (f == "dsub") return dir(a[0]) - dir(a[1]);
    if (f == "dscale") return dir(a[0]) * poly(a[1]);
    if (f == "dinv") return dir_inverse(dir(a[0]));
    if (f == "dpow_int") return dir_pow_int(dir(a[0]), integer(a[1]));
    if (f == "dpow_param") return psi_to(dir_pow_param(dir(a[0])), a, 1);
    if (f == "dlog") return dir_log(dir(a[0]));
    if (f == "dexp") return psi_to(dir_exp_param(dir(a[0])), a, 1);
    if (f == "star") return star_derivative(dir(a[0]));
    if (f == "subst_xk") return dir_subst_xk(dir(a[0]), positive(a[1]));
    if (f == "twist") return twist_int(dir(a[0]), integer(a[1]));
    if (f == "rd_action") return rd_action(dir(a[0]), dir(a[1]));
    if (f == "lift") return lift_theorem1(ord(a[0]), n_);
    if (f == "lagrange_dir") return lagrange_dir(dir(a[0]), poly(a[1])).derived;
    if (f == "lagrange_ord") return lagrange_ord(ord(a[0]), poly(a[1]));
    if (f == "apply") return dir_apply_series(ord(a[0]), dir(a[1]));
    if (f == "embed") return perfect_power_embed(ord(a[0]), positive(a[1]), n_);
    if (f == "oadd") return ord_add(ord(a[0]), ord(a[1]));
    if (f == "omul") return ord_mul(ord(a[0]), ord(a[1]));
    if (f == "ocompose") return ord_compose(ord(a[0]), ord(a[1]));
    if (f == "oinv") return ord_inverse_mul(ord(a[0]));
    if (f == "olog") return ord_log(ord(a[0]));
    if (f == "oexp") return ord_exp(ord(a[0]));
    if (f == "opow_param") {
      OrdSeries p = ord_pow_param(ord(a[0]));
      if (a.size() > 1) p = series_substitute_symbol(p, Symbol::psi(), poly(a[1]));
      return p;
    }
    throw Error(ErrorCode::Internal, "no evaluator for " + f);
  }

 private:
  DirSeries dir(const Expr& e) {
    SeriesValue v = eval(e);
    if (auto* d = std::get_if<DirSeries>(&v)) return std::move(*d);
    throw Error(ErrorCode::InvalidArgument, "expected a Dirichlet series at offset " + std::to_string(e.offset));
  }

  OrdSeries ord(const Expr& e) {
    SeriesValue v = eval(e);
    if (auto* o = std::get_if<OrdSeries>(&v)) return std::move(*o);
    throw Error(ErrorCode::InvalidArgument, "expected an ordinary series at offset " + std::to_string(e.offset));
  }

  static Polynomial poly(const Expr& e) {
    if (e.kind == Expr::Kind::Number) return Polynomial(parse_rational(e.text));
    if (e.kind == Expr::Kind::Name) return Polynomial(Symbol::named(e.text));
    return Polynomial::parse(e.text);
  }

  static long integer(const Expr& e) {
    try {
      return std::stol(e.text);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "integer out of range at offset " + std::to_string(e.offset));
    }
  }

  static unsigned positive(const Expr& e) {
    const long k = integer(e);
    if (k < 1 || k > 1000000)
      throw Error(ErrorCode::InvalidArgument, "expected a positive integer at offset " + std::to_string(e.offset));
    return static_cast<unsigned>(k);
  }

  static DirSeries psi_to(DirSeries s, const std::vector<Expr>& args, std::size_t i) {
    if (args.size() <= i) return s;
    return series_substitute_symbol(s, Symbol::psi(), poly(args[i]));
  }

  unsigned n_;
};

}  // namespace

Expr parse_expr(std::string_view text) {
  Expr e = Parser(text).parse();
  check_series(e);
  return e;
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Name:
    case Expr::Kind::Number:
      return e.text;
    case Expr::Kind::String:
      return quote(e.text);
    case Expr::Kind::Call: {
      std::string out = e.text + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? ", " : "") + to_string(e.args[i]);
      return out + ")";
    }
  }
  return {};
}

SeriesValue evaluate(const Expr& e, unsigned trunc) {
  if (trunc == 0) throw Error(ErrorCode::InvalidArgument, "truncation order must be >= 1");
  return Evaluator(trunc).eval(e);
}

SeriesValue evaluate(std::string_view text, unsigned trunc) { return evaluate(parse_expr(text), trunc); }

std::vector<std::string> expression_help() {
  static const char* kNames[] = {"dir", "ord", "series", "k", "p", "symbol", "\"path\""};
  std::vector<std::string> out;
  for (const auto& [name, spec] : builtins())
    out.push_back(name + std::string(spec.dirichlet ? "  (dir)  " : "  (ord)  ") + spec.help);
  for (const auto& [name, spec] : functions()) {
    std::string sig = name + "(";
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
      if (i) sig += ", ";
      if (i >= spec.required) sig += "[";
      sig += kNames[static_cast<int>(spec.params[i])];
      if (i >= spec.required) sig += "]";
    }
    out.push_back(sig + ")  " + spec.help);
  }
  return out;
}

}  // namespace rdalg
