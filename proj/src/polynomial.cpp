#include "rdalg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "rdalg/arith.hpp"
#include "rdalg/error.hpp"

namespace rdalg {

// ---------------------------------------------------------------------------
// Symbol registry

namespace {

class SymbolTable {
 public:
  std::uint32_t intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }

  const std::string& name(std::uint32_t id) {
    std::lock_guard lock(mutex_);
    return names_.at(id);  // deque elements never move
  }

 private:
  std::mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

SymbolTable& symbol_table() {
  static SymbolTable table;
  return table;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool digits_only(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Symbol Symbol::named(std::string_view name) {
  if (!is_identifier(name))
    throw Error(ErrorCode::InvalidArgument, "invalid symbol name '" + std::string(name) + "'");
  if (name.size() > 1 && name[0] == 'L' && digits_only(name.substr(1))) {
    if (name.size() > 19 || !is_prime(std::stoull(std::string(name.substr(1)))))
      throw Error(ErrorCode::InvalidArgument, "L<p> requires a prime p, got '" + std::string(name) + "'");
  }
  if (name.size() > 1 && name[0] == 'a' && digits_only(name.substr(1))) {
    if (name[1] == '0')
      throw Error(ErrorCode::InvalidArgument, "a<k> requires k >= 1, got '" + std::string(name) + "'");
  }
  return Symbol(symbol_table().intern(name));
}

Symbol Symbol::prime_log(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "L<p> requires a prime p");
  return Symbol(symbol_table().intern("L" + std::to_string(p)));
}

Symbol Symbol::coefficient(unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "a<k> requires k >= 1");
  return Symbol(symbol_table().intern("a" + std::to_string(k)));
}

Symbol Symbol::phi() {
  static const Symbol s(symbol_table().intern("phi"));
  return s;
}
Symbol Symbol::beta() {
  static const Symbol s(symbol_table().intern("beta"));
  return s;
}
Symbol Symbol::psi() {
  static const Symbol s(symbol_table().intern("psi"));
  return s;
}

const std::string& Symbol::name() const { return symbol_table().name(id_); }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Symbol s, std::uint32_t exponent) {
  if (exponent > 0) {
    factors_.emplace_back(s.id(), exponent);
    degree_ = exponent;
  }
}

std::uint32_t Monomial::exponent(Symbol s) const noexcept {
  for (const auto& [id, e] : factors_)
    if (id == s.id()) return e;
  return 0;
}

Monomial Monomial::without(Symbol s, std::uint32_t& removed) const {
  Monomial r;
  removed = 0;
  r.factors_.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.first == s.id()) {
      removed = f.second;
    } else {
      r.factors_.push_back(f);
      r.degree_ += f.second;
    }
  }
  return r;
}

Monomial Monomial::lowered(Symbol s) const {
  Monomial r = *this;
  for (auto it = r.factors_.begin(); it != r.factors_.end(); ++it) {
    if (it->first == s.id()) {
      if (--it->second == 0) r.factors_.erase(it);
      --r.degree_;
      return r;
    }
  }
  throw Error(ErrorCode::NotDivisible, "monomial does not contain " + s.name());
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      r.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

namespace {

using NamedFactors = std::vector<std::pair<std::string, std::uint32_t>>;

NamedFactors named_factors(const Monomial& m) {
  NamedFactors out;
  out.reserve(m.factors().size());
  auto& table = symbol_table();
  for (const auto& [id, e] : m.factors()) out.emplace_back(table.name(id), e);
  std::sort(out.begin(), out.end());
  return out;
}

// Printing order: higher degree first, then the monomial with the larger
// exponent in the alphabetically first differing variable.
bool print_before(const NamedFactors& a, std::uint32_t deg_a, const NamedFactors& b, std::uint32_t deg_b) {
  if (deg_a != deg_b) return deg_a > deg_b;
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    if (a[i].second != b[i].second) return a[i].second > b[i].second;
  }
  return a.size() > b.size();
}

std::string format_factors(const NamedFactors& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += " * ";
    out += f[i].first;
    if (f[i].second != 1) out += "^" + std::to_string(f[i].second);
  }
  return out;
}

}  // namespace

std::string Monomial::to_string() const {
  if (is_unit()) return "1";
  return format_factors(named_factors(*this));
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.factors() < b.factors();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial::Polynomial(Symbol s) { terms_.emplace(Monomial(s), Rational(1)); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant() const {
  // The unit monomial has degree zero and therefore sorts last.
  if (!terms_.empty() && terms_.rbegin()->first.is_unit()) return terms_.rbegin()->second;
  return Rational(0);
}

std::uint32_t Polynomial::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint32_t Polynomial::degree_in(Symbol s) const noexcept {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
  return d;
}

std::vector<Symbol> Polynomial::symbols() const {
  std::vector<std::uint32_t> ids;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) ids.push_back(f.first);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Symbol> out;
  out.reserve(ids.size());
  auto& table = symbol_table();
  for (auto id : ids) out.push_back(Symbol::named(table.name(id)));
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
  *this = *this * q;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  if (q.is_constant()) return p * q.terms_.begin()->second;
  if (p.is_constant()) return q * p.terms_.begin()->second;
  Polynomial r;
  Rational prod;
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      mpq_mul(prod.get_mpq_t(), cp.get_mpq_t(), cq.get_mpq_t());
      r.add_term(mp * mq, prod);
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  struct Printed {
    NamedFactors factors;
    std::uint32_t degree;
    const Rational* coeff;
  };
  std::vector<Printed> items;
  items.reserve(terms_.size());
  for (const auto& [m, c] : terms_) items.push_back({named_factors(m), m.degree(), &c});
  std::sort(items.begin(), items.end(), [](const Printed& a, const Printed& b) {
    return print_before(a.factors, a.degree, b.factors, b.degree);
  });
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    const Rational& c = *item.coeff;
    bool negative = c < 0;
    Rational magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (item.factors.empty()) {
      out += rdalg::to_string(magnitude);
    } else {
      out += format_factors(item.factors);
      if (magnitude != 1) out += " * " + rdalg::to_string(magnitude);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (accept('*')) {
        p = p * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Polynomial d = unary();
        if (!d.is_constant() || d.constant() == 0) {
          pos_ = at;
          fail("divisor must be a nonzero constant");
        }
        p *= Rational(1 / d.constant());
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string_view num = digits();
      std::string_view den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("expected denominator");
        if (Integer(std::string(den)) == 0) fail("zero denominator");
      }
      return Polynomial(make_rational(Integer(std::string(num)), Integer(std::string(den))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      try {
        return Polynomial(Symbol::named(name));
      } catch (const Error& e) {
        throw SyntaxError(e.what(), start);
      }
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// Free operations

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial poly_substitute(const Polynomial& p, Symbol s, const Polynomial& r) {
  std::map<std::uint32_t, Polynomial> by_power;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = 0;
    Monomial rest = m.without(s, e);
    by_power[e].add_term(rest, c);
  }
  if (by_power.size() == 1 && by_power.begin()->first == 0) return p;
  Polynomial result;
  Polynomial r_power(1);
  std::uint32_t current = 0;
  for (auto& [e, coeff] : by_power) {
    while (current < e) {
      r_power *= r;
      ++current;
    }
    result += coeff * r_power;
  }
  return result;
}

Polynomial poly_divide_by_symbol(const Polynomial& p, Symbol s) {
  Polynomial q;
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(s) == 0)
      throw Error(ErrorCode::NotDivisible, "term " + m.to_string() + " is not divisible by " + s.name());
    q.add_term(m.lowered(s), c);
  }
  return q;
}

Rational poly_eval(const Polynomial& p, const std::map<Symbol, Rational>& assignment) {
  std::map<std::uint32_t, const Rational*> values;
  for (const auto& [s, v] : assignment) values.emplace(s.id(), &v);
  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (const auto& [id, e] : m.factors()) {
      auto it = values.find(id);
      if (it == values.end())
        throw Error(ErrorCode::MissingSymbol, "no value assigned to " + symbol_table().name(id));
      Rational v;
      mpz_pow_ui(v.get_num_mpz_t(), it->second->get_num_mpz_t(), e);
      mpz_pow_ui(v.get_den_mpz_t(), it->second->get_den_mpz_t(), e);
      t *= v;
    }
    total += t;
  }
  return total;
}

Polynomial binom_poly(const Polynomial& x, unsigned m) {
  Polynomial r(1);
  for (unsigned i = 0; i < m; ++i) r *= x - Polynomial(static_cast<long>(i));
  return r * make_rational(Integer(1), factorial(m));
}

Polynomial rising_poly(const Polynomial& x, unsigned m) {
  Polynomial r(1);
  for (unsigned i = 0; i < m; ++i) r *= x + Polynomial(static_cast<long>(i));
  return r;
}

Polynomial binom_poly(Symbol s, unsigned m) { return binom_poly(Polynomial(s), m); }
Polynomial rising_poly(Symbol s, unsigned m) { return rising_poly(Polynomial(s), m); }

Polynomial log_n_poly(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "ln 0 is not representable");
  Polynomial r;
  for (const auto& [p, m] : factorize(n))
    r.add_term(Monomial(Symbol::prime_log(p)), Rational(static_cast<long>(m)));
  return r;
}

}  // namespace rdalg
