#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdalg/rational.hpp"

namespace rdalg {

// Interned variable name. Reserved families:
//   phi, beta       power parameters of user-facing results
//   psi             power parameter before specialization
//   L<p>            ln p for a prime p
//   a<k>            generic series coefficient, k >= 1
// Other identifiers are accepted as free variables.
class Symbol {
 public:
  static Symbol named(std::string_view name);
  static Symbol prime_log(std::uint64_t p);
  static Symbol coefficient(unsigned k);
  static Symbol phi();
  static Symbol beta();
  static Symbol psi();

  const std::string& name() const;
  std::uint32_t id() const noexcept { return id_; }

  friend bool operator==(Symbol, Symbol) = default;
  friend auto operator<=>(Symbol, Symbol) = default;

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

// Power product of symbols, stored sorted by symbol id with no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (symbol id, exponent)

  Monomial() = default;
  explicit Monomial(Symbol s, std::uint32_t exponent = 1);

  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(Symbol s) const noexcept;
  bool is_unit() const noexcept { return factors_.empty(); }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  // Removes every power of s; the exponent is returned through `removed`.
  Monomial without(Symbol s, std::uint32_t& removed) const;
  Monomial lowered(Symbol s) const;  // exponent of s reduced by one; s must occur

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

// Graded, then lexicographic on (symbol id, exponent) lists.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT
  Polynomial(Symbol s);  // NOLINT
  Polynomial(const Monomial& m, const Rational& c);

  static Polynomial parse(std::string_view text);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Constant term (zero when absent).
  Rational constant() const;
  std::size_t size() const noexcept { return terms_.size(); }
  std::uint32_t degree() const noexcept;
  std::uint32_t degree_in(Symbol s) const noexcept;
  bool contains(Symbol s) const noexcept { return degree_in(s) > 0; }
  const Terms& terms() const noexcept { return terms_; }
  std::vector<Symbol> symbols() const;

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.terms_ == q.terms_; }

  Polynomial pow(unsigned k) const;
  // Adds c*m without building a temporary polynomial.
  void add_term(const Monomial& m, const Rational& c);

  /// Deterministic text form: terms by descending degree, then by symbol name.
  std::string to_string() const;

 private:
  Terms terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// Replaces every occurrence of s by r and expands.
Polynomial poly_substitute(const Polynomial& p, Symbol s, const Polynomial& r);

/// q with q*s == p. Throws NotDivisible when some term lacks s.
Polynomial poly_divide_by_symbol(const Polynomial& p, Symbol s);

/// Throws MissingSymbol when p mentions a symbol the assignment lacks.
Rational poly_eval(const Polynomial& p, const std::map<Symbol, Rational>& assignment);

/// s(s-1)...(s-m+1)/m!
Polynomial binom_poly(Symbol s, unsigned m);
/// s(s+1)...(s+m-1)
Polynomial rising_poly(Symbol s, unsigned m);
/// The same falling and rising products evaluated at an arbitrary polynomial.
Polynomial binom_poly(const Polynomial& x, unsigned m);
Polynomial rising_poly(const Polynomial& x, unsigned m);

/// ln n as sum of m_i * L<p_i> over the canonical decomposition of n.
Polynomial log_n_poly(std::uint64_t n);

}  // namespace rdalg
