#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdalg/polynomial.hpp"
#include "rdalg/series.hpp"

namespace rdalg {

// -- Special series -----------------------------------------------------------

/// The all-ones series x + x^2 + x^3 + ...
DirSeries zeta(unsigned trunc);
/// 1 at primes, 0 elsewhere; this is log o eps.
DirSeries prime_indicator(unsigned trunc);
/// eps^(psi), built as the parametric exponential of the prime indicator.
DirSeries eps_param(unsigned trunc);
/// eps itself (psi = 1).
DirSeries eps(unsigned trunc);

/// Ordinary e^x, 1 + x and 1/(1 - x).
OrdSeries ord_exp_x(unsigned trunc);
OrdSeries ord_one_plus_x(unsigned trunc);
OrdSeries ord_geometric(unsigned trunc);

// -- Lift between the two algebras ----------------------------------------------

/// Maps a(x) with a_0 = 1 to the Dirichlet series whose psi-th power has
/// coefficient prod_i [x^{m_i}] a^psi at n = prod p_i^{m_i}.
DirSeries lift_theorem1(const OrdSeries& a, unsigned trunc);

// -- Generalized Lagrange series ------------------------------------------------

/// The family _(beta)a^(phi) of a Dirichlet series a with a_1 = 1.
/// beta is either a rational constant or the symbol beta.
struct LagrangeFamily {
  DirSeries base;
  Polynomial beta;
  DirSeries derived;  // coefficients in Q[phi, beta, L_p]
};

/// [x^n] = phi * (u_n / psi)(phi + beta ln n) with u_n = [x^n] a^(psi).
LagrangeFamily lagrange_dir(const DirSeries& a, const Polynomial& beta);

/// The transform's middle member [x^n] (x - beta (log o a)*) o a^(psi) at
/// psi = phi + beta ln n, computed without the divide-and-substitute step.
DirSeries lagrange_dir_middle(const DirSeries& a, const Polynomial& beta);

/// Ordinary counterpart: [x^n] = phi * (u_n / psi)(phi + beta n), a_0 = 1.
OrdSeries lagrange_ord(const OrdSeries& a, const Polynomial& beta);

// -- Abel analogs -----------------------------------------------------------

struct IdentityOutcome {
  bool holds = true;
  // First term of lhs - rhs when the identity fails.
  std::optional<std::string> counterexample;
};

/// The four divisor-sum analogs of Abel's identities at n, as polynomial
/// identities in Q[phi, beta, L_p]:
///   [0] (phi+beta)(phi+beta+ln n)^{s(n)-1} = sum_d (n d)_f G(phi,d) G(beta,n/d)
///   [1] (phi+beta+ln n)^{s(n)} = sum_d (n d)_f (phi+ln d)^{s(d)} G(beta,n/d)
///   [2] ln n * G(phi,n) = sum_d (n d)_f phi^{s(d)} ln d (ln n)^{s(n/d)}
///   [3] phi^{s(n)} = sum_d (n d)_f G(phi,d) (-ln d)^{s(n/d)}
/// where G(t, d) = t (t + ln d)^{s(d)-1} for d > 1 and G(t, 1) = 1.
struct AbelReport {
  std::uint64_t n = 0;
  std::array<IdentityOutcome, 4> identities;
  bool all_hold() const noexcept;
};

AbelReport abel_check(std::uint64_t n);

/// G(t, n) above, computed from [x^n] _(1)eps^(phi) scaled by f(n).
Polynomial abel_kernel(const Polynomial& t, std::uint64_t n);

/// Classic Abel identities for n = p^m with a = L_p, summed over k = 0..m
/// with ordinary binomials. Same index convention as AbelReport.
std::array<IdentityOutcome, 4> abel_classic_check(std::uint64_t p, unsigned m);

/// Both sides of identity `which` for n, for callers comparing routes.
std::pair<Polynomial, Polynomial> abel_sides(std::uint64_t n, unsigned which);
std::pair<Polynomial, Polynomial> abel_classic_sides(std::uint64_t p, unsigned m, unsigned which);

// -- u_n family ---------------------------------------------------------------

struct UFamilyReport {
  struct Line {
    std::uint64_t n;
    IdentityOutcome forward;  // Lagrange coefficient as a divisor sum
    IdentityOutcome inverse;  // u_n recovered from Lagrange coefficients
    IdentityOutcome lagrange;  // closed coefficient law vs lagrange_dir
  };
  std::vector<Line> lines;
  // n = p^m reductions to the ordinary mutually inverse relations.
  std::vector<Line> prime_power_lines;
  bool all_hold() const noexcept;
};

/// Builds a^(phi) with coefficients u_n(phi)/f(n) via lift_theorem1 and checks
/// the pair of mutually inverse divisor-sum relations for n <= trunc.
UFamilyReport u_family_check(const OrdSeries& a, const Rational& beta, unsigned trunc);

// -- Basis expansion ----------------------------------------------------------

/// c_n = [x^n] b o a^(ln n), n = 1..trunc (slot 0 unused).
std::vector<Polynomial> expand_over_basis(const DirSeries& b, const DirSeries& a, unsigned trunc);

/// (x - (log o a)*) o sum_n a^(-ln n)(x^n) c_n.
DirSeries reconstruct_from_basis(const std::vector<Polynomial>& c, const DirSeries& a, unsigned trunc);

/// First term of p - q as text, or nullopt when equal.
std::optional<std::string> first_difference(const Polynomial& p, const Polynomial& q);

}  // namespace rdalg
