#pragma once

#include <cstdint>
#include <vector>

#include "rdalg/polynomial.hpp"
#include "rdalg/rational.hpp"

namespace rdalg {

struct PrimePower {
  std::uint64_t prime;
  unsigned multiplicity;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod p_i^{m_i}, primes strictly increasing. Empty for n = 1.
using CanonicalDecomposition = std::vector<PrimePower>;

CanonicalDecomposition factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// All divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// s(n) = sum of multiplicities.
unsigned s_of(std::uint64_t n);
/// f(n) = product of multiplicity factorials.
Integer f_of(std::uint64_t n);

/// f(n) / (f(d) f(n/d)). Throws NotADivisor unless d | n.
Rational binom_f(std::uint64_t n, std::uint64_t d);

/// Ordered tuples of factors >= 2 whose product is n, in lexicographic order.
/// (1, 0) yields the single empty tuple.
std::vector<std::vector<std::uint64_t>> ordered_factorizations(std::uint64_t n, unsigned m);

/// Unordered factorizations of n into m factors >= 2, each as a
/// non-increasing list.
std::vector<std::vector<std::uint64_t>> multiplicative_partitions(std::uint64_t n, unsigned m);

/// Multiplicity vectors (m_1..m_n) with sum k*m_k = n and sum m_k = m.
/// Element k-1 of each vector holds m_k.
std::vector<std::vector<unsigned>> partitions_into_parts(unsigned n, unsigned m);

// The Bell-polynomial families read their arguments from `values`, where
// values[k] is a_k. Slots below the first used index are ignored.

/// Sum over partitions of n into m parts of m!/(m_1!...m_n!) prod a_k^{m_k}.
Polynomial bell_B(unsigned n, unsigned m, const std::vector<Polynomial>& values);

/// Sum over factorizations of n into m factors >= 2 of
/// m!/(m_2!...m_n!) prod a_k^{m_k}. B~_{1,0} = 1.
Polynomial bell_Btilde(std::uint64_t n, unsigned m, const std::vector<Polynomial>& values);

/// values[k] = a<k> symbols for k in [1, n], slot 0 zero.
std::vector<Polynomial> indeterminate_values(unsigned n);
/// values[k] = 1 for k in [1, n].
std::vector<Polynomial> unit_values(unsigned n);

/// Moebius function for 1..n by a linear sieve; slot 0 is 0.
std::vector<int> mobius_sieve(unsigned n);

}  // namespace rdalg
