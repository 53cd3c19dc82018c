#include "rdalg/arith.hpp"

#include <algorithm>
#include <map>

#include "rdalg/error.hpp"

namespace rdalg {

namespace {

// Smallest-prime-factor table, built once on first use. Magic-static
// initialization publishes it safely to every thread.
constexpr std::uint32_t kSieveLimit = 1u << 20;

const std::vector<std::uint32_t>& spf_table() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<std::uint32_t> spf(kSieveLimit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (spf[i] == 0) {
        spf[i] = i;
        primes.push_back(i);
      }
      for (std::uint32_t p : primes) {
        std::uint64_t j = std::uint64_t(p) * i;
        if (p > spf[i] || j > kSieveLimit) break;
        spf[j] = p;
      }
    }
    return spf;
  }();
  return table;
}

void require_positive(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "argument must be >= 1");
}

}  // namespace

CanonicalDecomposition factorize(std::uint64_t n) {
  require_positive(n);
  CanonicalDecomposition out;
  auto push = [&out](std::uint64_t p) {
    if (!out.empty() && out.back().prime == p)
      ++out.back().multiplicity;
    else
      out.push_back({p, 1});
  };
  if (n <= kSieveLimit) {
    const auto& spf = spf_table();
    while (n > 1) {
      std::uint64_t p = spf[n];
      push(p);
      n /= p;
    }
    return out;
  }
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      push(p);
      n /= p;
    }
  }
  if (n > 1) push(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n <= kSieveLimit) return spf_table()[n] == n;
  auto f = factorize(n);
  return f.size() == 1 && f[0].multiplicity == 1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, m] : factorize(n)) {
    std::size_t count = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= m; ++e) {
      power *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned s_of(std::uint64_t n) {
  unsigned s = 0;
  for (const auto& f : factorize(n)) s += f.multiplicity;
  return s;
}

Integer f_of(std::uint64_t n) {
  Integer f = 1;
  for (const auto& pf : factorize(n)) f *= factorial(pf.multiplicity);
  return f;
}

Rational binom_f(std::uint64_t n, std::uint64_t d) {
  require_positive(n);
  if (d == 0 || n % d != 0)
    throw Error(ErrorCode::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(n));
  return make_rational(f_of(n), f_of(d) * f_of(n / d));
}

namespace {

void ordered_rec(std::uint64_t n, unsigned m, std::vector<std::uint64_t>& prefix,
                 std::vector<std::vector<std::uint64_t>>& out) {
  if (m == 0) {
    if (n == 1) out.push_back(prefix);
    return;
  }
  if (n < 2) return;
  for (std::uint64_t d : divisors(n)) {
    if (d < 2) continue;
    prefix.push_back(d);
    ordered_rec(n / d, m - 1, prefix, out);
    prefix.pop_back();
  }
}

void unordered_rec(std::uint64_t n, unsigned m, std::uint64_t max_factor, std::vector<std::uint64_t>& prefix,
                   std::vector<std::vector<std::uint64_t>>& out) {
  if (m == 0) {
    if (n == 1) out.push_back(prefix);
    return;
  }
  if (n < 2) return;
  auto divs = divisors(n);
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    std::uint64_t d = *it;
    if (d < 2 || d > max_factor) continue;
    prefix.push_back(d);
    unordered_rec(n / d, m - 1, d, prefix, out);
    prefix.pop_back();
  }
}

void partitions_rec(unsigned remaining, unsigned parts_left, unsigned max_part, std::vector<unsigned>& mult,
                    std::vector<std::vector<unsigned>>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(mult);
    return;
  }
  // Each remaining part is at least 1 and at most max_part.
  if (remaining < parts_left || remaining > std::uint64_t(parts_left) * max_part) return;
  for (unsigned k = std::min(max_part, remaining); k >= 1; --k) {
    ++mult[k - 1];
    partitions_rec(remaining - k, parts_left - 1, k, mult, out);
    --mult[k - 1];
  }
}

Rational multinomial_weight(unsigned m, const std::map<std::uint64_t, unsigned>& counts) {
  Integer den = 1;
  for (const auto& [k, c] : counts) den *= factorial(c);
  return make_rational(factorial(m), den);
}

const Polynomial& value_at(const std::vector<Polynomial>& values, std::uint64_t k) {
  if (k >= values.size())
    throw Error(ErrorCode::InvalidArgument, "value list does not cover index " + std::to_string(k));
  return values[k];
}

}  // namespace

std::vector<std::vector<std::uint64_t>> ordered_factorizations(std::uint64_t n, unsigned m) {
  require_positive(n);
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> prefix;
  ordered_rec(n, m, prefix, out);
  return out;
}

std::vector<std::vector<std::uint64_t>> multiplicative_partitions(std::uint64_t n, unsigned m) {
  require_positive(n);
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> prefix;
  unordered_rec(n, m, n, prefix, out);
  return out;
}

std::vector<std::vector<unsigned>> partitions_into_parts(unsigned n, unsigned m) {
  if (n == 0 || m == 0 || m > n)
    throw Error(ErrorCode::InvalidArgument, "partitions_into_parts requires 1 <= m <= n");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> mult(n, 0);
  partitions_rec(n, m, n, mult, out);
  return out;
}

Polynomial bell_B(unsigned n, unsigned m, const std::vector<Polynomial>& values) {
  if (n == 0 || m == 0 || m > n) throw Error(ErrorCode::InvalidArgument, "bell_B requires 1 <= m <= n");
  Polynomial total;
  for (const auto& mult : partitions_into_parts(n, m)) {
    std::map<std::uint64_t, unsigned> counts;
    Polynomial term(1);
    for (unsigned k = 1; k <= n; ++k) {
      if (mult[k - 1] == 0) continue;
      counts[k] = mult[k - 1];
      term *= value_at(values, k).pow(mult[k - 1]);
    }
    total += term * multinomial_weight(m, counts);
  }
  return total;
}

Polynomial bell_Btilde(std::uint64_t n, unsigned m, const std::vector<Polynomial>& values) {
  require_positive(n);
  if (m == 0) return n == 1 ? Polynomial(1) : Polynomial();
  Polynomial total;
  for (const auto& factors : multiplicative_partitions(n, m)) {
    std::map<std::uint64_t, unsigned> counts;
    for (auto k : factors) ++counts[k];
    Polynomial term(1);
    for (const auto& [k, c] : counts) term *= value_at(values, k).pow(c);
    total += term * multinomial_weight(m, counts);
  }
  return total;
}

std::vector<Polynomial> indeterminate_values(unsigned n) {
  std::vector<Polynomial> v(n + 1);
  for (unsigned k = 1; k <= n; ++k) v[k] = Polynomial(Symbol::coefficient(k));
  return v;
}

std::vector<Polynomial> unit_values(unsigned n) {
  std::vector<Polynomial> v(n + 1, Polynomial(1));
  v[0] = Polynomial();
  return v;
}

std::vector<int> mobius_sieve(unsigned n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  std::vector<unsigned> primes;
  mu[0] = 0;
  for (unsigned i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (unsigned p : primes) {
      std::uint64_t j = std::uint64_t(p) * i;
      if (j > n) break;
      composite[j] = true;
      if (i % p == 0) {
        mu[j] = 0;
        break;
      }
      mu[j] = -mu[i];
    }
  }
  return mu;
}

}  // namespace rdalg
