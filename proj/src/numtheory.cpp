#include "logmap/numtheory.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace logmap {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n
// or n itself when this polynomial constant fails.
std::uint64_t brent_rho(std::uint64_t n, std::uint64_t c) {
  auto f = [n, c](std::uint64_t x) {
    std::uint64_t y = mul_mod(x, x, n) + c;
    return y >= n || y < c ? y - n : y;
  };
  constexpr std::uint64_t kBatch = 128;
  std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const std::uint64_t steps = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = f(y);
        q = mul_mod(q, abs_diff(x, y), n);
      }
      g = gcd(q, n);
    }
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(abs_diff(x, ys), n);
    } while (g == 1);
  }
  return g;
}

void factor_large(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    const std::uint64_t d = brent_rho(n, c);
    if (d != n && d != 1) {
      factor_large(d, out);
      factor_large(n / d, out);
      return;
    }
  }
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 0 || x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  const unsigned s = static_cast<unsigned>(std::countr_zero(d));
  d >>= s;
  // The first twelve primes are a complete witness set below 3.3e24.
  for (std::uint64_t a : kBases) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  std::map<std::uint64_t, unsigned> found;
  auto strip = [&](std::uint64_t d) {
    while (n % d == 0) {
      n /= d;
      ++found[d];
    }
  };
  strip(2);
  strip(3);
  std::uint64_t d = 5;
  for (; d <= kTrialLimit && d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) {
    if (d * d > n) {
      ++found[n];
    } else {
      factor_large(n, found);
    }
  }
  Factorization out;
  out.reserve(found.size());
  for (const auto& [q, e] : found) out.push_back({q, e});
  return out;
}

std::uint64_t reconstruct(const Factorization& f) {
  std::uint64_t n = 1;
  for (const auto& [q, e] : f) {
    for (unsigned i = 0; i < e; ++i) {
      if (n > std::numeric_limits<std::uint64_t>::max() / q) {
        throw std::overflow_error("reconstruct: product exceeds 64 bits");
      }
      n *= q;
    }
  }
  return n;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [q, e] : f) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= q;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t totient(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& [q, e] : f) {
    phi *= q - 1;
    for (unsigned i = 1; i < e; ++i) phi *= q;
  }
  return phi;
}

Factorization multiply(const Factorization& a, const Factorization& b) {
  std::map<std::uint64_t, unsigned> merged;
  for (const auto& [q, e] : a) merged[q] += e;
  for (const auto& [q, e] : b) merged[q] += e;
  Factorization out;
  out.reserve(merged.size());
  for (const auto& [q, e] : merged) out.push_back({q, e});
  return out;
}

Factorization totient_factorization(const Factorization& f) {
  Factorization out;
  for (const auto& [q, e] : f) {
    Factorization term = factorize(q - 1);
    if (e > 1) term = multiply(term, Factorization{{q, e - 1}});
    out = multiply(out, term);
  }
  return out;
}

int jacobi(std::uint64_t a, std::uint64_t n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    const unsigned twos = static_cast<unsigned>(std::countr_zero(a));
    a >>= twos;
    if ((twos & 1) && (n % 8 == 3 || n % 8 == 5)) result = -result;
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? result : 0;
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p == 2 || p >= kMaxModulus || !is_prime(p)) {
    throw InvalidField("legendre: modulus " + std::to_string(p) + " is not an odd prime");
  }
  const auto sp = static_cast<std::int64_t>(p);
  const auto r = static_cast<std::uint64_t>(((a % sp) + sp) % sp);
  return jacobi(r, p);
}

std::uint64_t mult_order_mod(std::uint64_t g, std::uint64_t n) {
  if (n == 0) throw DomainError("mult_order_mod: modulus must be positive");
  g %= n;
  if (n == 1) return 1;
  if (gcd(g, n) != 1) {
    throw DomainError("mult_order_mod: " + std::to_string(g) + " is not a unit mod " + std::to_string(n));
  }
  const Factorization group = totient_factorization(factorize(n));
  return order_from_group_order(group, [&](std::uint64_t k) { return pow_mod(g, k, n) == 1; });
}

std::uint64_t ord_prime_or_one(std::uint64_t m) {
  if (m == 1) return 1;
  return ord_prime(m);
}

std::uint64_t ord_prime(std::uint64_t m) {
  if (m % 2 == 0 || m < 3) {
    throw DomainError("ord_prime: modulus must be odd and at least 3, got " + std::to_string(m));
  }
  const std::uint64_t ord = mult_order_mod(2, m);
  if (ord % 2 == 0 && pow_mod(2, ord / 2, m) == m - 1) return ord / 2;
  return ord;
}

TwoAdic split_two_adic(std::uint64_t n) {
  const auto e = static_cast<unsigned>(std::countr_zero(n));
  return {e, n >> e};
}

std::vector<bool> prime_sieve(std::uint64_t limit) {
  std::vector<bool> sieve(limit + 1, true);
  sieve[0] = false;
  if (limit >= 1) sieve[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!sieve[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  return sieve;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p == 2 || p >= kMaxModulus || !is_prime(p)) {
    throw InvalidField("modulus " + std::to_string(p) + " is not an odd prime below 2^63");
  }
}

FieldElement PrimeField::element(std::int64_t v) const noexcept {
  const auto sp = static_cast<std::int64_t>(p_);
  return {static_cast<std::uint64_t>(((v % sp) + sp) % sp)};
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value == 0) throw DomainError("inverse of zero");
  return pow(a, p_ - 2);
}

FieldElement PrimeField::half(FieldElement a) const noexcept {
  return {a.value % 2 == 0 ? a.value / 2 : (a.value + p_) / 2};
}

int PrimeField::legendre(FieldElement a) const noexcept { return jacobi(a.value, p_); }

std::optional<FieldElement> PrimeField::sqrt(FieldElement a) const {
  if (a.value == 0) return FieldElement{0};
  if (legendre(a) != 1) return std::nullopt;
  if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);

  const auto [s, q] = split_two_adic(p_ - 1);
  const FieldElement z = smallest_non_residue();
  FieldElement c = pow(z, q);
  FieldElement t = pow(a, q);
  FieldElement r = pow(a, (q + 1) / 2);
  unsigned m = s;
  while (t.value != 1) {
    unsigned i = 0;
    FieldElement t2 = t;
    while (t2.value != 1) {
      t2 = sqr(t2);
      ++i;
    }
    FieldElement b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = sqr(b);
    m = i;
    c = sqr(b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

FieldElement PrimeField::smallest_non_residue() const noexcept {
  std::uint64_t a = 2;
  while (jacobi(a, p_) != -1) ++a;
  return {a};
}

std::uint64_t PrimeField::mult_order(FieldElement g, const Factorization& group_order) const {
  if (g.value == 0) throw DomainError("mult_order: zero is not in the multiplicative group");
  return order_from_group_order(group_order, [&](std::uint64_t k) { return pow(g, k).value == 1; });
}

std::uint64_t PrimeField::mult_order(FieldElement g) const {
  return mult_order(g, factorize(p_ - 1));
}

}  // namespace logmap
