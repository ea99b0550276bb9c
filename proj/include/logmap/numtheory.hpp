#pragma once

// Arithmetic in F_p for odd primes p < 2^63, plus the integer routines the
// rest of the library leans on: primality, factorization, multiplicative
// orders and the "primed" order of 2.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "logmap/error.hpp"

namespace logmap {

__extension__ using u128 = unsigned __int128;

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 63;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (m <= 0xFFFFFFFFu) return (a * b) % m;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Residue class mod p. The modulus lives in the owning PrimeField.
struct FieldElement {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend constexpr bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, sorted by prime. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);

/// Product of prime^exponent; throws std::overflow_error past 2^64.
std::uint64_t reconstruct(const Factorization& f);
std::vector<std::uint64_t> divisors(const Factorization& f);
std::uint64_t totient(const Factorization& f);
Factorization totient_factorization(const Factorization& f);
Factorization multiply(const Factorization& a, const Factorization& b);

/// Legendre symbol (a/p). Throws InvalidField unless p is an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

/// Jacobi symbol (a/n) for odd n; no primality check.
int jacobi(std::uint64_t a, std::uint64_t n);

/// Least k >= 1 with pow_is_identity(k), given the factored group order.
/// `pow_is_identity(k)` must report whether g^k is the identity.
template <class PowIsIdentity>
std::uint64_t order_from_group_order(const Factorization& group_order,
                                     PowIsIdentity&& pow_is_identity) {
  std::uint64_t order = reconstruct(group_order);
  if (!pow_is_identity(order)) {
    throw DomainError("element order does not divide the supplied group order");
  }
  for (const auto& [q, e] : group_order) {
    for (unsigned i = 0; i < e; ++i) {
      if (!pow_is_identity(order / q)) break;
      order /= q;
    }
  }
  return order;
}

/// Order of g in (Z/nZ)^x. Throws DomainError if gcd(g, n) != 1.
std::uint64_t mult_order_mod(std::uint64_t g, std::uint64_t n);

/// Least k >= 1 with 2^k = +-1 (mod m), m odd and >= 3.
std::uint64_t ord_prime(std::uint64_t m);

/// Same as ord_prime but also accepts m = 1 (value 1).
std::uint64_t ord_prime_or_one(std::uint64_t m);

/// Splits n > 0 as 2^e * odd.
struct TwoAdic {
  unsigned exponent;
  std::uint64_t odd;
};
TwoAdic split_two_adic(std::uint64_t n);

/// Sieve of Eratosthenes; entry i is true iff i is prime.
std::vector<bool> prime_sieve(std::uint64_t limit);

/// Immutable F_p context. Construction checks that p is an odd prime < 2^63.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  FieldElement element(std::int64_t v) const noexcept;
  FieldElement from_u64(std::uint64_t v) const noexcept { return {v % p_}; }
  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement minus_one() const noexcept { return {p_ - 1}; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    std::uint64_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElement neg(FieldElement a) const noexcept { return {a.value == 0 ? 0 : p_ - a.value}; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return {mul_mod(a.value, b.value, p_)};
  }
  FieldElement sqr(FieldElement a) const noexcept { return mul(a, a); }
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept {
    return {pow_mod(a.value, e, p_)};
  }
  /// Throws DomainError for a = 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement half(FieldElement a) const noexcept;

  int legendre(FieldElement a) const noexcept;
  bool is_square(FieldElement a) const noexcept { return legendre(a) >= 0; }

  /// Some square root of a (Tonelli-Shanks), or nullopt for non-residues.
  std::optional<FieldElement> sqrt(FieldElement a) const;

  FieldElement smallest_non_residue() const noexcept;

  /// Order of a nonzero g in F_p^x; group_order must factor p - 1.
  std::uint64_t mult_order(FieldElement g, const Factorization& group_order) const;
  std::uint64_t mult_order(FieldElement g) const;

 private:
  std::uint64_t p_;
};

}  // namespace logmap
