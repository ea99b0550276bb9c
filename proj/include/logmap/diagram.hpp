#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "logmap/ivsets.hpp"

namespace logmap {

struct CensusRow {
  std::uint64_t d = 0;
  std::uint64_t ord_d_2 = 0;
  std::uint64_t phi_d = 0;
  std::uint64_t n_d = 0;  // phi(d) / (2 ord'_d 2)
  std::uint64_t c_d = 0;  // ord'_d 2
  bool minus_one_reachable = false;  // 2^k = -1 (mod d) has a solution

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Cycle structure of LM on the initial-value set, one row per divisor
/// d != 1 of m, where p = 2m + 1 (p = 3 mod 4) or p = 2m - 1 (p = 1 mod 4).
struct CycleCensus {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  IvClass cls = IvClass::d0_d0m1;
  std::vector<CensusRow> rows;

  std::uint64_t cycle_count() const noexcept;
  /// Sum of n_d * c_d; equals the initial-value set size.
  std::uint64_t covered() const noexcept;
  /// Sum of n_d * c_d^2: total period seen from every seed.
  std::uint64_t seed_weighted_period_sum() const noexcept;
};

/// period -> number of cycles with that period
using CycleMultiset = std::map<std::uint64_t, std::uint64_t>;

CycleCensus census(std::uint64_t p);
CycleMultiset to_multiset(const CycleCensus& c);

/// Iterates LM from every initial-value seed and counts distinct cycles.
CycleMultiset brute_census(std::uint64_t p);

enum class MaximalBranch {
  full_order,      // ord_{p1} 2 = p1 - 1
  half_order_odd,  // ord_{p1} 2 = (p1 - 1) / 2, and that is odd
  fails,
};

std::string_view to_string(MaximalBranch b) noexcept;

struct MaximalityReport {
  std::uint64_t p = 0;
  bool is_maximal = false;
  std::optional<std::uint64_t> p1;  // set when m is prime
  MaximalBranch branch = MaximalBranch::fails;
  std::optional<std::uint64_t> max_period;  // (p1 - 1) / 2 when maximal
};

/// Whether the whole initial-value set is a single LM-cycle.
MaximalityReport is_maximal_prime(std::uint64_t p);

/// p <= limit with p = 2 p1 + 1, p1 = 2 p2 + 1, all prime.
std::vector<std::uint64_t> two_safe_primes(std::uint64_t limit);

/// p <= limit, p = 1 mod 4, p = 2 p1 - 1 with p1 a safe prime.
std::vector<std::uint64_t> analogous_two_safe(std::uint64_t limit);

}  // namespace logmap
