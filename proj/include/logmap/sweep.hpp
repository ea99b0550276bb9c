#pragma once

// Per-bit-size statistics over primes: how often the initial-value set is a
// single cycle, and how many cycles / how long they are otherwise.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace logmap {

enum class SweepKind { maximal, cycles, periods };
enum class PrimeClass { three_mod_four, one_mod_four };

std::string_view to_string(SweepKind k) noexcept;
std::string_view to_string(PrimeClass c) noexcept;
SweepKind sweep_kind_from_string(std::string_view s);
PrimeClass prime_class_from_string(std::string_view s);

struct SweepOptions {
  SweepKind kind = SweepKind::maximal;
  unsigned n_min = 3;
  unsigned n_max = 12;
  std::vector<PrimeClass> classes{PrimeClass::three_mod_four, PrimeClass::one_mod_four};
  /// Bit sizes above this are sampled instead of enumerated.
  unsigned exhaustive_max_bits = 24;
  std::size_t sample = 200;
  std::uint64_t rng_seed = 1;
  /// Wall-clock budget; 0 = unlimited. Checked between rows.
  double budget_seconds = 0.0;
};

struct SweepRow {
  unsigned bits = 0;
  PrimeClass cls = PrimeClass::three_mod_four;
  bool sampled = false;
  std::size_t primes_tested = 0;
  std::size_t maximal_count = 0;
  double pct_maximal = 0.0;
  // Only filled for the cycles / periods kinds.
  double mean_cycles = 0.0;            // mean over primes of sum_d n_d
  double mean_period_per_cycle = 0.0;  // mean over primes of (sum n_d c_d) / (sum n_d)
  double mean_period_per_seed = 0.0;   // mean over primes of (sum n_d c_d^2) / (sum n_d c_d)
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool truncated = false;
  std::optional<unsigned> truncated_before_bits;
};

/// Primes p in [2^(bits-1), 2^bits) with p = 3 or 1 (mod 4), ascending.
std::vector<std::uint64_t> primes_with_bits(unsigned bits, PrimeClass cls);

/// `count` distinct such primes drawn with a seeded mt19937_64, ascending.
std::vector<std::uint64_t> sample_primes(unsigned bits, PrimeClass cls, std::size_t count, std::uint64_t seed);

SweepRow sweep_row(unsigned bits, PrimeClass cls, const SweepOptions& opts);

/// One row per (bit size, class), bit sizes ascending. Throws DomainError
/// unless 3 <= n_min <= n_max <= 62.
SweepResult run_sweep(const SweepOptions& opts);

}  // namespace logmap
