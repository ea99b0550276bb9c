#include "logmap/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <string>

#include "logmap/diagram.hpp"
#include "logmap/error.hpp"
#include "logmap/numtheory.hpp"
#include "logmap/parallel.hpp"

namespace logmap {

namespace {

constexpr unsigned kMaxEnumeratedBits = 32;
constexpr std::uint64_t kSegment = std::uint64_t{1} << 20;

struct PrimeStats {
  bool maximal = false;
  double cycles = 0.0;
  double period_per_cycle = 0.0;
  double period_per_seed = 0.0;
};

bool in_class(std::uint64_t p, PrimeClass cls) {
  return p % 4 == (cls == PrimeClass::three_mod_four ? 3u : 1u);
}

}  // namespace

std::string_view to_string(SweepKind k) noexcept {
  switch (k) {
    case SweepKind::maximal: return "maximal";
    case SweepKind::cycles: return "cycles";
    case SweepKind::periods: return "periods";
  }
  return "?";
}

std::string_view to_string(PrimeClass c) noexcept {
  return c == PrimeClass::three_mod_four ? "3mod4" : "1mod4";
}

SweepKind sweep_kind_from_string(std::string_view s) {
  if (s == "maximal") return SweepKind::maximal;
  if (s == "cycles") return SweepKind::cycles;
  if (s == "periods") return SweepKind::periods;
  throw DomainError("unknown sweep kind '" + std::string(s) + "'");
}

PrimeClass prime_class_from_string(std::string_view s) {
  if (s == "3mod4") return PrimeClass::three_mod_four;
  if (s == "1mod4") return PrimeClass::one_mod_four;
  throw DomainError("unknown prime class '" + std::string(s) + "'");
}

std::vector<std::uint64_t> primes_with_bits(unsigned bits, PrimeClass cls) {
  if (bits < 2 || bits > kMaxEnumeratedBits) {
    throw DomainError("primes_with_bits: bit size " + std::to_string(bits) + " outside [2, 32]");
  }
  const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
  const std::uint64_t hi = std::uint64_t{1} << bits;
  std::uint64_t root = 1;
  while (root * root < hi) ++root;
  const std::vector<bool> small = prime_sieve(root);

  std::vector<std::uint64_t> out;
  std::vector<bool> composite;
  for (std::uint64_t start = lo; start < hi; start += kSegment) {
    const std::uint64_t end = std::min(hi, start + kSegment);
    composite.assign(end - start, false);
    for (std::uint64_t q = 2; q <= root; ++q) {
      if (!small[q]) continue;
      std::uint64_t first = std::max(q * q, (start + q - 1) / q * q);
      for (std::uint64_t j = first; j < end; j += q) composite[j - start] = true;
    }
    for (std::uint64_t n = std::max<std::uint64_t>(start, 2); n < end; ++n) {
      if (!composite[n - start] && in_class(n, cls)) out.push_back(n);
    }
  }
  return out;
}

std::vector<std::uint64_t> sample_primes(unsigned bits, PrimeClass cls, std::size_t count, std::uint64_t seed) {
  if (bits < 3 || bits > 62) throw DomainError("sample_primes: bit size must be in [3, 62]");
  if (bits <= 24) {
    std::vector<std::uint64_t> all = primes_with_bits(bits, cls);
    if (all.size() <= count) return all;
  }
  std::seed_seq seq{seed, static_cast<std::uint64_t>(bits), static_cast<std::uint64_t>(cls)};
  std::mt19937_64 rng(seq);
  const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
  const std::uint64_t residue = cls == PrimeClass::three_mod_four ? 3 : 1;
  std::set<std::uint64_t> picked;
  while (picked.size() < count) {
    // Raw engine output keeps the draw sequence identical across standard libraries.
    const std::uint64_t candidate = ((lo + rng() % lo) & ~std::uint64_t{3}) | residue;
    if (candidate >= lo && is_prime(candidate)) picked.insert(candidate);
  }
  return {picked.begin(), picked.end()};
}

SweepRow sweep_row(unsigned bits, PrimeClass cls, const SweepOptions& opts) {
  SweepRow row;
  row.bits = bits;
  row.cls = cls;
  row.sampled = bits > opts.exhaustive_max_bits;
  const std::vector<std::uint64_t> primes =
      row.sampled ? sample_primes(bits, cls, opts.sample, opts.rng_seed) : primes_with_bits(bits, cls);

  const bool need_census = opts.kind != SweepKind::maximal;
  std::vector<PrimeStats> stats(primes.size());
  parallel_for(primes.size(), [&](std::size_t i) {
    PrimeStats& s = stats[i];
    s.maximal = is_maximal_prime(primes[i]).is_maximal;
    if (!need_census) return;
    const CycleCensus c = census(primes[i]);
    const auto cycles = static_cast<double>(c.cycle_count());
    const auto covered = static_cast<double>(c.covered());
    s.cycles = cycles;
    s.period_per_cycle = covered / cycles;
    s.period_per_seed = static_cast<double>(c.seed_weighted_period_sum()) / covered;
  });

  row.primes_tested = primes.size();
  for (const PrimeStats& s : stats) {
    row.maximal_count += s.maximal ? 1 : 0;
    row.mean_cycles += s.cycles;
    row.mean_period_per_cycle += s.period_per_cycle;
    row.mean_period_per_seed += s.period_per_seed;
  }
  if (!primes.empty()) {
    const auto n = static_cast<double>(primes.size());
    row.pct_maximal = 100.0 * static_cast<double>(row.maximal_count) / n;
    row.mean_cycles /= n;
    row.mean_period_per_cycle /= n;
    row.mean_period_per_seed /= n;
  }
  return row;
}

SweepResult run_sweep(const SweepOptions& opts) {
  if (opts.n_min < 3 || opts.n_min > opts.n_max || opts.n_max > 62) {
    throw DomainError("sweep: need 3 <= n_min <= n_max <= 62");
  }
  if (opts.exhaustive_max_bits > kMaxEnumeratedBits) {
    throw DomainError("sweep: exhaustive enumeration is limited to 32-bit primes");
  }
  const auto started = std::chrono::steady_clock::now();
  SweepResult out;
  for (unsigned bits = opts.n_min; bits <= opts.n_max; ++bits) {
    if (opts.budget_seconds > 0.0 && bits > opts.n_min) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
      if (elapsed.count() > opts.budget_seconds) {
        out.truncated = true;
        out.truncated_before_bits = bits;
        break;
      }
    }
    for (PrimeClass cls : opts.classes) out.rows.push_back(sweep_row(bits, cls, opts));
  }
  return out;
}

}  // namespace logmap
