#include "logmap/diagram.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "logmap/generator.hpp"

namespace logmap {

namespace {

std::uint64_t half_order_modulus(std::uint64_t p, IvClass cls) {
  return cls == IvClass::d0_d0m1 ? (p - 1) / 2 : (p + 1) / 2;
}

}  // namespace

std::uint64_t CycleCensus::cycle_count() const noexcept {
  std::uint64_t n = 0;
  for (const auto& r : rows) n += r.n_d;
  return n;
}

std::uint64_t CycleCensus::covered() const noexcept {
  std::uint64_t n = 0;
  for (const auto& r : rows) n += r.n_d * r.c_d;
  return n;
}

std::uint64_t CycleCensus::seed_weighted_period_sum() const noexcept {
  std::uint64_t n = 0;
  for (const auto& r : rows) n += r.n_d * r.c_d * r.c_d;
  return n;
}

CycleCensus census(std::uint64_t p) {
  const PrimeField field(p);
  CycleCensus out;
  out.p = p;
  out.cls = iv_class_for(p);
  out.m = half_order_modulus(p, out.cls);
  for (std::uint64_t d : divisors(factorize(out.m))) {
    if (d == 1) continue;
    CensusRow row;
    row.d = d;
    row.ord_d_2 = mult_order_mod(2, d);
    row.phi_d = totient(factorize(d));
    row.minus_one_reachable = row.ord_d_2 % 2 == 0 && pow_mod(2, row.ord_d_2 / 2, d) == d - 1;
    row.c_d = row.minus_one_reachable ? row.ord_d_2 / 2 : row.ord_d_2;
    if (row.phi_d % (2 * row.c_d) != 0) {
      throw std::logic_error("census: 2 ord'_d 2 does not divide phi(d) for d = " + std::to_string(d));
    }
    row.n_d = row.phi_d / (2 * row.c_d);
    out.rows.push_back(row);
  }
  return out;
}

CycleMultiset to_multiset(const CycleCensus& c) {
  CycleMultiset out;
  for (const auto& r : c.rows) out[r.c_d] += r.n_d;
  return out;
}

CycleMultiset brute_census(std::uint64_t p) {
  const IvSet iv = build_iv_set(p);
  CycleMultiset out;
  std::unordered_set<std::uint64_t> on_counted_cycle;
  for (FieldElement seed : iv.elements) {
    if (on_counted_cycle.contains(seed.value)) continue;
    const OrbitReport r = Generator({MapKind::logistic, p, 4, seed.value}).orbit();
    if (on_counted_cycle.contains(r.cycle.front().value)) continue;
    for (FieldElement s : r.cycle) on_counted_cycle.insert(s.value);
    ++out[r.period()];
  }
  return out;
}

std::string_view to_string(MaximalBranch b) noexcept {
  switch (b) {
    case MaximalBranch::full_order: return "full_order";
    case MaximalBranch::half_order_odd: return "half_order_odd";
    case MaximalBranch::fails: return "fails";
  }
  return "?";
}

MaximalityReport is_maximal_prime(std::uint64_t p) {
  const PrimeField field(p);
  MaximalityReport out;
  out.p = p;
  const std::uint64_t m = half_order_modulus(p, iv_class_for(p));
  if (!is_prime(m)) return out;
  out.p1 = m;
  const std::uint64_t ord = mult_order_mod(2, m);
  const std::uint64_t half = (m - 1) / 2;
  if (ord == m - 1) {
    out.branch = MaximalBranch::full_order;
  } else if (ord == half && half % 2 == 1) {
    out.branch = MaximalBranch::half_order_odd;
  } else {
    return out;
  }
  out.is_maximal = true;
  out.max_period = half;
  return out;
}

std::vector<std::uint64_t> two_safe_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 11) return out;
  const std::vector<bool> prime = prime_sieve(limit);
  for (std::uint64_t p = 11; p <= limit; p += 4) {  // p = 4 p2 + 3
    const std::uint64_t p1 = (p - 1) / 2;
    if (prime[p] && prime[p1] && prime[(p1 - 1) / 2]) out.push_back(p);
  }
  return out;
}

std::vector<std::uint64_t> analogous_two_safe(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 13) return out;
  const std::vector<bool> prime = prime_sieve(limit);
  for (std::uint64_t p = 5; p <= limit; p += 4) {
    const std::uint64_t p1 = (p + 1) / 2;
    if (prime[p] && prime[p1] && prime[(p1 - 1) / 2]) out.push_back(p);
  }
  return out;
}

}  // namespace logmap
