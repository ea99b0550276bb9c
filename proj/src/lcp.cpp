#include "logmap/lcp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logmap/generator.hpp"
#include "logmap/ivsets.hpp"

namespace logmap {

namespace {

// Massey's synthesis. C is the current connection polynomial (deg <= L),
// B the one before the last length change, b its discrepancy and `shift`
// the steps since then.
std::vector<std::size_t> bm_generic(std::span<const FieldElement> s, std::uint64_t p, std::size_t n) {
  std::vector<std::size_t> profile(n);
  std::vector<std::uint64_t> c(n + 1, 0), b_poly{1}, saved;
  c[0] = 1;
  std::size_t len = 0, shift = 1;
  std::uint64_t b = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t d = s[k].value;
    for (std::size_t i = 1; i <= len; ++i) {
      d += mul_mod(c[i], s[k - i].value, p);
      if (d >= p) d -= p;
    }
    if (d == 0) {
      ++shift;
    } else {
      const std::uint64_t coef = p - mul_mod(d, pow_mod(b, p - 2, p), p);
      const bool grow = 2 * len <= k;
      if (grow) saved.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(len + 1));
      for (std::size_t i = 0; i < b_poly.size(); ++i) {
        std::uint64_t v = c[i + shift] + mul_mod(coef, b_poly[i], p);
        c[i + shift] = v >= p ? v - p : v;
      }
      if (grow) {
        b_poly.swap(saved);
        len = k + 1 - len;
        b = d;
        shift = 1;
      } else {
        ++shift;
      }
    }
    profile[k] = len;
  }
  return profile;
}

// p < 2^16: every product fits in 32 bits, so the discrepancy can be summed
// in 64 bits and reduced once, and update values stay below 2^32.
std::vector<std::size_t> bm_small(std::span<const FieldElement> s, std::uint32_t p, std::size_t n) {
  std::vector<std::size_t> profile(n);
  // reversed[n - 1 - j] = s_j, so s_{k-i} for i = 0..len is contiguous.
  std::vector<std::uint32_t> reversed(n);
  for (std::size_t j = 0; j < n; ++j) reversed[n - 1 - j] = static_cast<std::uint32_t>(s[j].value);

  const std::uint64_t magic = ~std::uint64_t{0} / p + 1;
  auto reduce = [magic, p](std::uint32_t x) {
    const std::uint64_t low = magic * x;
    return static_cast<std::uint32_t>((static_cast<u128>(low) * p) >> 64);
  };

  std::vector<std::uint32_t> c(n + 1, 0), b_poly{1}, saved;
  c[0] = 1;
  std::size_t len = 0, shift = 1;
  std::uint32_t b = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint32_t* window = reversed.data() + (n - 1 - k);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i <= len; ++i) acc += static_cast<std::uint64_t>(c[i]) * window[i];
    const auto d = static_cast<std::uint32_t>(acc % p);
    if (d == 0) {
      ++shift;
    } else {
      const auto inv_b = static_cast<std::uint32_t>(pow_mod(b, p - 2, p));
      const std::uint32_t coef = p - static_cast<std::uint32_t>(static_cast<std::uint64_t>(d) * inv_b % p);
      const bool grow = 2 * len <= k;
      if (grow) saved.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(len + 1));
      std::uint32_t* target = c.data() + shift;
      const std::size_t count = b_poly.size();
      for (std::size_t i = 0; i < count; ++i) target[i] = reduce(target[i] + coef * b_poly[i]);
      if (grow) {
        b_poly.swap(saved);
        len = k + 1 - len;
        b = d;
        shift = 1;
      } else {
        ++shift;
      }
    }
    profile[k] = len;
  }
  return profile;
}

using Poly = std::vector<std::uint64_t>;  // low degree first, no trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a <- a mod b, b nonzero.
void poly_mod(Poly& a, const Poly& b, const PrimeField& f) {
  const std::uint64_t p = f.modulus();
  const std::uint64_t lead_inv = f.inv(FieldElement{b.back()}).value;
  while (a.size() >= b.size()) {
    const std::uint64_t q = mul_mod(a.back(), lead_inv, p);
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = mul_mod(q, b[i], p);
      a[off + i] = a[off + i] >= sub ? a[off + i] - sub : a[off + i] + p - sub;
    }
    trim(a);
  }
}

}  // namespace

LcpProfile berlekamp_massey_profile(std::span<const FieldElement> s, const PrimeField& field, std::size_t n_max) {
  if (s.size() < n_max) {
    throw DomainError("berlekamp_massey_profile: sequence has " + std::to_string(s.size()) +
                      " terms, need " + std::to_string(n_max));
  }
  const std::uint64_t p = field.modulus();
  LcpProfile out;
  out.p = p;
  out.profile = p < (1u << 16) ? bm_small(s, static_cast<std::uint32_t>(p), n_max) : bm_generic(s, p, n_max);
  out.linear_complexity = out.profile.empty() ? 0 : out.profile.back();
  return out;
}

std::size_t lc_via_gcd(std::span<const FieldElement> cycle, const PrimeField& field) {
  if (cycle.empty()) throw DomainError("lc_via_gcd: empty cycle");
  const std::size_t period = cycle.size();
  Poly a(period + 1, 0);
  a[0] = field.modulus() - 1;
  a[period] = 1;
  Poly b;
  b.reserve(period);
  for (FieldElement v : cycle) b.push_back(v.value);
  trim(b);
  if (b.empty()) return 0;
  while (!b.empty()) {
    poly_mod(a, b, field);
    a.swap(b);
  }
  return period - (a.size() - 1);
}

LcpProfile logistic_lcp(std::uint64_t p, std::uint64_t seed, std::size_t n_max) {
  const Generator gen({MapKind::logistic, p, 4, seed});
  const OrbitReport orbit = gen.orbit();
  const std::size_t period = orbit.period();
  const std::size_t terms = std::max(n_max, 2 * period);
  std::vector<FieldElement> seq(terms);
  for (std::size_t i = 0; i < terms; ++i) seq[i] = orbit.cycle[i % period];
  LcpProfile full = berlekamp_massey_profile(seq, gen.field(), terms);
  full.period = period;
  full.linear_complexity = full.profile[2 * period - 1];
  full.profile.resize(n_max);
  return full;
}

double bound_lcp1(std::size_t n, std::size_t period, std::uint64_t m) {
  const double nn = static_cast<double>(n);
  const double tt = static_cast<double>(period);
  const double md = static_cast<double>(m);
  return std::min(nn * nn, 4.0 * tt * tt) / (16.0 * md) - std::sqrt(md);
}

double bound_lcp2(std::size_t n, std::size_t linear_complexity) {
  return std::min(std::sqrt(2.0 * static_cast<double>(n)) - 3.0, static_cast<double>(linear_complexity));
}

double bound_dickson(std::size_t n, std::size_t period, std::uint64_t p) {
  const double nn = static_cast<double>(n);
  const double tt = static_cast<double>(period);
  const double q = static_cast<double>(p) + 1.0;
  return std::min(nn * nn, 4.0 * tt * tt) / (16.0 * q) - std::sqrt(q);
}

std::string_view to_string(BoundKind k) noexcept {
  switch (k) {
    case BoundKind::lcp1: return "lcp1";
    case BoundKind::lcp2: return "lcp2";
    case BoundKind::dickson: return "dickson";
  }
  return "?";
}

BoundReport verify_bounds(std::uint64_t p, std::uint64_t seed, std::size_t n_max) {
  const Hyperbola h(p);
  const FieldElement s = h.field().from_u64(seed);
  if (!h.is_member(s)) {
    throw DomainError("verify_bounds: seed " + std::to_string(s.value) + " is not in the initial-value set");
  }
  BoundReport out;
  out.p = p;
  out.seed = s.value;
  out.m = h.iv_class() == IvClass::d0_d0m1 ? (p - 1) / 2 : (p + 1) / 2;
  out.lcp = logistic_lcp(p, s.value, n_max);
  const std::size_t period = out.lcp.period;
  const std::size_t lc = out.lcp.linear_complexity;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t l = out.lcp.at(n);
    const double b1 = bound_lcp1(n, period, out.m);
    const double b2 = bound_lcp2(n, lc);
    const double b5 = bound_dickson(n, period, p);
    out.lcp1.values.push_back(b1);
    out.lcp2.values.push_back(b2);
    out.dickson.values.push_back(b5);
    const double lv = static_cast<double>(l);
    if (lv < b1 - kBoundSlack) out.violations.push_back({BoundKind::lcp1, n, l, b1});
    if (lv < b2 - kBoundSlack) out.violations.push_back({BoundKind::lcp2, n, l, b2});
    if (lv < b5 - kBoundSlack) out.violations.push_back({BoundKind::dickson, n, l, b5});
    if (!out.crossover && b1 > b2) out.crossover = n;
  }
  return out;
}

}  // namespace logmap
