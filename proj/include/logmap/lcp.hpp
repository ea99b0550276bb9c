#pragma once

// Linear complexity profiles of F_p-valued sequences and the closed-form
// lower bounds they are checked against:
//
//   lcp1:    min(N^2, 4T^2) / (16 m)       - sqrt(m)
//   lcp2:    min(sqrt(2N) - 3, L(S))
//   dickson: min(N^2, 4T^2) / (16 (p + 1)) - sqrt(p + 1)
//
// with T the period, m = (p -+ 1) / 2 and L(S) the linear complexity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "logmap/numtheory.hpp"

namespace logmap {

/// Slack used when comparing an integer L(S, N) with a real-valued bound.
inline constexpr double kBoundSlack = 1e-9;

struct LcpProfile {
  std::uint64_t p = 0;
  std::vector<std::size_t> profile;    // profile[N - 1] = L(S, N)
  std::size_t linear_complexity = 0;   // L(S) = L(S, 2T) when period is known, else L(S, N_max)
  std::size_t period = 0;              // 0 when the input was not known to be periodic

  std::size_t n_max() const noexcept { return profile.size(); }
  std::size_t at(std::size_t n) const { return profile.at(n - 1); }
};

/// L(S, N) for N = 1 .. n_max in one Berlekamp-Massey pass. Throws
/// DomainError if the sequence is shorter than n_max.
LcpProfile berlekamp_massey_profile(std::span<const FieldElement> s, const PrimeField& field, std::size_t n_max);

/// T - deg gcd(X^T - 1, s_0 + s_1 X + ... + s_{T-1} X^{T-1}); 0 for an all-zero cycle.
std::size_t lc_via_gcd(std::span<const FieldElement> cycle, const PrimeField& field);

/// Profile of the logistic sequence from `seed`, taken over its purely
/// periodic part. Computes at least 2T terms so linear_complexity is L(S).
LcpProfile logistic_lcp(std::uint64_t p, std::uint64_t seed, std::size_t n_max);

double bound_lcp1(std::size_t n, std::size_t period, std::uint64_t m);
double bound_lcp2(std::size_t n, std::size_t linear_complexity);
double bound_dickson(std::size_t n, std::size_t period, std::uint64_t p);

/// Plots show zero in place of negative bound values.
inline double clamp_for_display(double v) { return v < 0.0 ? 0.0 : v; }

enum class BoundKind { lcp1, lcp2, dickson };
std::string_view to_string(BoundKind k) noexcept;

struct BoundCurve {
  BoundKind kind;
  std::vector<double> values;  // values[N - 1], unclamped
};

struct BoundViolation {
  BoundKind kind;
  std::size_t n;
  std::size_t linear_complexity;
  double bound;
};

struct BoundReport {
  std::uint64_t p = 0;
  std::uint64_t seed = 0;
  std::uint64_t m = 0;
  LcpProfile lcp;
  BoundCurve lcp1{BoundKind::lcp1, {}};
  BoundCurve lcp2{BoundKind::lcp2, {}};
  BoundCurve dickson{BoundKind::dickson, {}};
  std::vector<BoundViolation> violations;
  /// Least N with lcp1(N) > lcp2(N), if any N <= n_max.
  std::optional<std::size_t> crossover;

  bool holds() const noexcept { return violations.empty(); }
};

/// Checks L(S, N) against all three bounds for N = 1 .. n_max. The seed must
/// be in the initial-value set (DomainError otherwise); violations are
/// collected, never thrown.
BoundReport verify_bounds(std::uint64_t p, std::uint64_t seed, std::size_t n_max);

}  // namespace logmap
