#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "logmap/numtheory.hpp"

namespace logmap {

enum class MapKind {
  dickson_deg2,      // s -> s^2 - 2
  logistic,          // s -> 4 s (s + 1)
  logistic_general,  // s -> mu s (s + 1)
};

std::string_view to_string(MapKind k) noexcept;
MapKind map_kind_from_string(std::string_view s);

struct GeneratorSpec {
  MapKind kind = MapKind::logistic;
  std::uint64_t p = 0;
  std::uint64_t mu = 4;  // only read for logistic_general
  std::uint64_t seed = 0;
};

struct OrbitReport {
  std::vector<FieldElement> tail;
  std::vector<FieldElement> cycle;

  std::size_t tail_length() const noexcept { return tail.size(); }
  std::size_t period() const noexcept { return cycle.size(); }
};

/// Dickson polynomial D_e(x, a) over F_p via the Lucas ladder
/// (D_{2k} = D_k^2 - 2a^k, D_{2k+1} = D_k D_{k+1} - a^k x).
FieldElement dickson_eval(const PrimeField& field, std::uint64_t e, FieldElement x, FieldElement a);

/// One iterated map over F_p. Validates its parameters on construction: p an odd
/// prime, p > 3 for the logistic kinds, mu != 0 mod p.
class Generator {
 public:
  explicit Generator(const GeneratorSpec& spec);

  const PrimeField& field() const noexcept { return field_; }
  MapKind kind() const noexcept { return kind_; }
  FieldElement mu() const noexcept { return mu_; }
  FieldElement seed() const noexcept { return seed_; }

  FieldElement step(FieldElement s) const noexcept;

  /// First n terms s_0 .. s_{n-1} from the seed.
  std::vector<FieldElement> sequence(std::size_t n) const;

  /// Exact tail and cycle by first-repeat detection. Throws BudgetError if no
  /// repeat appears within max_steps applications of the map.
  OrbitReport orbit(std::size_t max_steps) const;
  OrbitReport orbit() const { return orbit(field_.modulus()); }

 private:
  PrimeField field_;
  MapKind kind_;
  FieldElement mu_;
  FieldElement seed_;
};

FieldElement step(const GeneratorSpec& spec, FieldElement s);
OrbitReport orbit(const GeneratorSpec& spec, std::size_t max_steps);

/// LM(a) = 4 a (a + 1).
FieldElement logistic_map(const PrimeField& field, FieldElement a) noexcept;

/// s -> 4 s + 2 carries a logistic orbit onto a degree-2 Dickson orbit.
FieldElement conjugate_seed(const PrimeField& field, FieldElement s);

enum class SeedClass {
  iv_set,  // seed must lie in the initial-value set; predicted from a hyperbola parameter
  any,     // any seed; predicted from a root of X^2 - (4s+2) X + 1
};

enum class OrbitFlag {
  regular,
  fixed_two,        // Dickson state 2 (logistic seed 0): fixed point
  minus_two,        // Dickson state -2 (logistic seed -1): one step to 2
  collapses_to_two, // odd part of ord t is 1: the orbit ends in the fixed point 2
};

std::string_view to_string(OrbitFlag f) noexcept;

struct OrbitPrediction {
  std::size_t tail_length = 0;
  std::size_t period = 0;
  std::uint64_t order = 0;        // multiplicative order of the root / parameter t
  unsigned two_exponent = 0;      // e in order = 2^e * m
  std::uint64_t odd_part = 0;     // m
  bool in_extension = false;      // t lies in F_{p^2} \ F_p
  OrbitFlag flag = OrbitFlag::regular;
};

/// Logistic (mu = 4) tail length and period from orders of 2. Throws
/// InvalidField for bad p, DomainError for p <= 3 or (iv_set) a seed outside
/// the initial-value set.
OrbitPrediction predict_orbit(std::uint64_t p, std::uint64_t seed, SeedClass cls);

}  // namespace logmap
