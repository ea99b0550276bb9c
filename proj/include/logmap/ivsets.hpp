#pragma once

// Initial-value sets of the logistic map LM(a) = 4a(a + 1) and their
// four-to-one parametrization by the hyperbola x^2 - y^2 = 1:
//
//   phi(t) = ((t - 1/t) / 2)^2
//
// For p = 3 (mod 4) the parameter t runs over F_p \ {0, +-1} and the image is
// D0 & (D0 - 1) = {a : (a/p) = (a+1/p) = +1}. For p = 1 (mod 4) t runs over
// the norm-one elements of F_{p^2} other than +-1 and the image is
// D1 & (D0 - 1) = {a : (a/p) = -1, (a+1/p) = +1}. In both cases
// LM(phi(t)) = phi(t^2), which is what ties cycle lengths to orders of 2.

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "logmap/fp2.hpp"
#include "logmap/numtheory.hpp"

namespace logmap {

enum class IvClass {
  d0_d0m1,  // p = 3 mod 4
  d1_d0m1,  // p = 1 mod 4
};

std::string_view to_string(IvClass c) noexcept;

/// Throws DomainError for p <= 3.
IvClass iv_class_for(std::uint64_t p);

struct IvSet {
  std::uint64_t p = 0;
  IvClass cls = IvClass::d0_d0m1;
  std::vector<FieldElement> elements;  // ascending

  bool contains(FieldElement a) const noexcept;
  std::size_t size() const noexcept { return elements.size(); }
};

/// Exhaustive Legendre-symbol scan of F_p. Throws InvalidField for non-primes
/// and DomainError for p <= 3.
IvSet build_iv_set(std::uint64_t p);

/// Parameter on the hyperbola, always stored in F_{p^2}; split-case
/// parameters have c1 = 0.
struct ParamPoint {
  Fp2Element t;

  friend constexpr auto operator<=>(const ParamPoint&, const ParamPoint&) = default;
};

struct Fiber {
  FieldElement image;
  /// Split case: ascending. Torus case: (t, -t, 1/t, -1/t) from the
  /// canonical (lexicographically least) t.
  std::array<ParamPoint, 4> points;
};

struct SignSplit {
  FieldElement c1, c2;  // the two LM-preimages, c1 < c2
  int legendre_c1 = 0;
  int legendre_c2 = 0;
};

/// The parametrization for one prime. Immutable.
class Hyperbola {
 public:
  explicit Hyperbola(std::uint64_t p);

  const PrimeField& field() const noexcept { return fp2_.base(); }
  const Fp2Field& extension() const noexcept { return fp2_; }
  IvClass iv_class() const noexcept { return cls_; }

  bool is_member(FieldElement a) const noexcept;
  /// Valid parameter for this prime's class.
  bool is_parameter(const ParamPoint& t) const noexcept;

  /// Throws DegenerateParameter when t is not a valid parameter.
  FieldElement phi(const ParamPoint& t) const;

  /// Canonical preimage: least of the four points in natural order on F_p,
  /// lexicographic (c0, c1) on F_{p^2}. Throws DomainError for non-members.
  ParamPoint phi_preimage(FieldElement a) const;

  Fiber fiber(FieldElement a) const;
  std::vector<Fiber> fibers() const;

  /// Every parameter, by direct enumeration (independent of the IV set).
  std::vector<ParamPoint> parameter_space() const;

  /// (LM(phi(t)), phi(t^2)). Throws DegenerateParameter if t or t^2 is +-1.
  std::pair<FieldElement, FieldElement> conjugation_check(const ParamPoint& t) const;

  /// Legendre symbols of the two LM-preimages of a member a.
  SignSplit sign_split(FieldElement a) const;

  ParamPoint split_param(std::int64_t t) const noexcept { return {fp2_.make(t, 0)}; }
  ParamPoint torus_param(std::int64_t c0, std::int64_t c1) const noexcept { return {fp2_.make(c0, c1)}; }

 private:
  Fp2Field fp2_;
  IvClass cls_;
};

IvSet build_iv_set(const PrimeField& field);

}  // namespace logmap
