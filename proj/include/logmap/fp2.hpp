#pragma once

#include <compare>
#include <cstdint>

#include "logmap/numtheory.hpp"

namespace logmap {

/// c0 + c1 * alpha, alpha^2 = ns for the field's fixed non-residue ns.
/// Ordered lexicographically by (c0, c1).
struct Fp2Element {
  FieldElement c0;
  FieldElement c1;

  friend constexpr auto operator<=>(const Fp2Element&, const Fp2Element&) = default;
};

/// F_{p^2} = F_p[X] / (X^2 - ns) with ns the smallest quadratic non-residue,
/// so that element encodings are reproducible.
class Fp2Field {
 public:
  explicit Fp2Field(std::uint64_t p);
  explicit Fp2Field(const PrimeField& base);

  const PrimeField& base() const noexcept { return fp_; }
  FieldElement non_residue() const noexcept { return ns_; }

  Fp2Element embed(FieldElement a) const noexcept { return {a, fp_.zero()}; }
  Fp2Element make(std::int64_t c0, std::int64_t c1) const noexcept {
    return {fp_.element(c0), fp_.element(c1)};
  }
  Fp2Element zero() const noexcept { return {}; }
  Fp2Element one() const noexcept { return {fp_.one(), fp_.zero()}; }

  bool is_base(const Fp2Element& x) const noexcept { return x.c1.value == 0; }

  Fp2Element add(const Fp2Element& x, const Fp2Element& y) const noexcept;
  Fp2Element sub(const Fp2Element& x, const Fp2Element& y) const noexcept;
  Fp2Element neg(const Fp2Element& x) const noexcept;
  Fp2Element mul(const Fp2Element& x, const Fp2Element& y) const noexcept;
  Fp2Element sqr(const Fp2Element& x) const noexcept { return mul(x, x); }
  Fp2Element scale(const Fp2Element& x, FieldElement k) const noexcept;
  Fp2Element pow(Fp2Element x, std::uint64_t e) const noexcept;
  /// Throws DomainError for zero.
  Fp2Element inv(const Fp2Element& x) const;

  /// x^p; alpha^p = -alpha because ns is a non-residue.
  Fp2Element frobenius(const Fp2Element& x) const noexcept { return conjugate(x); }
  Fp2Element conjugate(const Fp2Element& x) const noexcept { return {x.c0, fp_.neg(x.c1)}; }

  /// N(x) = x * x^p = c0^2 - ns * c1^2.
  FieldElement norm(const Fp2Element& x) const noexcept;

  /// Order of nonzero x; group_order must be a multiple of it (e.g. a
  /// factorization of p - 1 for F_p elements or p + 1 for norm-one ones).
  std::uint64_t mult_order(const Fp2Element& x, const Factorization& group_order) const;

 private:
  PrimeField fp_;
  FieldElement ns_;
};

}  // namespace logmap
