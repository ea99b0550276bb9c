#include "logmap/fp2.hpp"

namespace logmap {

Fp2Field::Fp2Field(std::uint64_t p) : Fp2Field(PrimeField(p)) {}

Fp2Field::Fp2Field(const PrimeField& base) : fp_(base), ns_(base.smallest_non_residue()) {}

Fp2Element Fp2Field::add(const Fp2Element& x, const Fp2Element& y) const noexcept {
  return {fp_.add(x.c0, y.c0), fp_.add(x.c1, y.c1)};
}

Fp2Element Fp2Field::sub(const Fp2Element& x, const Fp2Element& y) const noexcept {
  return {fp_.sub(x.c0, y.c0), fp_.sub(x.c1, y.c1)};
}

Fp2Element Fp2Field::neg(const Fp2Element& x) const noexcept { return {fp_.neg(x.c0), fp_.neg(x.c1)}; }

Fp2Element Fp2Field::mul(const Fp2Element& x, const Fp2Element& y) const noexcept {
  // (a + b alpha)(c + d alpha) = (ac + ns bd) + (ad + bc) alpha
  const FieldElement ac = fp_.mul(x.c0, y.c0);
  const FieldElement bd = fp_.mul(x.c1, y.c1);
  const FieldElement ad = fp_.mul(x.c0, y.c1);
  const FieldElement bc = fp_.mul(x.c1, y.c0);
  return {fp_.add(ac, fp_.mul(ns_, bd)), fp_.add(ad, bc)};
}

Fp2Element Fp2Field::scale(const Fp2Element& x, FieldElement k) const noexcept {
  return {fp_.mul(x.c0, k), fp_.mul(x.c1, k)};
}

Fp2Element Fp2Field::pow(Fp2Element x, std::uint64_t e) const noexcept {
  Fp2Element result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = sqr(x);
    e >>= 1;
  }
  return result;
}

Fp2Element Fp2Field::inv(const Fp2Element& x) const {
  const FieldElement n = norm(x);
  if (n.value == 0) throw DomainError("inverse of zero in F_p^2");
  return scale(conjugate(x), fp_.inv(n));
}

FieldElement Fp2Field::norm(const Fp2Element& x) const noexcept {
  return fp_.sub(fp_.sqr(x.c0), fp_.mul(ns_, fp_.sqr(x.c1)));
}

std::uint64_t Fp2Field::mult_order(const Fp2Element& x, const Factorization& group_order) const {
  if (x == zero()) throw DomainError("mult_order: zero is not in the multiplicative group");
  return order_from_group_order(group_order, [&](std::uint64_t k) { return pow(x, k) == one(); });
}

}  // namespace logmap
