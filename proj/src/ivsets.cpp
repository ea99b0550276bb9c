#include "logmap/ivsets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "logmap/generator.hpp"

namespace logmap {

std::string_view to_string(IvClass c) noexcept {
  return c == IvClass::d0_d0m1 ? "D0_D0m1" : "D1_D0m1";
}

IvClass iv_class_for(std::uint64_t p) {
  if (p <= 3) throw DomainError("initial-value sets need p > 3, got " + std::to_string(p));
  return p % 4 == 3 ? IvClass::d0_d0m1 : IvClass::d1_d0m1;
}

bool IvSet::contains(FieldElement a) const noexcept {
  return std::binary_search(elements.begin(), elements.end(), a);
}

IvSet build_iv_set(const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  IvSet out{p, iv_class_for(p), {}};
  const int want = out.cls == IvClass::d0_d0m1 ? 1 : -1;
  // (a+1/p) of step a is (a/p) of step a+1; carry it forward.
  int current = field.legendre(FieldElement{1});
  for (std::uint64_t a = 1; a + 1 < p; ++a) {
    const int next = field.legendre(FieldElement{a + 1});
    if (current == want && next == 1) out.elements.push_back(FieldElement{a});
    current = next;
  }
  return out;
}

IvSet build_iv_set(std::uint64_t p) { return build_iv_set(PrimeField(p)); }

Hyperbola::Hyperbola(std::uint64_t p) : fp2_(p), cls_(iv_class_for(p)) {}

bool Hyperbola::is_member(FieldElement a) const noexcept {
  const PrimeField& f = field();
  const int want = cls_ == IvClass::d0_d0m1 ? 1 : -1;
  return f.legendre(a) == want && f.legendre(f.add(a, f.one())) == 1;
}

bool Hyperbola::is_parameter(const ParamPoint& t) const noexcept {
  const std::uint64_t p = field().modulus();
  if (t.t.c0.value >= p || t.t.c1.value >= p) return false;
  if (cls_ == IvClass::d0_d0m1) {
    const std::uint64_t v = t.t.c0.value;
    return t.t.c1.value == 0 && v != 0 && v != 1 && v != p - 1;
  }
  // Norm one with c1 = 0 forces c0 = +-1, so c1 != 0 excludes exactly +-1.
  return t.t.c1.value != 0 && fp2_.norm(t.t) == field().one();
}

FieldElement Hyperbola::phi(const ParamPoint& t) const {
  if (!is_parameter(t)) throw DegenerateParameter("phi: parameter outside the hyperbola parameter space");
  const PrimeField& f = field();
  const Fp2Element d = fp2_.sub(t.t, fp2_.inv(t.t));
  const Fp2Element y = fp2_.scale(d, f.half(f.one()));
  const Fp2Element a = fp2_.sqr(y);
  if (!fp2_.is_base(a)) throw std::logic_error("phi: image left the base field");
  return a.c0;
}

ParamPoint Hyperbola::phi_preimage(FieldElement a) const {
  if (!is_member(a)) {
    throw DomainError("phi_preimage: " + std::to_string(a.value) + " is not in the initial-value set");
  }
  const PrimeField& f = field();
  const FieldElement c = *f.sqrt(f.add(a, f.one()));
  if (cls_ == IvClass::d0_d0m1) {
    const FieldElement b = *f.sqrt(a);
    const std::array<FieldElement, 4> candidates = {f.add(c, b), f.sub(c, b), f.sub(b, c), f.neg(f.add(c, b))};
    return {fp2_.embed(*std::min_element(candidates.begin(), candidates.end()))};
  }
  // a is a non-residue, so a = (c1 alpha)^2 with c1^2 = a / ns.
  const FieldElement c1 = *f.sqrt(f.div(a, fp2_.non_residue()));
  return {{std::min(c, f.neg(c)), std::min(c1, f.neg(c1))}};
}

Fiber Hyperbola::fiber(FieldElement a) const {
  const ParamPoint t = phi_preimage(a);
  const Fp2Element inv = fp2_.inv(t.t);
  Fiber out{a, {t, ParamPoint{fp2_.neg(t.t)}, ParamPoint{inv}, ParamPoint{fp2_.neg(inv)}}};
  if (cls_ == IvClass::d0_d0m1) std::sort(out.points.begin(), out.points.end());
  return out;
}

std::vector<Fiber> Hyperbola::fibers() const {
  const IvSet iv = build_iv_set(field());
  std::vector<Fiber> out;
  out.reserve(iv.size());
  for (FieldElement a : iv.elements) out.push_back(fiber(a));
  return out;
}

std::vector<ParamPoint> Hyperbola::parameter_space() const {
  const PrimeField& f = field();
  const std::uint64_t p = f.modulus();
  std::vector<ParamPoint> out;
  if (cls_ == IvClass::d0_d0m1) {
    out.reserve(p - 3);
    for (std::uint64_t t = 2; t + 1 < p; ++t) out.push_back({fp2_.embed(FieldElement{t})});
    return out;
  }
  out.reserve(p - 1);
  for (std::uint64_t c1 = 1; c1 < p; ++c1) {
    // c0^2 = 1 + ns c1^2
    const FieldElement rhs = f.add(f.one(), f.mul(fp2_.non_residue(), f.sqr(FieldElement{c1})));
    const auto c0 = f.sqrt(rhs);
    if (!c0) continue;
    out.push_back({{*c0, FieldElement{c1}}});
    if (c0->value != 0) out.push_back({{f.neg(*c0), FieldElement{c1}}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<FieldElement, FieldElement> Hyperbola::conjugation_check(const ParamPoint& t) const {
  if (!is_parameter(t)) throw DegenerateParameter("conjugation_check: invalid parameter");
  const Fp2Element t2 = fp2_.sqr(t.t);
  if (t2 == fp2_.one() || t2 == fp2_.neg(fp2_.one())) {
    throw DegenerateParameter("conjugation_check: t^2 is +-1, phi(t^2) undefined");
  }
  return {logistic_map(field(), phi(t)), phi(ParamPoint{t2})};
}

SignSplit Hyperbola::sign_split(FieldElement a) const {
  if (!is_member(a)) {
    throw DomainError("sign_split: " + std::to_string(a.value) + " is not in the initial-value set");
  }
  const PrimeField& f = field();
  // 4x^2 + 4x - a = 0  =>  x = (-1 +- sqrt(a + 1)) / 2
  const FieldElement c = *f.sqrt(f.add(a, f.one()));
  FieldElement x1 = f.half(f.sub(c, f.one()));
  FieldElement x2 = f.half(f.sub(f.neg(c), f.one()));
  if (x2 < x1) std::swap(x1, x2);
  return {x1, x2, f.legendre(x1), f.legendre(x2)};
}

}  // namespace logmap
