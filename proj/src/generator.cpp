#include "logmap/generator.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "logmap/fp2.hpp"
#include "logmap/ivsets.hpp"

namespace logmap {

std::string_view to_string(MapKind k) noexcept {
  switch (k) {
    case MapKind::dickson_deg2: return "dickson_deg2";
    case MapKind::logistic: return "logistic";
    case MapKind::logistic_general: return "logistic_general";
  }
  return "?";
}

MapKind map_kind_from_string(std::string_view s) {
  if (s == "dickson_deg2" || s == "dickson") return MapKind::dickson_deg2;
  if (s == "logistic") return MapKind::logistic;
  if (s == "logistic_general") return MapKind::logistic_general;
  throw DomainError("unknown map kind '" + std::string(s) + "'");
}

std::string_view to_string(OrbitFlag f) noexcept {
  switch (f) {
    case OrbitFlag::regular: return "regular";
    case OrbitFlag::fixed_two: return "fixed_two";
    case OrbitFlag::minus_two: return "minus_two";
    case OrbitFlag::collapses_to_two: return "collapses_to_two";
  }
  return "?";
}

FieldElement dickson_eval(const PrimeField& f, std::uint64_t e, FieldElement x, FieldElement a) {
  const FieldElement two = f.element(2);
  FieldElement lo = two;  // D_k
  FieldElement hi = x;    // D_{k+1}
  FieldElement ak = f.one();
  for (int bit = std::bit_width(e) - 1; bit >= 0; --bit) {
    const FieldElement cross = f.sub(f.mul(lo, hi), f.mul(ak, x));
    if ((e >> bit) & 1) {
      const FieldElement ak1 = f.mul(ak, a);
      lo = cross;
      hi = f.sub(f.sqr(hi), f.mul(two, ak1));
      ak = f.mul(ak, ak1);
    } else {
      lo = f.sub(f.sqr(lo), f.mul(two, ak));
      hi = cross;
      ak = f.sqr(ak);
    }
  }
  return lo;
}

FieldElement logistic_map(const PrimeField& f, FieldElement a) noexcept {
  return f.mul(f.element(4), f.mul(a, f.add(a, f.one())));
}

FieldElement conjugate_seed(const PrimeField& f, FieldElement s) {
  if (f.modulus() <= 3) throw DomainError("conjugate_seed needs p > 3");
  return f.add(f.mul(f.element(4), s), f.element(2));
}

Generator::Generator(const GeneratorSpec& spec)
    : field_(spec.p), kind_(spec.kind), mu_(field_.from_u64(spec.mu)), seed_(field_.from_u64(spec.seed)) {
  if (kind_ != MapKind::dickson_deg2 && spec.p <= 3) {
    throw DomainError("logistic generators need p > 3, got " + std::to_string(spec.p));
  }
  if (kind_ == MapKind::logistic) mu_ = field_.element(4);
  if (kind_ == MapKind::logistic_general && mu_.value == 0) throw DomainError("control parameter mu must be nonzero mod p");
}

FieldElement Generator::step(FieldElement s) const noexcept {
  const PrimeField& f = field_;
  switch (kind_) {
    case MapKind::dickson_deg2: return f.sub(f.sqr(s), f.element(2));
    case MapKind::logistic:
    case MapKind::logistic_general: return f.mul(mu_, f.mul(s, f.add(s, f.one())));
  }
  return s;
}

std::vector<FieldElement> Generator::sequence(std::size_t n) const {
  std::vector<FieldElement> out;
  out.reserve(n);
  FieldElement s = seed_;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(s);
    s = step(s);
  }
  return out;
}

OrbitReport Generator::orbit(std::size_t max_steps) const {
  std::unordered_map<std::uint64_t, std::size_t> first_seen;
  std::vector<FieldElement> visited;
  FieldElement s = seed_;
  for (std::size_t i = 0;; ++i) {
    const auto [it, inserted] = first_seen.try_emplace(s.value, i);
    if (!inserted) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      OrbitReport report;
      report.tail.assign(visited.begin(), visited.begin() + start);
      report.cycle.assign(visited.begin() + start, visited.end());
      return report;
    }
    if (i == max_steps) break;
    visited.push_back(s);
    s = step(s);
  }
  throw BudgetError("orbit: no repeat within " + std::to_string(max_steps) + " steps");
}

FieldElement step(const GeneratorSpec& spec, FieldElement s) { return Generator(spec).step(s); }

OrbitReport orbit(const GeneratorSpec& spec, std::size_t max_steps) { return Generator(spec).orbit(max_steps); }

namespace {

OrbitPrediction prediction_from_order(std::uint64_t order, bool in_extension, bool dickson_side) {
  OrbitPrediction out;
  out.order = order;
  out.in_extension = in_extension;
  const TwoAdic split = split_two_adic(order);
  out.two_exponent = split.exponent;
  out.odd_part = split.odd;
  out.period = ord_prime_or_one(split.odd);
  if (dickson_side) {
    out.tail_length = split.exponent;
  } else {
    out.tail_length = split.exponent == 0 ? 0 : split.exponent - 1;
  }
  if (split.odd == 1) out.flag = OrbitFlag::collapses_to_two;
  return out;
}

}  // namespace

OrbitPrediction predict_orbit(std::uint64_t p, std::uint64_t seed, SeedClass cls) {
  if (cls == SeedClass::iv_set) {
    const Hyperbola h(p);
    const FieldElement s = h.field().from_u64(seed);
    if (!h.is_member(s)) {
      throw DomainError("predict_orbit: seed " + std::to_string(s.value) + " is not in the initial-value set");
    }
    const ParamPoint t = h.phi_preimage(s);
    const bool torus = h.iv_class() == IvClass::d1_d0m1;
    const Factorization group = factorize(torus ? p + 1 : p - 1);
    return prediction_from_order(h.extension().mult_order(t.t, group), torus, false);
  }

  const PrimeField f(p);
  if (p <= 3) throw DomainError("predict_orbit needs p > 3");
  const Fp2Field fp2(f);
  const FieldElement u = conjugate_seed(f, f.from_u64(seed));
  // Roots of X^2 - u X + 1 are (u +- sqrt(u^2 - 4)) / 2 and multiply to 1.
  const FieldElement disc = f.sub(f.sqr(u), f.element(4));
  Fp2Element t;
  bool in_extension = false;
  if (f.legendre(disc) >= 0) {
    t = fp2.embed(f.half(f.add(u, *f.sqrt(disc))));
  } else {
    const FieldElement c1 = *f.sqrt(f.div(disc, fp2.non_residue()));
    t = {f.half(u), f.half(c1)};
    in_extension = true;
  }
  const Factorization group = factorize(in_extension ? p + 1 : p - 1);
  OrbitPrediction out = prediction_from_order(fp2.mult_order(t, group), in_extension, true);
  if (u == f.element(2)) out.flag = OrbitFlag::fixed_two;
  if (u == f.element(-2)) out.flag = OrbitFlag::minus_two;
  return out;
}

}  // namespace logmap
