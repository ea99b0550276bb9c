#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "logmap/generator.hpp"
#include "logmap/ivsets.hpp"
#include "oracles.hpp"

using namespace logmap;

namespace {

std::vector<std::uint64_t> vals(const std::vector<FieldElement>& xs) {
  std::vector<std::uint64_t> out;
  for (auto x : xs) out.push_back(x.value);
  return out;
}

}  // namespace

TEST_CASE("small IV sets") {
  CHECK(vals(build_iv_set(23).elements) == std::vector<std::uint64_t>{1, 2, 3, 8, 12});
  CHECK(vals(build_iv_set(17).elements) == std::vector<std::uint64_t>{3, 7, 12, 14});
  CHECK(vals(build_iv_set(5).elements) == std::vector<std::uint64_t>{3});
  CHECK(vals(build_iv_set(7).elements) == std::vector<std::uint64_t>{1});
  CHECK(build_iv_set(23).cls == IvClass::d0_d0m1);
  CHECK(build_iv_set(17).cls == IvClass::d1_d0m1);
  CHECK_THROWS_AS(build_iv_set(3), DomainError);
  CHECK_THROWS_AS(build_iv_set(21), InvalidField);
}

TEST_CASE("IV sets agree with squaring and have the predicted size") {
  for (std::uint64_t p : oracle::primes_in(5, 1500)) {
    const IvSet iv = build_iv_set(p);
    CHECK(vals(iv.elements) == oracle::iv_set(p));
    CHECK(iv.size() == (p % 4 == 3 ? (p - 3) / 4 : (p - 1) / 4));
  }
}

TEST_CASE("IV sets are closed under the logistic map") {
  for (std::uint64_t p : oracle::primes_in(5, 400)) {
    const IvSet iv = build_iv_set(p);
    const PrimeField f(p);
    for (FieldElement a : iv.elements) CHECK(iv.contains(logistic_map(f, a)));
  }
}

TEST_CASE("split fibers for p = 23") {
  const Hyperbola h(23);
  const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> table = {
      {1, {4, 6, 17, 19}}, {2, {2, 11, 12, 21}}, {3, {5, 9, 14, 18}}, {8, {7, 10, 13, 16}}, {12, {3, 8, 15, 20}}};
  const auto fibers = h.fibers();
  REQUIRE(fibers.size() == table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(fibers[i].image.value == table[i].first);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(fibers[i].points[j].t.c0.value == table[i].second[j]);
      CHECK(fibers[i].points[j].t.c1.value == 0);
    }
  }
}

TEST_CASE("torus fibers for p = 17 with alpha^2 = 3") {
  const Hyperbola h(17);
  CHECK(h.extension().non_residue().value == 3);
  using P = std::pair<std::uint64_t, std::uint64_t>;
  const std::vector<std::pair<std::uint64_t, std::vector<P>>> table = {
      {3, {{2, 1}, {15, 16}, {2, 16}, {15, 1}}},
      {7, {{5, 5}, {12, 12}, {5, 12}, {12, 5}}},
      {12, {{8, 2}, {9, 15}, {8, 15}, {9, 2}}},
      {14, {{7, 4}, {10, 13}, {7, 13}, {10, 4}}}};
  const auto fibers = h.fibers();
  REQUIRE(fibers.size() == table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(fibers[i].image.value == table[i].first);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(fibers[i].points[j].t.c0.value == table[i].second[j].first);
      CHECK(fibers[i].points[j].t.c1.value == table[i].second[j].second);
    }
  }
}

TEST_CASE("phi is four-to-one onto the IV set") {
  for (std::uint64_t p : oracle::primes_in(5, 200)) {
    const Hyperbola h(p);
    const auto params = h.parameter_space();
    CHECK(params.size() == (p % 4 == 3 ? p - 3 : p - 1));
    std::map<std::uint64_t, int> hits;
    for (const ParamPoint& t : params) {
      CHECK(h.is_parameter(t));
      ++hits[h.phi(t).value];
    }
    const auto iv = oracle::iv_set(p);
    CHECK(hits.size() == iv.size());
    for (std::uint64_t a : iv) CHECK(hits[a] == 4);
  }
}

TEST_CASE("fiber points are t, -t, 1/t, -1/t and map back") {
  for (std::uint64_t p : oracle::primes_in(5, 300)) {
    const Hyperbola h(p);
    for (const Fiber& fb : h.fibers()) {
      std::set<ParamPoint> distinct(fb.points.begin(), fb.points.end());
      CHECK(distinct.size() == 4);
      for (const ParamPoint& t : fb.points) CHECK(h.phi(t) == fb.image);
      CHECK(h.phi_preimage(fb.image) == *distinct.begin());
    }
  }
}

TEST_CASE("LM(phi(t)) = phi(t^2)") {
  for (std::uint64_t p : oracle::primes_in(7, 300)) {
    const Hyperbola h(p);
    const Fp2Field& k = h.extension();
    for (const ParamPoint& t : h.parameter_space()) {
      const Fp2Element t2 = k.sqr(t.t);
      if (t2 == k.one() || t2 == k.neg(k.one())) {
        CHECK_THROWS_AS(h.conjugation_check(t), DegenerateParameter);
        continue;
      }
      const auto [lhs, rhs] = h.conjugation_check(t);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("degenerate parameters are rejected") {
  const Hyperbola split(23);
  CHECK_THROWS_AS(split.phi(split.split_param(1)), DegenerateParameter);
  CHECK_THROWS_AS(split.phi(split.split_param(0)), DegenerateParameter);
  CHECK_THROWS_AS(split.phi(split.split_param(-1)), DegenerateParameter);
  const Hyperbola torus(17);
  CHECK_THROWS_AS(torus.phi(torus.torus_param(1, 0)), DegenerateParameter);
  CHECK_THROWS_AS(torus.phi(torus.torus_param(1, 1)), DegenerateParameter);  // norm 1 - 3 != 1
  CHECK_THROWS_AS(split.phi_preimage(split.field().element(4)), DomainError);
}

TEST_CASE("sign split of LM-preimages") {
  for (std::uint64_t p : oracle::primes_in(5, 400)) {
    const Hyperbola h(p);
    const PrimeField& f = h.field();
    for (std::uint64_t a : oracle::iv_set(p)) {
      const SignSplit s = h.sign_split(f.from_u64(a));
      CHECK(logistic_map(f, s.c1).value == a);
      CHECK(logistic_map(f, s.c2).value == a);
      CHECK(s.c1 < s.c2);
      CHECK(s.legendre_c1 == oracle::legendre(s.c1.value, p));
      CHECK(s.legendre_c2 == oracle::legendre(s.c2.value, p));
      // Exactly one preimage stays in the IV set.
      const int inside = h.is_member(s.c1) + h.is_member(s.c2);
      CHECK(inside == 1);
    }
  }
}
