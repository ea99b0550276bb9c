// Acceptance checks, one PASS/FAIL line each. Exits 1 if any check fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "logmap/cli.hpp"
#include "logmap/diagram.hpp"
#include "logmap/generator.hpp"
#include "logmap/ivsets.hpp"
#include "logmap/lcp.hpp"
#include "logmap/parallel.hpp"
#include "logmap/sweep.hpp"
#include "oracles.hpp"

using namespace logmap;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (!pass) {
      detail += "; ";
    } else {
      detail.clear();
    }
    pass = false;
    detail += why;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

std::vector<std::uint64_t> vals(const std::vector<FieldElement>& xs) {
  std::vector<std::uint64_t> out;
  for (auto x : xs) out.push_back(x.value);
  return out;
}

// Runs the command-line front end and returns (exit code, non-comment lines).
std::pair<int, std::vector<std::string>> cli_rows(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  std::vector<std::string> rows;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  return {code, rows};
}

Outcome iv_sets() {
  Outcome o;
  const auto t0 = Clock::now();
  const IvSet a = build_iv_set(23);
  const IvSet b = build_iv_set(17);
  const double dt = seconds_since(t0);
  if (vals(a.elements) != std::vector<std::uint64_t>{1, 2, 3, 8, 12}) o.fail("p=23 gave " + join(vals(a.elements)));
  if (vals(b.elements) != std::vector<std::uint64_t>{3, 7, 12, 14}) o.fail("p=17 gave " + join(vals(b.elements)));
  const auto c23 = cli_rows({"ivset", "--p", "23"});
  if (c23.second != std::vector<std::string>{"element", "1", "2", "3", "8", "12"}) o.fail("ivset --p 23 CSV differs");
  const auto c17 = cli_rows({"ivset", "--p", "17"});
  if (c17.second != std::vector<std::string>{"element", "3", "7", "12", "14"}) o.fail("ivset --p 17 CSV differs");
  if (dt >= 1e-3) o.fail("took " + std::to_string(dt * 1e3) + " ms");
  if (o.pass) o.detail = "{1,2,3,8,12} and {3,7,12,14}; both built in " + std::to_string(dt * 1e3) + " ms";
  return o;
}

Outcome counting_formula() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t primes = 0;
  for (std::uint64_t p = 5; p < 2000; ++p) {
    if (!oracle::is_prime(p)) continue;
    ++primes;
    const std::size_t want = p % 4 == 3 ? (p - 3) / 4 : (p - 1) / 4;
    const std::size_t got = build_iv_set(p).size();
    if (got != want) o.fail("p=" + std::to_string(p) + ": " + std::to_string(got) + " != " + std::to_string(want));
  }
  const double dt = seconds_since(t0);
  if (dt >= 5.0) o.fail("took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(primes) + " primes in [5, 2000)";
  return o;
}

Outcome fibers() {
  Outcome o;
  const std::vector<std::string> table1 = {"image,t1,t2,t3,t4", "1,4,6,17,19", "2,2,11,12,21",
                                           "3,5,9,14,18",       "8,7,10,13,16", "12,3,8,15,20"};
  const std::vector<std::string> table2 = {"image,t1,t2,t3,t4",
                                           "3,\"(2,1)\",\"(15,16)\",\"(2,16)\",\"(15,1)\"",
                                           "7,\"(5,5)\",\"(12,12)\",\"(5,12)\",\"(12,5)\"",
                                           "12,\"(8,2)\",\"(9,15)\",\"(8,15)\",\"(9,2)\"",
                                           "14,\"(7,4)\",\"(10,13)\",\"(7,13)\",\"(10,4)\""};
  if (cli_rows({"fibers", "--p", "23"}).second != table1) o.fail("fibers --p 23 differs from the split table");
  if (cli_rows({"fibers", "--p", "17"}).second != table2) o.fail("fibers --p 17 differs from the torus table");
  if (Hyperbola(17).extension().non_residue().value != 3) o.fail("alpha^2 != 3 for p=17");
  if (o.pass) o.detail = "5 split fibers (p=23) and 4 torus fibers (p=17, alpha^2=3) match cell for cell";
  return o;
}

Outcome census_tables() {
  Outcome o;
  const CycleCensus c23 = census(23);
  if (c23.rows != std::vector<CensusRow>{{11, 10, 10, 1, 5, true}}) o.fail("census(23) rows differ");
  const CycleCensus c17 = census(17);
  auto strip = [](const CensusRow& r) { return std::vector<std::uint64_t>{r.d, r.ord_d_2, r.phi_d, r.n_d, r.c_d}; };
  if (c17.rows.size() != 2 || strip(c17.rows[0]) != std::vector<std::uint64_t>{3, 2, 2, 1, 1} ||
      strip(c17.rows[1]) != std::vector<std::uint64_t>{9, 6, 6, 1, 3}) {
    o.fail("census(17) rows differ");
  }
  if (o.pass) o.detail = "p=23: (11,10,10,1,5); p=17: (3,2,2,1,1), (9,6,6,1,3)";
  return o;
}

Outcome theory_vs_brute() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t primes = 0, seeds = 0;
  for (std::uint64_t p = 5; p < 500; ++p) {
    if (!oracle::is_prime(p)) continue;
    ++primes;
    const CycleMultiset theory = to_multiset(census(p));
    const CycleMultiset brute = brute_census(p);
    const auto naive = oracle::cycle_multiset(p);
    if (theory != brute || brute != CycleMultiset(naive.begin(), naive.end())) {
      o.fail("census mismatch at p=" + std::to_string(p));
    }
    for (std::uint64_t s : oracle::iv_set(p)) {
      ++seeds;
      const OrbitPrediction pred = predict_orbit(p, s, SeedClass::iv_set);
      const OrbitReport r = Generator({MapKind::logistic, p, 4, s}).orbit();
      if (pred.tail_length != r.tail_length() || pred.period != r.period()) {
        o.fail("prediction mismatch at p=" + std::to_string(p) + " seed=" + std::to_string(s));
      }
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 60.0) o.fail("took " + std::to_string(dt) + " s");
  if (o.pass) {
    o.detail = std::to_string(primes) + " primes, " + std::to_string(seeds) + " seeds, " + std::to_string(dt) + " s";
  }
  return o;
}

Outcome orbits() {
  Outcome o;
  auto cycle = [](std::uint64_t p, std::uint64_t s) {
    const OrbitReport r = Generator({MapKind::logistic, p, 4, s}).orbit();
    return std::make_pair(r.tail_length(), vals(r.cycle));
  };
  using Want = std::pair<std::size_t, std::vector<std::uint64_t>>;
  if (cycle(23, 1) != Want{0, {1, 8, 12, 3, 2}}) o.fail("p=23 seed 1: " + join(cycle(23, 1).second));
  if (cycle(17, 3) != Want{0, {3, 14, 7}}) o.fail("p=17 seed 3: " + join(cycle(17, 3).second));
  if (cycle(17, 12) != Want{0, {12}}) o.fail("p=17 seed 12: " + join(cycle(17, 12).second));
  if (o.pass) o.detail = "(1,8,12,3,2), (3,14,7), (12)";
  return o;
}

Outcome safe_primes() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::uint64_t> listed = {11, 23, 47, 167, 359, 719, 1439, 2039, 2879, 4079};
  const std::vector<std::uint64_t> got = two_safe_primes(5000);
  const std::vector<std::uint64_t> analogous = analogous_two_safe(1000000);
  const double dt = seconds_since(t0);

  // Independent recount by trial division.
  std::vector<std::uint64_t> recount;
  for (std::uint64_t p = 11; p <= 5000; p += 4) {
    if (oracle::is_prime(p) && oracle::is_prime((p - 1) / 2) && oracle::is_prime((p - 3) / 4)) recount.push_back(p);
  }
  if (got != recount) o.fail("library " + join(got) + " disagrees with trial division " + join(recount));
  if (got != listed) {
    std::vector<std::uint64_t> extra;
    for (auto p : got) {
      if (std::find(listed.begin(), listed.end(), p) == listed.end()) extra.push_back(p);
    }
    const bool prefix = got.size() >= listed.size() && std::equal(listed.begin(), listed.end(), got.begin());
    o.fail("2-safe primes <= 5000 are " + join(got) + "; the expected set " + join(listed) +
           (prefix ? " is only the first ten, missing " + join(extra) + " (each confirmed by trial division)" : ""));
  }
  if (analogous != std::vector<std::uint64_t>{13}) o.fail("analogous search gave " + join(analogous));
  if (dt >= 10.0) o.fail("took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = join(got) + "; analogous {13}";
  return o;
}

Outcome maximality() {
  Outcome o;
  std::size_t primes = 0, maximal = 0;
  for (std::uint64_t p = 5; p < 2000; ++p) {
    if (!oracle::is_prime(p)) continue;
    ++primes;
    const CycleMultiset brute = brute_census(p);
    const std::size_t iv = oracle::iv_set(p).size();
    const bool one_cycle = brute.size() == 1 && brute.begin()->second == 1 && brute.begin()->first == iv;
    const bool claim = is_maximal_prime(p).is_maximal;
    maximal += claim;
    if (claim != one_cycle) o.fail("p=" + std::to_string(p));
  }
  const MaximalityReport r23 = is_maximal_prime(23);
  if (!r23.is_maximal || r23.max_period != 5u) o.fail("23 should be maximal with period 5");
  if (is_maximal_prime(17).is_maximal) o.fail("17 should not be maximal");
  if (o.pass) o.detail = std::to_string(maximal) + " of " + std::to_string(primes) + " primes maximal; 23 -> 5, 17 no";
  return o;
}

Outcome bm_vs_gcd() {
  Outcome o;
  std::mt19937_64 rng(20140101);
  const std::vector<std::uint64_t> primes = oracle::primes_in(3, 100);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t p = primes[rng() % primes.size()];
    const std::size_t T = 1 + rng() % 50;
    std::vector<FieldElement> s(2 * T);
    std::vector<std::uint64_t> cycle(T);
    for (std::size_t k = 0; k < T; ++k) {
      cycle[k] = rng() % p;
      s[k] = s[k + T] = {cycle[k]};
    }
    const PrimeField f(p);
    const std::size_t bm = berlekamp_massey_profile(s, f, 2 * T).at(2 * T);
    const std::size_t naive = oracle::lc_gcd(cycle, p);
    const std::size_t lib = lc_via_gcd(std::span(s).first(T), f);
    if (bm != naive || lib != naive) {
      o.fail("p=" + std::to_string(p) + " T=" + std::to_string(T) + ": BM " + std::to_string(bm) + ", gcd " +
             std::to_string(naive));
    }
  }
  if (o.pass) o.detail = "200 sequences, odd primes < 100, T <= 50";
  return o;
}

struct BoundTally {
  std::size_t seeds = 0;
  std::vector<std::string> problems;
};

// Every IV seed of p, N <= 2T: L >= lcp1, L >= lcp2 and lcp1 >= dickson.
BoundTally check_bounds(std::uint64_t p) {
  BoundTally t;
  for (FieldElement s : build_iv_set(p).elements) {
    ++t.seeds;
    const std::size_t T = Generator({MapKind::logistic, p, 4, s.value}).orbit().period();
    const BoundReport r = verify_bounds(p, s.value, 2 * T);
    for (const BoundViolation& v : r.violations) {
      if (v.kind == BoundKind::dickson) continue;
      t.problems.push_back("p=" + std::to_string(p) + " seed=" + std::to_string(s.value) + " N=" +
                           std::to_string(v.n) + " L=" + std::to_string(v.linear_complexity) + " < " +
                           std::string(to_string(v.kind)) + "=" + std::to_string(v.bound));
    }
    for (std::size_t n = 1; n <= 2 * T; ++n) {
      if (r.lcp1.values[n - 1] < r.dickson.values[n - 1] - kBoundSlack) {
        t.problems.push_back("p=" + std::to_string(p) + " N=" + std::to_string(n) + ": lcp1 below dickson");
        break;
      }
    }
  }
  return t;
}

Outcome bounds_hold() {
  Outcome o;
  // The largest case alone, on one thread.
  const auto t0 = Clock::now();
  const BoundTally big = check_bounds(4079);
  const double dt_big = seconds_since(t0);

  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 5; p < 5000; ++p) {
    if (p != 4079 && oracle::is_prime(p) && is_maximal_prime(p).is_maximal) primes.push_back(p);
  }
  std::vector<BoundTally> tallies(primes.size());
  parallel_for(primes.size(), [&](std::size_t i) { tallies[i] = check_bounds(primes[i]); });
  tallies.push_back(big);

  std::size_t seeds = 0;
  for (const BoundTally& t : tallies) {
    seeds += t.seeds;
    for (std::size_t k = 0; k < t.problems.size() && k < 3; ++k) o.fail(t.problems[k]);
  }
  if (dt_big >= 30.0) o.fail("p=4079 took " + std::to_string(dt_big) + " s");
  if (o.pass) {
    o.detail = std::to_string(primes.size() + 1) + " maximal primes, " + std::to_string(seeds) +
               " seeds; p=4079 in " + std::to_string(dt_big) + " s";
  }
  return o;
}

Outcome fig6_shape() {
  Outcome o;
  const auto [code, rows] = cli_rows({"lcp", "--p", "6599", "--bounds"});
  if (code != 0) o.fail("exit code " + std::to_string(code));
  if (rows.empty() || rows[0] != "N,L,lcp1,lcp2,dickson") {
    o.fail("unexpected header");
    return o;
  }
  // Displayed values: never negative, and zero wherever the raw value is negative.
  const BoundReport r = verify_bounds(6599, 1, rows.size() - 1);
  bool clamped_seen = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<double> cells;
    std::stringstream line(rows[i]);
    for (std::string cell; std::getline(line, cell, ',');) cells.push_back(std::stod(cell));
    const double raw1 = r.lcp1.values[i - 1], raw2 = r.lcp2.values[i - 1];
    if (cells[2] < 0.0 || cells[3] < 0.0 || cells[4] < 0.0) o.fail("negative value displayed at N=" + rows[i]);
    if (raw1 < 0.0 && cells[2] != 0.0) o.fail("lcp1 not clamped at N=" + std::to_string(i));
    if (raw2 < 0.0 && cells[3] != 0.0) o.fail("lcp2 not clamped at N=" + std::to_string(i));
    clamped_seen = clamped_seen || raw1 < 0.0;
  }
  if (!clamped_seen) o.fail("no negative lcp1 values to clamp");
  const std::size_t n_max = r.lcp1.values.size();
  if (!(r.lcp2.values.front() > r.lcp1.values.front())) o.fail("lcp2 does not dominate at N=1");
  if (!(r.lcp1.values.back() > r.lcp2.values.back())) o.fail("lcp1 does not dominate at N=2T");
  if (!r.crossover) {
    o.fail("no crossover");
  } else {
    // One switch only: lcp2 >= lcp1 before the crossover, lcp1 > lcp2 after.
    for (std::size_t n = 1; n <= n_max; ++n) {
      const bool lcp1_ahead = r.lcp1.values[n - 1] > r.lcp2.values[n - 1];
      if (lcp1_ahead != (n >= *r.crossover)) {
        o.fail("dominance switches more than once (N=" + std::to_string(n) + ")");
        break;
      }
    }
  }
  if (!r.holds()) o.fail("bound violated along the curve");
  if (o.pass) {
    o.detail = "N=1.." + std::to_string(n_max) + ", lcp2 ahead below N=" + std::to_string(*r.crossover) +
               ", lcp1 ahead from there; " + "lcp1 at 2T = " + std::to_string(r.lcp1.values.back());
  }
  return o;
}

// Least-squares slope of ys against xs.
double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

Outcome sweeps() {
  Outcome o;
  const auto t0 = Clock::now();
  SweepOptions opts;
  opts.kind = SweepKind::periods;
  opts.n_min = 3;
  opts.n_max = 18;
  const SweepResult res = run_sweep(opts);
  const double dt = seconds_since(t0);

  auto row = [&](unsigned bits, PrimeClass cls) -> const SweepRow& {
    for (const SweepRow& r : res.rows) {
      if (r.bits == bits && r.cls == cls) return r;
    }
    throw std::logic_error("missing sweep row");
  };
  std::ostringstream pct;
  for (unsigned n = 3; n <= 16; ++n) {
    for (PrimeClass cls : {PrimeClass::three_mod_four, PrimeClass::one_mod_four}) {
      const SweepRow& r = row(n, cls);
      if (r.sampled || r.primes_tested == 0 || r.pct_maximal < 0.0 || r.pct_maximal > 100.0) {
        o.fail("N=" + std::to_string(n) + " " + std::string(to_string(cls)) + " not computed exhaustively");
      }
    }
    if (n >= 12) {
      const double a = row(n, PrimeClass::three_mod_four).pct_maximal;
      const double b = row(n, PrimeClass::one_mod_four).pct_maximal;
      char buf[64];
      std::snprintf(buf, sizeof buf, " N=%u %.2f/%.2f", n, a, b);
      pct << buf;
      if (a < b) o.fail("N=" + std::to_string(n) + ": 3mod4 " + std::to_string(a) + "% < 1mod4 " + std::to_string(b) + "%");
    }
  }

  std::vector<double> xs;
  for (unsigned n = 14; n <= 18; ++n) xs.push_back(n);
  for (PrimeClass cls : {PrimeClass::three_mod_four, PrimeClass::one_mod_four}) {
    std::vector<double> cycles, per_cycle, per_seed;
    for (unsigned n = 14; n <= 18; ++n) {
      cycles.push_back(row(n, cls).mean_cycles);
      per_cycle.push_back(row(n, cls).mean_period_per_cycle);
      per_seed.push_back(row(n, cls).mean_period_per_seed);
    }
    const std::string c(to_string(cls));
    if (slope(xs, cycles) < 0.0) o.fail(c + " mean cycle count trends down over N=14..18");
    if (slope(xs, per_cycle) < 0.0) o.fail(c + " mean period per cycle trends down over N=14..18");
    if (slope(xs, per_seed) < 0.0) o.fail(c + " mean period per seed trends down over N=14..18");
  }
  if (dt >= 300.0) o.fail("took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = "pct 3mod4/1mod4:" + pct.str() + "; means rise over N=14..18; " + std::to_string(dt) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"initial-value sets", iv_sets},
      {"IV set size formula", counting_formula},
      {"hyperbola fibers", fibers},
      {"cycle census tables", census_tables},
      {"theory equals brute force", theory_vs_brute},
      {"example orbits", orbits},
      {"2-safe and analogous primes", safe_primes},
      {"maximal primes", maximality},
      {"Berlekamp-Massey vs gcd", bm_vs_gcd},
      {"linear complexity bounds", bounds_hold},
      {"bound curves for p=6599", fig6_shape},
      {"sweep trends", sweeps},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    std::printf("%s %2zu  %-28s [%8.3f s]  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, dt,
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
