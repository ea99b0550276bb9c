#include "logmap/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "logmap/diagram.hpp"
#include "logmap/error.hpp"
#include "logmap/generator.hpp"
#include "logmap/ivsets.hpp"
#include "logmap/lcp.hpp"
#include "logmap/sweep.hpp"

namespace logmap::cli {

namespace {

using json = nlohmann::json;

// What a command produced, in both renderings.
struct Output {
  std::vector<std::string> notes;  // "# key: value" lines in CSV
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  json doc = json::object();
  int code = kOk;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string join(const std::vector<FieldElement>& xs, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i].value);
  }
  return s;
}

json values(const std::vector<FieldElement>& xs) {
  json a = json::array();
  for (FieldElement x : xs) a.push_back(x.value);
  return a;
}

std::uint64_t iv_modulus_m(std::uint64_t p, IvClass cls) { return cls == IvClass::d0_d0m1 ? (p - 1) / 2 : (p + 1) / 2; }

void render(const Output& o, const std::string& command, bool as_json, std::ostream& out) {
  if (as_json) {
    json doc = o.doc;
    doc["tool"] = "logmap";
    doc["version"] = std::string(kVersion);
    doc["command"] = command;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# logmap " << kVersion << '\n';
  out << "# command: " << command << '\n';
  for (const auto& n : o.notes) out << "# " << n << '\n';
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << csv_field(cells[i]);
    }
    out << '\n';
  };
  line(o.header);
  for (const auto& r : o.rows) line(r);
}

struct OrbitArgs {
  std::uint64_t p = 0, seed = 0, mu = 4;
  std::string kind = "logistic";
  std::string seed_class = "auto";
  std::size_t max_steps = 0;
  bool predict = false;
};

Output cmd_orbit(const OrbitArgs& a) {
  const MapKind kind = map_kind_from_string(a.kind);
  const Generator gen({kind, a.p, a.mu, a.seed});
  const OrbitReport r = gen.orbit(a.max_steps == 0 ? a.p : a.max_steps);

  Output o;
  o.header = {"p", "kind", "seed", "tail_length", "period", "tail", "cycle"};
  std::vector<std::string> row = {std::to_string(a.p), std::string(to_string(kind)), std::to_string(gen.seed().value),
                                  std::to_string(r.tail_length()), std::to_string(r.period()), join(r.tail),
                                  join(r.cycle)};
  o.doc = {{"p", a.p},           {"kind", to_string(kind)},       {"seed", gen.seed().value},
           {"tail", values(r.tail)}, {"cycle", values(r.cycle)}, {"tail_length", r.tail_length()},
           {"period", r.period()}};

  if (a.predict) {
    if (kind == MapKind::logistic_general) throw DomainError("--predict covers mu = 4 only");
    const PrimeField& f = gen.field();
    FieldElement s = gen.seed();
    if (kind == MapKind::dickson_deg2) s = f.div(f.sub(s, f.element(2)), f.element(4));
    SeedClass cls = SeedClass::any;
    if (a.seed_class == "iv_set") {
      cls = SeedClass::iv_set;
    } else if (a.seed_class == "auto") {
      cls = Hyperbola(a.p).is_member(s) ? SeedClass::iv_set : SeedClass::any;
    } else if (a.seed_class != "any") {
      throw DomainError("--class must be auto, iv_set or any");
    }
    const OrbitPrediction pred = predict_orbit(a.p, s.value, cls);
    const bool matches = pred.tail_length == r.tail_length() && pred.period == r.period();
    const std::string cls_name = cls == SeedClass::iv_set ? "iv_set" : "any";
    o.header.insert(o.header.end(), {"predicted_tail", "predicted_period", "prediction_class", "flag", "matches"});
    row.insert(row.end(), {std::to_string(pred.tail_length), std::to_string(pred.period), cls_name,
                           std::string(to_string(pred.flag)), matches ? "true" : "false"});
    o.notes.push_back("prediction: order of t = " + std::to_string(pred.order) + " = 2^" +
                      std::to_string(pred.two_exponent) + " * " + std::to_string(pred.odd_part) +
                      (pred.in_extension ? " (t in F_p^2)" : " (t in F_p)"));
    o.doc["prediction"] = {{"class", cls_name},
                           {"tail_length", pred.tail_length},
                           {"period", pred.period},
                           {"order", pred.order},
                           {"two_exponent", pred.two_exponent},
                           {"odd_part", pred.odd_part},
                           {"in_extension", pred.in_extension},
                           {"flag", to_string(pred.flag)},
                           {"matches", matches}};
    if (!matches) o.code = kMismatch;
  }
  o.rows.push_back(std::move(row));
  return o;
}

Output cmd_ivset(std::uint64_t p) {
  const IvSet iv = build_iv_set(p);
  Output o;
  const bool d0 = iv.cls == IvClass::d0_d0m1;
  o.notes.push_back("class: " + std::string(to_string(iv.cls)) + (d0 ? " (p = 3 mod 4)" : " (p = 1 mod 4)"));
  o.notes.push_back("size: " + std::to_string(iv.size()) + ", expected " + (d0 ? "(p-3)/4 = " : "(p-1)/4 = ") +
                    std::to_string(d0 ? (p - 3) / 4 : (p - 1) / 4));
  if (iv.elements.empty()) o.notes.push_back("note: empty initial-value set");
  o.header = {"element"};
  for (FieldElement a : iv.elements) o.rows.push_back({std::to_string(a.value)});
  o.doc = {{"p", p}, {"class", to_string(iv.cls)}, {"size", iv.size()}, {"elements", values(iv.elements)}};
  return o;
}

Output cmd_fibers(std::uint64_t p) {
  const Hyperbola h(p);
  const bool torus = h.iv_class() == IvClass::d1_d0m1;
  Output o;
  o.notes.push_back("class: " + std::string(to_string(h.iv_class())));
  if (torus) {
    o.notes.push_back("encoding: (c0,c1) = c0 + c1*alpha, alpha^2 = " +
                      std::to_string(h.extension().non_residue().value));
    o.notes.push_back("order: t, -t, 1/t, -1/t with t the lexicographically least point");
  } else {
    o.notes.push_back("order: ascending");
  }
  o.header = {"image", "t1", "t2", "t3", "t4"};
  json fibers = json::array();
  for (const Fiber& fb : h.fibers()) {
    std::vector<std::string> row{std::to_string(fb.image.value)};
    json pts = json::array();
    for (const ParamPoint& t : fb.points) {
      if (torus) {
        row.push_back("(" + std::to_string(t.t.c0.value) + "," + std::to_string(t.t.c1.value) + ")");
        pts.push_back({t.t.c0.value, t.t.c1.value});
      } else {
        row.push_back(std::to_string(t.t.c0.value));
        pts.push_back(t.t.c0.value);
      }
    }
    o.rows.push_back(std::move(row));
    fibers.push_back({{"image", fb.image.value}, {"points", pts}});
  }
  o.doc = {{"p", p}, {"class", to_string(h.iv_class())}, {"fibers", fibers}};
  if (torus) o.doc["non_residue"] = h.extension().non_residue().value;
  return o;
}

std::string multiset_text(const CycleMultiset& ms) {
  std::string s;
  for (const auto& [period, count] : ms) {
    if (!s.empty()) s += ' ';
    s += std::to_string(count) + "x" + std::to_string(period);
  }
  return s.empty() ? "none" : s;
}

json multiset_json(const CycleMultiset& ms) {
  json a = json::array();
  for (const auto& [period, count] : ms) a.push_back({{"period", period}, {"count", count}});
  return a;
}

Output cmd_census(std::uint64_t p, bool brute) {
  const CycleCensus c = census(p);
  const MaximalityReport mr = is_maximal_prime(p);
  Output o;
  o.notes.push_back("class: " + std::string(to_string(c.cls)) + ", m = " + std::to_string(c.m));
  o.notes.push_back("cycles: " + std::to_string(c.cycle_count()) + ", covered: " + std::to_string(c.covered()));
  std::string maximal = mr.is_maximal ? "yes" : "no";
  if (mr.p1) maximal += ", p1 = " + std::to_string(*mr.p1);
  maximal += ", branch = " + std::string(to_string(mr.branch));
  if (mr.max_period) maximal += ", max period = " + std::to_string(*mr.max_period);
  o.notes.push_back("maximal: " + maximal);
  o.header = {"d", "ord_d_2", "phi_d", "n_d", "c_d", "minus_one_reachable"};
  json rows = json::array();
  for (const CensusRow& r : c.rows) {
    o.rows.push_back({std::to_string(r.d), std::to_string(r.ord_d_2), std::to_string(r.phi_d), std::to_string(r.n_d),
                      std::to_string(r.c_d), r.minus_one_reachable ? "true" : "false"});
    rows.push_back({{"d", r.d},
                    {"ord_d_2", r.ord_d_2},
                    {"phi_d", r.phi_d},
                    {"n_d", r.n_d},
                    {"c_d", r.c_d},
                    {"minus_one_reachable", r.minus_one_reachable}});
  }
  o.doc = {{"p", p},
           {"m", c.m},
           {"class", to_string(c.cls)},
           {"rows", rows},
           {"maximal",
            {{"is_maximal", mr.is_maximal},
             {"p1", mr.p1 ? json(*mr.p1) : json(nullptr)},
             {"branch", to_string(mr.branch)},
             {"max_period", mr.max_period ? json(*mr.max_period) : json(nullptr)}}}};
  if (brute) {
    const CycleMultiset theory = to_multiset(c);
    const CycleMultiset observed = brute_census(p);
    const bool matches = theory == observed;
    o.notes.push_back("theory cycles: " + multiset_text(theory));
    o.notes.push_back("brute cycles: " + multiset_text(observed));
    o.notes.push_back(std::string("brute_matches: ") + (matches ? "true" : "false"));
    o.doc["brute"] = {{"theory", multiset_json(theory)}, {"observed", multiset_json(observed)}, {"matches", matches}};
    if (!matches) o.code = kMismatch;
  }
  return o;
}

struct SweepArgs {
  std::string kind = "maximal";
  unsigned n_min = 3, n_max = 12;
  std::string cls = "both";
  std::size_t sample = 200;
  std::uint64_t seed = 1;
  unsigned exhaustive_bits = 24;
  double budget = 0.0;
};

Output cmd_sweep(const SweepArgs& a) {
  SweepOptions opts;
  opts.kind = sweep_kind_from_string(a.kind);
  opts.n_min = a.n_min;
  opts.n_max = a.n_max;
  if (a.cls == "both") {
    opts.classes = {PrimeClass::three_mod_four, PrimeClass::one_mod_four};
  } else {
    opts.classes = {prime_class_from_string(a.cls)};
  }
  opts.exhaustive_max_bits = a.exhaustive_bits;
  opts.sample = a.sample;
  opts.rng_seed = a.seed;
  opts.budget_seconds = a.budget;
  const SweepResult res = run_sweep(opts);

  Output o;
  o.notes.push_back("kind: " + a.kind);
  o.notes.push_back("bits: N-bit primes p with 2^(N-1) <= p < 2^N");
  o.notes.push_back("enumeration: exhaustive for N <= " + std::to_string(a.exhaustive_bits) + ", otherwise " +
                    std::to_string(a.sample) + " primes per (N, class) from mt19937_64 seed " + std::to_string(a.seed));
  o.header = {"bits", "class", "sampled", "primes_tested"};
  switch (opts.kind) {
    case SweepKind::maximal:
      o.notes.push_back("pct_maximal: 100 * (#maximal primes) / primes_tested");
      o.header.insert(o.header.end(), {"maximal", "pct_maximal"});
      break;
    case SweepKind::cycles:
      o.notes.push_back("mean_cycles: mean over primes of sum_d n_d");
      o.header.push_back("mean_cycles");
      break;
    case SweepKind::periods:
      o.notes.push_back("mean_period_per_cycle: mean over primes of (sum_d n_d c_d) / (sum_d n_d)");
      o.notes.push_back("mean_period_per_seed: mean over primes of (sum_d n_d c_d^2) / (sum_d n_d c_d)");
      o.header.insert(o.header.end(), {"mean_period_per_cycle", "mean_period_per_seed"});
      break;
  }
  json rows = json::array();
  for (const SweepRow& r : res.rows) {
    std::vector<std::string> row = {std::to_string(r.bits), std::string(to_string(r.cls)), r.sampled ? "true" : "false",
                                    std::to_string(r.primes_tested)};
    json jr = {{"bits", r.bits}, {"class", to_string(r.cls)}, {"sampled", r.sampled}, {"primes_tested", r.primes_tested}};
    switch (opts.kind) {
      case SweepKind::maximal:
        row.insert(row.end(), {std::to_string(r.maximal_count), fmt_double(r.pct_maximal)});
        jr["maximal"] = r.maximal_count;
        jr["pct_maximal"] = r.pct_maximal;
        break;
      case SweepKind::cycles:
        row.push_back(fmt_double(r.mean_cycles));
        jr["mean_cycles"] = r.mean_cycles;
        break;
      case SweepKind::periods:
        row.insert(row.end(), {fmt_double(r.mean_period_per_cycle), fmt_double(r.mean_period_per_seed)});
        jr["mean_period_per_cycle"] = r.mean_period_per_cycle;
        jr["mean_period_per_seed"] = r.mean_period_per_seed;
        break;
    }
    o.rows.push_back(std::move(row));
    rows.push_back(std::move(jr));
  }
  if (res.truncated) {
    o.notes.push_back("truncated: budget of " + fmt_double(a.budget) + " s exhausted before N = " +
                      std::to_string(*res.truncated_before_bits));
  }
  o.doc = {{"kind", a.kind}, {"rows", rows}, {"truncated", res.truncated}, {"sample", a.sample},
           {"rng_seed", a.seed}, {"exhaustive_max_bits", a.exhaustive_bits}};
  return o;
}

struct LcpArgs {
  std::uint64_t p = 0;
  std::optional<std::uint64_t> seed;  // default: least element of the initial-value set
  std::size_t n_max = 0;
  bool bounds = false;
};

Output cmd_lcp(const LcpArgs& a) {
  std::uint64_t seed = 0;
  if (a.seed) {
    seed = *a.seed;
  } else {
    const IvSet iv = build_iv_set(a.p);
    if (iv.elements.empty()) throw DomainError("initial-value set is empty; pass --seed");
    seed = iv.elements.front().value;
  }
  const Generator gen({MapKind::logistic, a.p, 4, seed});
  const OrbitReport orbit = gen.orbit();
  const std::size_t period = orbit.period();
  const std::size_t n_max = a.n_max == 0 ? 2 * period : a.n_max;
  const Hyperbola h(a.p);
  const bool in_iv = h.is_member(gen.seed());
  const bool all_zero =
      std::all_of(orbit.cycle.begin(), orbit.cycle.end(), [](FieldElement x) { return x.value == 0; });

  BoundReport rep;
  if (in_iv) {
    rep = verify_bounds(a.p, seed, n_max);
  } else {
    // lcp1 presumes an initial-value seed; lcp2 and the Dickson bound still apply to the periodic part.
    rep.p = a.p;
    rep.seed = gen.seed().value;
    rep.m = iv_modulus_m(a.p, h.iv_class());
    rep.lcp = logistic_lcp(a.p, seed, n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto l = static_cast<double>(rep.lcp.at(n));
      const double b2 = bound_lcp2(n, rep.lcp.linear_complexity);
      const double b5 = bound_dickson(n, period, a.p);
      rep.lcp2.values.push_back(b2);
      rep.dickson.values.push_back(b5);
      if (l < b2 - kBoundSlack) rep.violations.push_back({BoundKind::lcp2, n, rep.lcp.at(n), b2});
      if (l < b5 - kBoundSlack) rep.violations.push_back({BoundKind::dickson, n, rep.lcp.at(n), b5});
    }
  }

  Output o;
  if (!a.seed) o.notes.push_back("seed: " + std::to_string(seed) + " (least initial-value element)");
  o.notes.push_back("period T: " + std::to_string(period) + ", tail: " + std::to_string(orbit.tail_length()) +
                    " (profile taken over the periodic part)");
  o.notes.push_back("linear complexity L(S): " + std::to_string(rep.lcp.linear_complexity));
  o.notes.push_back(std::string("seed in initial-value set: ") + (in_iv ? "true" : "false") +
                    ", m = " + std::to_string(rep.m));
  if (all_zero) o.notes.push_back("note: all-zero sequence, L(S, N) = 0");
  o.header = {"N", "L"};
  if (a.bounds) {
    o.notes.push_back("bounds: lcp1 = min(N^2,4T^2)/(16m) - sqrt(m); lcp2 = min(sqrt(2N)-3, L(S)); "
                      "dickson = min(N^2,4T^2)/(16(p+1)) - sqrt(p+1)");
    o.notes.push_back("bound columns clamped at 0 for display; violations use unclamped values with slack 1e-9");
    if (!in_iv) o.notes.push_back("lcp1 left blank: seed outside the initial-value set");
    if (rep.crossover) o.notes.push_back("crossover: lcp1 > lcp2 from N = " + std::to_string(*rep.crossover));
    o.notes.push_back("violations: " + std::to_string(rep.violations.size()));
    o.header.insert(o.header.end(), {"lcp1", "lcp2", "dickson"});
  }
  json rows = json::array();
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::string> row = {std::to_string(n), std::to_string(rep.lcp.at(n))};
    json jr = {{"N", n}, {"L", rep.lcp.at(n)}};
    if (a.bounds) {
      row.push_back(in_iv ? fmt_double(clamp_for_display(rep.lcp1.values[n - 1])) : "");
      row.push_back(fmt_double(clamp_for_display(rep.lcp2.values[n - 1])));
      row.push_back(fmt_double(clamp_for_display(rep.dickson.values[n - 1])));
      jr["lcp1"] = in_iv ? json(rep.lcp1.values[n - 1]) : json(nullptr);
      jr["lcp2"] = rep.lcp2.values[n - 1];
      jr["dickson"] = rep.dickson.values[n - 1];
    }
    o.rows.push_back(std::move(row));
    rows.push_back(std::move(jr));
  }
  json violations = json::array();
  for (const BoundViolation& v : rep.violations) {
    violations.push_back({{"bound", to_string(v.kind)}, {"N", v.n}, {"L", v.linear_complexity}, {"value", v.bound}});
  }
  o.doc = {{"p", a.p},
           {"seed", gen.seed().value},
           {"period", period},
           {"linear_complexity", rep.lcp.linear_complexity},
           {"in_iv_set", in_iv},
           {"m", rep.m},
           {"rows", rows}};
  if (a.bounds) {
    o.doc["violations"] = violations;
    o.doc["crossover"] = rep.crossover ? json(*rep.crossover) : json(nullptr);
    if (!rep.violations.empty()) o.code = kBoundViolation;
  }
  return o;
}

Output cmd_safeprimes(std::uint64_t limit, bool analogous) {
  const std::vector<std::uint64_t> primes = analogous ? analogous_two_safe(limit) : two_safe_primes(limit);
  Output o;
  o.notes.push_back(analogous ? "kind: p = 2 p1 - 1, p1 a safe prime" : "kind: 2-safe, p = 2 p1 + 1, p1 = 2 p2 + 1");
  o.notes.push_back("limit: " + std::to_string(limit));
  o.header = {"prime"};
  for (std::uint64_t p : primes) o.rows.push_back({std::to_string(p)});
  o.doc = {{"limit", limit}, {"analogous", analogous}, {"primes", primes}};
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logistic-map / degree-2 Dickson generators over F_p: periods, cycle structure, linear complexity"};
  app.name("logmap");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  std::string format = "csv";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "Write results to FILE instead of stdout");

  OrbitArgs orbit_args;
  auto* orbit = app.add_subcommand("orbit", "Tail and cycle of one orbit, optionally with the closed-form prediction");
  orbit->add_option("--p", orbit_args.p, "Prime modulus")->required();
  orbit->add_option("--seed", orbit_args.seed, "Initial value s0")->required();
  orbit->add_option("--kind", orbit_args.kind, "logistic | dickson_deg2 | logistic_general");
  orbit->add_option("--mu", orbit_args.mu, "Control parameter for logistic_general");
  orbit->add_option("--max-steps", orbit_args.max_steps, "Step budget (default p)");
  orbit->add_flag("--predict", orbit_args.predict, "Compare with the order-based prediction (exit 2 on mismatch)");
  orbit->add_option("--class", orbit_args.seed_class, "Prediction route: auto | iv_set | any");

  std::uint64_t ivset_p = 0;
  auto* ivset = app.add_subcommand("ivset", "Initial-value set D0&(D0-1) or D1&(D0-1)");
  ivset->add_option("--p", ivset_p, "Prime modulus")->required();

  std::uint64_t fibers_p = 0;
  auto* fibers = app.add_subcommand("fibers", "Four hyperbola parameters over each initial value");
  fibers->add_option("--p", fibers_p, "Prime modulus")->required();

  std::uint64_t census_p = 0;
  bool census_brute = false;
  auto* census_cmd = app.add_subcommand("census", "Cycle structure per divisor d of m");
  census_cmd->add_option("--p", census_p, "Prime modulus")->required();
  census_cmd->add_flag("--brute", census_brute, "Cross-check against iterated orbits (exit 2 on mismatch)");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Per-bit-size statistics over primes");
  sweep->add_option("--kind", sweep_args.kind, "maximal | cycles | periods")->required();
  sweep->add_option("--n-min", sweep_args.n_min, "Smallest bit size");
  sweep->add_option("--n-max", sweep_args.n_max, "Largest bit size");
  sweep->add_option("--class", sweep_args.cls, "3mod4 | 1mod4 | both");
  sweep->add_option("--sample", sweep_args.sample, "Primes per (bit size, class) above the exhaustive limit");
  sweep->add_option("--seed", sweep_args.seed, "Sampling seed");
  sweep->add_option("--exhaustive-bits", sweep_args.exhaustive_bits, "Enumerate all primes up to this bit size");
  sweep->add_option("--budget", sweep_args.budget, "Wall-clock budget in seconds (0 = none)");

  LcpArgs lcp_args;
  auto* lcp = app.add_subcommand("lcp", "Linear complexity profile of a logistic sequence");
  lcp->add_option("--p", lcp_args.p, "Prime modulus")->required();
  lcp->add_option("--seed", lcp_args.seed, "Initial value s0 (default: least initial-value element)");
  lcp->add_option("--n-max", lcp_args.n_max, "Largest N (default 2T)");
  lcp->add_flag("--bounds", lcp_args.bounds, "Add bound columns (exit 3 on violation)");

  std::uint64_t safe_limit = 0;
  bool safe_analogous = false;
  auto* safe = app.add_subcommand("safeprimes", "2-safe primes, or the p = 2 p1 - 1 analogue");
  safe->add_option("--limit", safe_limit, "Upper bound")->required();
  safe->add_flag("--analogous", safe_analogous, "p = 2 p1 - 1 with p1 a safe prime");

  std::string command;
  for (const auto& a : args) command += (command.empty() ? "" : " ") + a;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    Output o;
    if (*orbit) {
      o = cmd_orbit(orbit_args);
    } else if (*ivset) {
      o = cmd_ivset(ivset_p);
    } else if (*fibers) {
      o = cmd_fibers(fibers_p);
    } else if (*census_cmd) {
      o = cmd_census(census_p, census_brute);
    } else if (*sweep) {
      o = cmd_sweep(sweep_args);
    } else if (*lcp) {
      o = cmd_lcp(lcp_args);
    } else {
      o = cmd_safeprimes(safe_limit, safe_analogous);
    }
    if (out_path.empty()) {
      render(o, command, format == "json", out);
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << out_path << '\n';
        return kUsageError;
      }
      render(o, command, format == "json", file);
    }
    if (o.code == kMismatch) err << "theory and brute force disagree\n";
    if (o.code == kBoundViolation) err << "linear complexity fell below a lower bound\n";
    return o.code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace logmap::cli
