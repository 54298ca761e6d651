#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gsb/attack.hpp"
#include "gsb/bounds.hpp"
#include "gsb/code_io.hpp"
#include "gsb/constructions.hpp"
#include "gsb/errors.hpp"
#include "gsb/serialize.hpp"
#include "gsb/set_family.hpp"
#include "gsb/verifier.hpp"

namespace gsb::cli {
namespace {

using nlohmann::json;

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string join(const std::vector<std::size_t>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << doc.dump(2) << '\n';
}

CodeFormat parse_code_format(const std::string& s) {
  if (s == "text") return CodeFormat::text;
  if (s == "json") return CodeFormat::json;
  throw InputError("unknown code format '" + s + "'");
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(Rational::parse(x));
  return out;
}

json code_summary(const Code& c) {
  json j{{"q", c.q()}, {"n", c.n()}, {"size", c.size()}};
  if (c.meta().seed) j["seed"] = *c.meta().seed;
  if (!c.meta().construction.empty()) j["construction"] = c.meta().construction;
  return j;
}

void emit_doc(std::ostream& out, const std::string& command, json config, json result) {
  json doc{{"command", command}, {"config", std::move(config)}, {"result", std::move(result)}};
  out << doc.dump(2) << '\n';
}

void print_violation(std::ostream& out, const Violation& v) {
  out << "center: " << v.center.str() << '\n'
      << "indices: " << join(v.indices) << '\n'
      << "distances: " << join(v.distances) << '\n'
      << "threshold: " << v.threshold << (v.mode == DecodingMode::ordinary ? " (each)" : " (total)") << '\n';
}

void print_certificate(std::ostream& out, const Certificate& cert) {
  out << "provenance: " << to_string(cert.provenance) << '\n'
      << "mode: " << to_string(cert.mode) << '\n'
      << "center: " << cert.center.str() << '\n'
      << "codewords: " << join(cert.codewords) << '\n'
      << "distances: " << join(cert.distances) << '\n'
      << "threshold: " << cert.threshold << (cert.mode == DecodingMode::ordinary ? " (each)" : " (total)") << '\n';
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string code, p, mode = "ordinary", format = "text", violation_out;
  std::size_t L = 1;
  unsigned threads = 1;
  std::uint64_t max_subsets = VerifierOptions{}.max_subsets;
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> seed;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Code c = load_code(a.code);
  const RadiusQuery query{Rational::parse(a.p), a.L, parse_mode(a.mode)};
  const std::size_t threshold = violation_threshold(query, c.n());
  VerifierOptions opts;
  opts.threads = a.threads;
  opts.max_subsets = a.max_subsets;

  std::optional<Violation> violation;
  bool sampled = a.samples > 0;
  if (sampled) {
    if (!a.seed) throw InputError("--samples requires --seed");
    violation = sample_violation(c, query, a.samples, *a.seed, opts);
  } else {
    violation = is_list_decodable(c, query, opts).violation;
  }
  if (violation && !replay_violation(c, *violation).ok) throw InternalError("verifier produced a bad violation");

  // An empty sampling run proves nothing, so it is reported as such.
  const std::string verdict = violation ? "violation" : (sampled ? "no_violation_found" : "decodable");
  json config{{"code", a.code}, {"p", query.p.str()}, {"L", a.L}, {"mode", to_string(query.mode)}};
  if (sampled) config["samples"] = a.samples;
  if (a.seed) config["seed"] = *a.seed;
  json result{{"code", code_summary(c)}, {"threshold", threshold}, {"verdict", verdict}};
  if (violation) result["violation"] = to_json(*violation);

  if (a.format == "json") {
    emit_doc(out, "verify", config, result);
  } else {
    out << "code: q=" << c.q() << " n=" << c.n() << " size=" << c.size() << '\n'
        << "query: p=" << query.p << " L=" << a.L << " mode=" << to_string(query.mode) << " threshold=" << threshold
        << '\n'
        << "result: " << verdict << '\n';
    if (violation) print_violation(out, *violation);
  }
  if (violation && !a.violation_out.empty()) {
    json doc = code_to_json(c);
    doc["violation"] = to_json(*violation);
    write_json_file(a.violation_out, doc);
  }
  return violation ? kViolation : kOk;
}

// ---- radius -------------------------------------------------------------

struct RadiusArgs {
  std::string code, format = "text";
  std::size_t L = 1;
  unsigned threads = 1;
  std::uint64_t max_subsets = VerifierOptions{}.max_subsets;
};

int cmd_radius(const RadiusArgs& a, std::ostream& out) {
  const Code c = load_code(a.code);
  VerifierOptions opts;
  opts.threads = a.threads;
  opts.max_subsets = a.max_subsets;
  const auto r = exact_radius(c, a.L, opts);
  const Rational frac(static_cast<std::int64_t>(r.radius), static_cast<std::int64_t>(c.n()));
  if (a.format == "json") {
    json result{{"code", code_summary(c)}, {"radius", r.radius}, {"radius_over_n", frac.str()}};
    if (r.witness) result["witness"] = to_json(*r.witness);
    emit_doc(out, "radius", {{"code", a.code}, {"L", a.L}}, result);
  } else {
    out << "radius: " << r.radius << '\n' << "radius/n: " << frac << '\n';
    if (r.witness) {
      out << "witness at radius " << r.radius + 1 << ":\n";
      print_violation(out, *r.witness);
    }
  }
  return kOk;
}

// ---- construct ----------------------------------------------------------

struct ConstructArgs {
  std::string kind, code, R = "1/2", eps = "0", alpha, p, mode = "ordinary", out, code_format = "text",
                                                              format = "text";
  std::uint32_t q = 2;
  std::size_t n = 0, L = 1;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::uint64_t max_subsets = VerifierOptions{}.max_subsets;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  VerifierOptions vopts;
  vopts.threads = a.threads;
  vopts.max_subsets = a.max_subsets;
  json config{{"kind", a.kind}};
  json result;
  std::optional<Code> built;

  if (a.kind == "random" || a.kind == "expurgated") {
    if (!a.seed) throw InputError("--seed is required for randomized constructions");
    if (a.n == 0) throw InputError("--n is required");
    RandomCodeSpec spec{a.q, a.n, Rational::parse(a.R), Rational::parse(a.eps), a.L, *a.seed};
    config.update({{"q", a.q}, {"n", a.n}, {"R", spec.R.str()}, {"seed", *a.seed}});
    Code c = random_code(spec);
    result["drawn"] = c.size();
    if (a.kind == "expurgated") {
      const RadiusQuery query{target_list_radius(a.L, spec.R, spec.eps), a.L, parse_mode(a.mode)};
      config.update({{"eps", spec.eps.str()}, {"L", a.L}, {"mode", to_string(query.mode)}, {"p", query.p.str()}});
      auto ex = expurgate_violations(c, query, vopts);
      result["removed"] = ex.removed.size();
      c = ex.code.with_meta({*a.seed, "expurgated"});
    }
    built = std::move(c);
  } else if (a.kind == "greedy") {
    if (a.code.empty() || a.alpha.empty()) throw InputError("greedy needs --code and --alpha");
    const Code src = load_code(a.code);
    const Rational alpha = Rational::parse(a.alpha);
    config.update({{"code", a.code}, {"alpha", alpha.str()}});
    result["input_size"] = src.size();
    built = greedy_distance_subcode(src, alpha);
  } else if (a.kind == "avg-expurgate") {
    if (a.code.empty() || a.p.empty()) throw InputError("avg-expurgate needs --code and --p");
    const Code src = load_code(a.code);
    const Rational p = Rational::parse(a.p);
    config.update({{"code", a.code}, {"p", p.str()}});
    // The size guarantee only applies when the input is known to be
    // (p, 2)-average-radius decodable; check it if that is affordable.
    bool verified = false;
    try {
      verified = is_list_decodable(src, {p, 2, DecodingMode::average_radius}, vopts).decodable;
    } catch (const ResourceError&) {
    }
    auto ex = avg_radius_expurgate(src, p, verified);
    result.update({{"input_size", src.size()}, {"precondition_verified", verified}, {"removed", ex.removed.size()}});
    built = std::move(ex.code);
  } else {
    throw InputError("unknown --kind '" + a.kind + "'");
  }

  const Code& c = *built;
  result["code"] = code_summary(c);
  result["min_distance"] = min_distance(c) ? json(*min_distance(c)) : json(nullptr);
  if (!a.out.empty()) {
    save_code(c, a.out, parse_code_format(a.code_format));
    config["out"] = a.out;
  }
  if (a.format == "json") {
    if (a.out.empty()) result["code_file"] = code_to_json(c);
    emit_doc(out, "construct", config, result);
  } else if (a.out.empty()) {
    write_code_text(out, c);
  } else {
    out << "wrote " << c.size() << " words (q=" << c.q() << " n=" << c.n() << ") to " << a.out << '\n';
  }
  return kOk;
}

// ---- family -------------------------------------------------------------

struct FamilyArgs {
  std::size_t m = 0, aF = 0, aU = 0, cap = FamilyOptions{}.cap, target = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_tuples = kDefaultMaxTuples;
  std::string format = "text", out;
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
  FamilyOptions opts;
  opts.cap = a.cap;
  opts.min_target = std::min(opts.min_target, a.cap);
  opts.target = a.target;
  opts.max_tuples = a.max_tuples;
  auto f = build_set_family(a.m, a.aF, a.aU, a.seed, opts);
  if (!f.verified) verify_set_family(f, a.max_tuples);
  if (!a.out.empty()) {
    std::ofstream file(a.out);
    if (!file) throw InputError("cannot write '" + a.out + "'");
    write_family_text(file, f);
  }
  if (a.format == "json") {
    json config{{"m", a.m}, {"a_F", a.aF}, {"a_union", a.aU}, {"seed", a.seed}, {"cap", a.cap}, {"target", a.target}};
    emit_doc(out, "family", config, {{"family", to_json(f)}});
  } else if (a.out.empty()) {
    out << "# seed: " << a.seed << '\n';
    write_family_text(out, f);
  } else {
    out << "wrote " << f.sets.size() << " sets (W=" << f.union_arity << ") to " << a.out << '\n';
  }
  return kOk;
}

// ---- attack -------------------------------------------------------------

struct AttackArgs {
  std::string code, mode = "general", R, eps, format = "text", cert_out;
  std::size_t L = 2;
  std::optional<std::uint64_t> seed;
  std::size_t family_cap = AttackOptions{}.family_cap;
  std::uint64_t family_limit = AttackOptions{}.warmup_family_limit;
};

void print_report(std::ostream& out, const AttackReport& r) {
  out << "attack: " << r.attack << '\n' << "outcome: " << to_string(r.outcome);
  if (r.outcome == AttackOutcome::stage_failed) out << " at " << to_string(r.failed_stage);
  out << '\n';
  if (r.subcode_applied) out << "subcode: " << r.subcode_size << " words\n";
  out << "family: " << r.family_size << (r.family_complete ? " sets" : " sets (sampled)") << ", W=" << r.union_arity
      << '\n'
      << "popular codeword: " << r.popular << " with " << r.best_fc << " partners (need " << r.need << ")\n";
  if (!r.class_sizes.empty()) out << "largest I_0 class: " << r.max_class << " of " << r.class_sizes.size() << '\n';
  if (r.implied_q_floor) out << "implied q floor: " << fixed(*r.implied_q_floor, 4) << '\n';
  for (const auto& [name, v] : r.figures) out << name << ": " << v << '\n';
  if (r.witness)
    out << "distance witness: words " << r.witness->first << ", " << r.witness->second << " at distance "
        << r.witness->distance << '\n';
  if (r.certificate) print_certificate(out, *r.certificate);
}

int cmd_attack(const AttackArgs& a, std::ostream& out) {
  const Code c = load_code(a.code);
  json config{{"code", a.code}, {"mode", a.mode}};
  AttackOptions opts;
  opts.family_cap = a.family_cap;
  opts.warmup_family_limit = a.family_limit;
  if (a.mode != "singleton") {
    if (!a.seed) throw InputError("--seed is required for this attack");
    opts.seed = *a.seed;
    config["seed"] = *a.seed;
    config["family_cap"] = a.family_cap;
  }
  auto need_rates = [&] {
    if (a.R.empty() || a.eps.empty()) throw InputError("--R and --eps are required for this attack");
    config["R"] = Rational::parse(a.R).str();
    config["eps"] = Rational::parse(a.eps).str();
  };

  AttackReport report;
  if (a.mode == "general") {
    need_rates();
    config["L"] = a.L;
    report = run_general_attack(c, a.L, Rational::parse(a.R), Rational::parse(a.eps), opts);
  } else if (a.mode == "warmup1") {
    report = run_warmup1(c, opts);
  } else if (a.mode == "warmup2") {
    need_rates();
    report = run_warmup2(c, Rational::parse(a.R), Rational::parse(a.eps), opts);
  } else if (a.mode == "singleton") {
    config["L"] = a.L;
    auto w = singleton_witness(c, a.L);
    report.attack = "singleton";
    report.outcome = AttackOutcome::certificate;
    report.certificate = w.certificate;
    report.figures.emplace_back("shared_prefix", static_cast<std::int64_t>(w.prefix));
  } else {
    throw InputError("unknown attack mode '" + a.mode + "'");
  }

  if (report.certificate) {
    const auto check = verify_certificate(c, *report.certificate);
    if (!check.ok) throw InternalError("attack produced an invalid certificate: " + check.reason);
  }
  if (a.format == "json")
    emit_doc(out, "attack", config, to_json(report));
  else
    print_report(out, report);
  if (report.certificate && !a.cert_out.empty()) {
    json doc = code_to_json(c);
    doc["certificate"] = to_json(*report.certificate);
    write_json_file(a.cert_out, doc);
  }
  return report.certificate ? kOk : kStageFailed;
}

// ---- bounds -------------------------------------------------------------

struct BoundsArgs {
  std::vector<std::size_t> L;
  std::vector<std::string> R, eps;
  std::optional<std::uint64_t> q;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  const auto Rs = parse_rationals(a.R), es = parse_rationals(a.eps);
  if (!a.q) {
    std::vector<bounds::GridPoint> grid;
    for (auto L : a.L)
      for (const auto& R : Rs)
        for (const auto& e : es) grid.push_back({L, R.to_double(), e.to_double()});
    bounds::write_bound_csv(out, bounds::theorem_bound_table(grid));
    return kOk;
  }
  out << "L,R,eps,q,p,entropy,margin,verdict\n";
  for (auto L : a.L)
    for (const auto& R : Rs)
      for (const auto& e : es) {
        const auto rep = bounds::capacity_check({L, R.to_double(), e.to_double(), *a.q, 1});
        out << L << ',' << fixed(R.to_double()) << ',' << fixed(e.to_double()) << ',' << *a.q << ',' << fixed(rep.p, 9)
            << ',' << fixed(rep.entropy, 9) << ',' << fixed(rep.margin, 9) << ','
            << (rep.verdict == bounds::CapacityVerdict::consistent ? "consistent" : "violates_capacity") << '\n';
      }
  return kOk;
}

// ---- sweep --------------------------------------------------------------

struct SweepArgs {
  std::vector<std::uint32_t> q{2, 16};
  std::size_t n = 8, L = 2, seeds = 5, best_of = 3;
  std::string R = "1/4", eps = "3/16";
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t max_subsets = VerifierOptions{}.max_subsets;
};

std::string attack_outcome(const Code& c, std::size_t L, const Rational& R, const Rational& eps, std::uint64_t seed) {
  try {
    const auto rep = run_general_attack(c, L, R, eps, AttackOptions{seed});
    if (rep.certificate) return "certificate";
    return "stage_failed:" + std::string(to_string(rep.failed_stage));
  } catch (const ParameterError&) {
    return "parameter_error";
  } catch (const InputError&) {
    return "not_applicable";
  }
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const Rational R = Rational::parse(a.R), eps = Rational::parse(a.eps);
  const Rational p = target_list_radius(a.L, R, eps);
  const auto pn = p.floor_times(static_cast<std::int64_t>(a.n));
  VerifierOptions vopts;
  vopts.threads = a.threads;
  vopts.max_subsets = a.max_subsets;

  out << "q,n,L,R,seed,t_star_over_n,target_pn,attack,code_size\n";
  std::map<std::uint32_t, std::pair<double, std::size_t>> means;
  for (auto q : a.q) {
    for (std::size_t s = 0; s < a.seeds; ++s) {
      const std::uint64_t row_seed = a.seed + s;
      // Best of k: the largest surviving code, then the larger exact radius.
      std::optional<Code> best;
      std::size_t best_t = 0;
      for (std::size_t k = 0; k < std::max<std::size_t>(a.best_of, 1); ++k) {
        const std::uint64_t draw_seed = row_seed * 1000 + k;
        const Code c = random_code({q, a.n, R, eps, a.L, draw_seed});
        const auto ex = expurgate_violations(c, {p, a.L, DecodingMode::ordinary}, vopts);
        const auto t = exact_radius(ex.code, a.L, vopts).radius;
        if (!best || ex.code.size() > best->size() || (ex.code.size() == best->size() && t > best_t)) {
          best = ex.code;
          best_t = t;
        }
      }
      const double frac = static_cast<double>(best_t) / static_cast<double>(a.n);
      means[q].first += frac;
      ++means[q].second;
      out << q << ',' << a.n << ',' << a.L << ',' << R.str() << ',' << row_seed << ',' << fixed(frac) << ',' << pn
          << ',' << attack_outcome(*best, a.L, R, eps, row_seed) << ',' << best->size() << '\n';
    }
  }
  // The trend is informational only.
  err << "mean t*/n by q:";
  for (const auto& [q, m] : means) err << ' ' << q << '=' << fixed(m.first / static_cast<double>(m.second), 4);
  err << " (target p=" << p << ")\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"List-decoding workbench: verification, constructions, set families and attacks."};
  app.name("gsbench");
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json"});

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Decide (p, L)-list-decodability exactly, or probe by sampling");
  verify->add_option("--code", va.code, "Code file (text or json)")->required();
  verify->add_option("--p", va.p, "Radius as a fraction, e.g. 2/3")->required();
  verify->add_option("--L", va.L, "List size")->check(CLI::PositiveNumber);
  verify->add_option("--mode", va.mode)->check(CLI::IsMember({"ordinary", "average"}));
  verify->add_option("--threads", va.threads);
  verify->add_option("--max-subsets", va.max_subsets, "Refuse to enumerate more subsets than this");
  verify->add_option("--samples", va.samples, "Random-subset probe instead of exhaustive search");
  verify->add_option("--seed", va.seed);
  verify->add_option("--format", va.format)->check(formats);
  verify->add_option("--violation-out", va.violation_out, "Write the code plus violation as json");

  RadiusArgs ra;
  auto* radius = app.add_subcommand("radius", "Largest t with the code (t/n, L)-list-decodable");
  radius->add_option("--code", ra.code)->required();
  radius->add_option("--L", ra.L)->check(CLI::PositiveNumber);
  radius->add_option("--threads", ra.threads);
  radius->add_option("--max-subsets", ra.max_subsets);
  radius->add_option("--format", ra.format)->check(formats);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a random, expurgated or greedy code");
  construct->add_option("--kind", ca.kind)
      ->required()
      ->check(CLI::IsMember({"random", "expurgated", "greedy", "avg-expurgate"}));
  construct->add_option("--q", ca.q);
  construct->add_option("--n", ca.n);
  construct->add_option("--R", ca.R);
  construct->add_option("--eps", ca.eps);
  construct->add_option("--L", ca.L)->check(CLI::PositiveNumber);
  construct->add_option("--mode", ca.mode)->check(CLI::IsMember({"ordinary", "average"}));
  construct->add_option("--seed", ca.seed);
  construct->add_option("--code", ca.code, "Input code for greedy and avg-expurgate");
  construct->add_option("--alpha", ca.alpha, "Relative minimum distance for greedy");
  construct->add_option("--p", ca.p, "Radius for avg-expurgate");
  construct->add_option("--threads", ca.threads);
  construct->add_option("--max-subsets", ca.max_subsets);
  construct->add_option("--out", ca.out);
  construct->add_option("--code-format", ca.code_format)->check(formats);
  construct->add_option("--format", ca.format)->check(formats);

  FamilyArgs fa;
  auto* family = app.add_subcommand("family", "Sample and verify a set family");
  family->add_option("--m", fa.m)->required();
  family->add_option("--aF", fa.aF, "Member size")->required();
  family->add_option("--aU", fa.aU, "Union floor")->required();
  family->add_option("--seed", fa.seed)->required();
  family->add_option("--cap", fa.cap)->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
  family->add_option("--target", fa.target, "Number of sets to aim for (0 = automatic)");
  family->add_option("--max-tuples", fa.max_tuples);
  family->add_option("--format", fa.format)->check(formats);
  family->add_option("--out", fa.out);

  AttackArgs aa;
  auto* attack = app.add_subcommand("attack", "Search for a bad list-decoding configuration");
  attack->add_option("--code", aa.code)->required();
  attack->add_option("--mode", aa.mode)->check(CLI::IsMember({"general", "warmup1", "warmup2", "singleton"}));
  attack->add_option("--L", aa.L)->check(CLI::PositiveNumber);
  attack->add_option("--R", aa.R);
  attack->add_option("--eps", aa.eps);
  attack->add_option("--seed", aa.seed);
  attack->add_option("--family-cap", aa.family_cap)->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
  attack->add_option("--family-limit", aa.family_limit, "Subset cap for the warmup families");
  attack->add_option("--format", aa.format)->check(formats);
  attack->add_option("--cert-out", aa.cert_out, "Write the code plus certificate as json");

  BoundsArgs ba;
  auto* bnds = app.add_subcommand(
      "bounds",
      "CSV over the L x R x eps grid. Columns L,R,eps,p,inv_eps,min_L_inv_eps; "
      "with --q: L,R,eps,q,p,entropy,margin,verdict");
  bnds->add_option("--L", ba.L)->required()->delimiter(',');
  bnds->add_option("--R", ba.R)->required()->delimiter(',');
  bnds->add_option("--eps", ba.eps)->required()->delimiter(',');
  bnds->add_option("--q", ba.q, "Alphabet size for the capacity check");

  SweepArgs sa;
  auto* sweep = app.add_subcommand(
      "sweep", "Exact radius of expurgated random codes across q. Columns q,n,L,R,seed,t_star_over_n,target_pn,attack,code_size");
  sweep->add_option("--q", sa.q)->delimiter(',');
  sweep->add_option("--n", sa.n);
  sweep->add_option("--L", sa.L)->check(CLI::PositiveNumber);
  sweep->add_option("--R", sa.R);
  sweep->add_option("--eps", sa.eps);
  sweep->add_option("--seeds", sa.seeds, "Rows per q");
  sweep->add_option("--best-of", sa.best_of, "Draws per row");
  sweep->add_option("--seed", sa.seed, "First row seed")->required();
  sweep->add_option("--threads", sa.threads);
  sweep->add_option("--max-subsets", sa.max_subsets);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    if (verify->parsed()) return cmd_verify(va, out);
    if (radius->parsed()) return cmd_radius(ra, out);
    if (construct->parsed()) return cmd_construct(ca, out);
    if (family->parsed()) return cmd_family(fa, out);
    if (attack->parsed()) return cmd_attack(aa, out);
    if (bnds->parsed()) return cmd_bounds(ba, out);
    if (sweep->parsed()) return cmd_sweep(sa, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace gsb::cli
