// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "cli.hpp"
#include "fixtures.hpp"
#include "gsb/attack.hpp"
#include "gsb/code_io.hpp"
#include "gsb/constructions.hpp"
#include "gsb/errors.hpp"
#include "gsb/serialize.hpp"
#include "gsb/set_family.hpp"
#include "gsb/verifier.hpp"
#include "oracles.hpp"

using namespace gsb;
namespace fs = std::filesystem;

namespace {

constexpr double kChainTolerance = 1e-12;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << s << "s";
  return os.str();
}

unsigned max_threads() { return std::max(2u, std::thread::hardware_concurrency()); }

// 1. Exhaustive verifier against a scan of every center.
Outcome verifier_equivalence() {
  Rng rng(20240601);
  std::size_t agree = 0, total = 0, bad = 0;
  for (int i = 0; i < 600; ++i) {
    const std::uint32_t q = 2 + static_cast<std::uint32_t>(rng.below(2));
    const std::size_t n = 1 + rng.below(6);
    const std::size_t space = static_cast<std::size_t>(std::pow(q, n));
    const std::size_t size = 2 + rng.below(std::min<std::size_t>(8, space) - 1);
    const std::size_t L = 1 + rng.below(2);
    const Code c = oracle::random_code(rng, q, n, size);
    // p = a / ((L+1) n) keeps both thresholds on exact integers.
    const auto a = static_cast<std::int64_t>(rng.below((L + 1) * n + 1));
    const Rational p(a, static_cast<std::int64_t>((L + 1) * n));
    for (bool average : {false, true}) {
      const std::size_t threshold = average ? static_cast<std::size_t>(a) : static_cast<std::size_t>(a) / (L + 1);
      const auto mode = average ? DecodingMode::average_radius : DecodingMode::ordinary;
      const auto got = is_list_decodable(c, {p, L, mode});
      const bool want = oracle::brute_decodable(c, L, threshold, average);
      bool ok = got.decodable == want;
      if (got.violation) ok = ok && replay_violation(c, *got.violation).ok;
      ++total;
      if (ok) ++agree;
      else ++bad;
    }
  }
  return {bad == 0 && total >= 1000, std::to_string(agree) + "/" + std::to_string(total) + " agree"};
}

// 2. Plurality center against every center.
Outcome avg_center_optimality() {
  Rng rng(77);
  std::size_t mismatches = 0, total = 0;
  for (int i = 0; i < 600; ++i) {
    const std::uint32_t q = 2 + static_cast<std::uint32_t>(rng.below(2));
    const std::size_t n = 1 + rng.below(5);
    const std::size_t k = 2 + rng.below(3);
    std::vector<Word> words;
    for (std::size_t j = 0; j < k; ++j) words.emplace_back(fixture::random_symbols(rng, q, n));
    const auto got = avg_center(words);
    std::size_t recomputed = 0;
    for (const auto& w : words) recomputed += oracle::dist(got.center, w);
    ++total;
    if (got.value != oracle::brute_min_total(q, words) || recomputed != got.value) ++mismatches;
  }
  return {mismatches == 0 && total >= 500, std::to_string(mismatches) + " mismatches in " + std::to_string(total)};
}

// 3 and 4 share the expurgated codes.
struct DeskCodes {
  std::vector<Code> codes;
  std::size_t decodable = 0, big_enough = 0, min_size = SIZE_MAX;
  double seconds = 0;
};

const Rational kR3(1, 4), kEps3(3, 16);
constexpr std::size_t kL3 = 2;

DeskCodes& desk_codes() {
  static DeskCodes d = [] {
    DeskCodes out;
    const auto t0 = std::chrono::steady_clock::now();
    const Rational p = target_list_radius(kL3, kR3, kEps3);
    VerifierOptions opts;
    opts.threads = max_threads();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Code c = random_code({16, 8, kR3, kEps3, kL3, seed});
      auto ex = expurgate_violations(c, {p, kL3, DecodingMode::ordinary}, opts);
      const bool dec = is_list_decodable(ex.code, {p, kL3, DecodingMode::ordinary}, opts).decodable;
      out.decodable += dec;
      out.big_enough += 2 * ex.code.size() >= c.size();
      out.min_size = std::min(out.min_size, ex.code.size());
      if (dec) out.codes.push_back(std::move(ex.code));
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }();
  return d;
}

Outcome expurgated_random_codes() {
  const auto& d = desk_codes();
  const Rational p = target_list_radius(kL3, kR3, kEps3);
  std::ostringstream s;
  s << "p=" << p << ", decodable " << d.decodable << "/20, |C'|>=128 on " << d.big_enough << "/20 (min "
    << d.min_size << "), " << seconds(d.seconds);
  return {d.decodable == 20 && d.big_enough == 20, s.str()};
}

Outcome neighborhood_bound() {
  const auto& d = desk_codes();
  const Rational p = target_list_radius(kL3, kR3, kEps3);
  std::size_t holds = 0, worst = 0, bound = 0;
  for (const auto& c : d.codes) {
    const auto r = neighborhood_bound_check(c, p, kL3);
    holds += r.holds;
    worst = std::max(worst, r.max_count);
    bound = r.bound;
  }
  std::ostringstream s;
  s << holds << "/" << d.codes.size() << " codes within bound " << bound << " (worst count " << worst << ")";
  return {!d.codes.empty() && holds == d.codes.size(), s.str()};
}

// 5. Families are re-checked here by brute force over every W-tuple.
Outcome set_families() {
  std::size_t good = 0, smallest = SIZE_MAX;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto f = build_set_family(40, 12, 24, seed);
    smallest = std::min(smallest, f.sets.size());
    const std::size_t W = f.union_arity, M = f.sets.size();
    bool ok = f.verified && M >= 8 && W == union_arity_for(0.3, 0.6);
    std::vector<std::size_t> idx(W);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
      if (!ok) return;
      if (depth == W) {
        std::vector<bool> cover(40, false);
        for (auto i : idx)
          for (auto e : f.sets[i]) cover[e] = true;
        if (static_cast<std::size_t>(std::count(cover.begin(), cover.end(), true)) < 24) ok = false;
        return;
      }
      for (std::size_t i = from; i < M; ++i) {
        idx[depth] = i;
        rec(depth + 1, i + 1);
      }
    };
    rec(0, 0);
    for (const auto& s : f.sets) ok = ok && s.size() == 12;
    good += ok;
  }
  return {good == 10, std::to_string(good) + "/10 seeds, smallest family " + std::to_string(smallest)};
}

// 6. Certificates from all four attacks, independently re-checked and mutated.
bool confirms_on_subset(const Code& c, const Certificate& cert) {
  std::vector<std::size_t> pool = cert.codewords;
  std::sort(pool.begin(), pool.end());
  auto v = first_violation(c, pool, cert.codewords.size() - 1, cert.threshold, cert.mode, {}, {});
  return v && replay_violation(c, *v).ok;
}

bool mutations_rejected(const Code& c, const Certificate& cert) {
  bool all = true;
  // Move the center away from codewords[0] where they agree.
  const Word& w0 = c[cert.codewords[0]];
  for (std::size_t i = 0; i < c.n(); ++i) {
    if (cert.center[i] != w0[i]) continue;
    auto m = cert;
    m.center[i] = static_cast<Symbol>((w0[i] + 1) % c.q());
    all = all && !verify_certificate(c, m).ok;
    break;
  }
  auto dup = cert;
  dup.codewords[1] = dup.codewords[0];
  all = all && !verify_certificate(c, dup).ok;
  // The nominal threshold may have slack, so drop it just below what the
  // codewords actually achieve.
  std::size_t achieved = 0;
  for (auto d : cert.distances)
    achieved = cert.mode == DecodingMode::ordinary ? std::max(achieved, d) : achieved + d;
  if (achieved > 0) {
    auto low = cert;
    low.threshold = achieved - 1;
    all = all && !verify_certificate(c, low).ok;
  }
  return all;
}

Outcome certificate_soundness() {
  std::size_t emitted = 0, verified = 0, confirmed = 0, exhaustive = 0, mutated = 0;
  auto take = [&](const Code& c, const Certificate& cert, bool small) {
    ++emitted;
    verified += verify_certificate(c, cert).ok;
    confirmed += confirms_on_subset(c, cert);
    if (small) exhaustive += !oracle::brute_decodable(c, cert.codewords.size() - 1, cert.threshold,
                                                      cert.mode == DecodingMode::average_radius);
    mutated += mutations_rejected(c, cert);
  };
  std::size_t small_total = 0;

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto plant = fixture::general_plant(seed);
    auto r = run_general_attack(plant.code, 2, Rational(1, 2), Rational(1, 30), AttackOptions{seed});
    if (r.certificate) take(plant.code, *r.certificate, false);
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto plant = fixture::warmup2_plant(seed);
    auto r = run_warmup2(plant.code, Rational(1, 2), Rational(1, 16), AttackOptions{seed});
    if (r.certificate) take(plant.code, *r.certificate, false);
  }
  Rng rng(31);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Code c = oracle::random_code(rng, 2, 8, 16);
    auto r = run_warmup1(c, AttackOptions{seed});
    if (r.certificate) {
      take(c, *r.certificate, true);
      ++small_total;
    }
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    const Code c = oracle::random_code(rng, 3, n, 10);
    auto w = singleton_witness(c, 2);
    take(c, w.certificate, true);
    ++small_total;
  }
  std::ostringstream s;
  s << emitted << " certificates: " << verified << " verify, " << confirmed << " confirmed on their codewords, "
    << exhaustive << "/" << small_total << " confirmed by center scan, " << mutated << " mutation sets rejected";
  const bool pass = emitted >= 20 && verified == emitted && confirmed == emitted && exhaustive == small_total &&
                    mutated == emitted;
  return {pass, s.str()};
}

// 7. Parameter identities on a fixed grid.
Outcome parameter_identities() {
  std::size_t checked = 0, good = 0;
  const std::vector<Rational> rates{Rational(1, 2), Rational(3, 5), Rational(2, 3)};
  const std::vector<Rational> epss{Rational(1, 100), Rational(1, 50), Rational(1, 30)};
  for (std::size_t n = 48; n <= 192; n += 12)
    for (std::size_t L : {2, 3})
      for (const auto& R : rates)
        for (const auto& e : epss) {
          AttackParams ap;
          try {
            ap = derive_params(n, L, R, e);
          } catch (const ParameterError&) {
            continue;
          }
          ++checked;
          const auto N = static_cast<std::int64_t>(n);
          const Rational lp1(static_cast<std::int64_t>(L + 1));
          bool ok = ap.p == Rational(static_cast<std::int64_t>(L)) / lp1 * (Rational(1) - ap.R - ap.eps);
          ok = ok && (ap.p * Rational(N)).is_integer() && (ap.R * Rational(N)).is_integer() &&
               (ap.eps * Rational(N)).is_integer();
          ok = ok && static_cast<std::int64_t>(ap.pn) == (ap.p * Rational(N)).floor();
          ok = ok && ap.d0 + L * ap.d1 == ap.pn;
          ok = ok && n - ap.d0 - ap.d1 - ap.a_F <= ap.pn;
          ok = ok && static_cast<std::int64_t>(ap.d0) <= (Rational(4) * ap.eps * Rational(N)).floor();
          ok = ok && ap.a_F + 1 == static_cast<std::size_t>((ap.R * Rational(N)).floor());
          // Containment chain, recomputed from scratch.
          const double m = static_cast<double>(n - ap.pn);
          const double alpha = ap.a_F / m, beta = ap.a_union / m;
          const double Rd = ap.R.to_double(), Ld = static_cast<double>(L);
          const double floor_ = (Ld + 1) * Rd / (1 + (Ld + 1) * Rd);
          const double ceiling = 1 - std::pow((1 - Rd) / 4, Ld) / (4 * Ld);
          ok = ok && alpha > 0 && alpha + kChainTolerance >= floor_ && alpha < beta &&
               beta <= ceiling + kChainTolerance && beta < 1;
          ok = ok && ap.chain_holds;
          good += ok;
        }
  return {checked >= 50 && good == checked, std::to_string(good) + "/" + std::to_string(checked) + " grid points"};
}

// 8. Full space witnesses.
Outcome singleton_full_space() {
  std::size_t cases = 0, good = 0;
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t L : {1, 2}) {
      std::vector<Word> all;
      oracle::for_each_word(2, n, [&](const Word& w) { all.push_back(w); });
      if (all.size() <= L) continue;
      const Code c(2, n, all);
      ++cases;
      const auto w = singleton_witness(c, L);
      const auto& cert = w.certificate;
      const std::size_t r = n - w.prefix;
      const std::size_t allowed = (L * r + L) / (L + 1) + 1;  // ceil(L r / (L+1)) + 1
      std::size_t worst = 0;
      for (std::size_t i = 0; i < cert.codewords.size(); ++i)
        worst = std::max(worst, oracle::dist(cert.center, c[cert.codewords[i]]));
      Violation v{cert.mode, cert.center, cert.codewords, cert.distances, cert.threshold};
      std::sort(v.indices.begin(), v.indices.end());
      v.distances.clear();
      for (auto i : v.indices) v.distances.push_back(oracle::dist(cert.center, c[i]));
      const bool ok = worst <= allowed && verify_certificate(c, cert).ok && replay_violation(c, v).ok &&
                      cert.codewords.size() == L + 1;
      good += ok;
    }
  return {good == cases, std::to_string(good) + "/" + std::to_string(cases) + " (n, L) cases"};
}

// 9. Planted pattern recovered with the exact total.
Outcome warmup2_plants() {
  const std::size_t n = 48;
  const Rational R(1, 2), eps(1, 16);
  const auto expected = static_cast<std::size_t>(
      (Rational(4) * eps * Rational(48) + Rational(2) * (Rational(1) - R - Rational(3) * eps) * Rational(48)).floor());
  std::size_t good = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto plant = fixture::warmup2_plant(seed);
    auto r = run_warmup2(plant.code, R, eps, AttackOptions{seed});
    if (!r.certificate) continue;
    const auto& cert = *r.certificate;
    std::size_t total = 0;
    for (auto i : cert.codewords) total += oracle::dist(cert.center, plant.code[i]);
    const bool ok = cert.mode == DecodingMode::average_radius && cert.threshold == expected && total <= expected &&
                    std::find(cert.codewords.begin(), cert.codewords.end(), plant.center_word) !=
                        cert.codewords.end() &&
                    verify_certificate(plant.code, cert).ok && plant.code.n() == n;
    good += ok;
  }
  return {good == 10, std::to_string(good) + "/10 seeds, total " + std::to_string(expected)};
}

// 10. Three runs of each randomized pipeline, single-threaded and at full width.
std::string cli_out(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int s = cli::run(args, out, err);
  return std::to_string(s) + "\n" + out.str();
}

Outcome determinism() {
  const auto dir = fs::temp_directory_path() / "gsb_acceptance_determinism";
  fs::create_directories(dir);
  const auto plant_file = (dir / "plant.txt").string();
  save_code(fixture::general_plant(5).code, plant_file);
  const std::string threads = std::to_string(max_threads());

  std::vector<std::pair<std::string, std::function<std::string(unsigned)>>> pipelines{
      {"random_code",
       [](unsigned) { return code_to_json(random_code({16, 6, Rational(1, 3), Rational(0), 2, 11})).dump(); }},
      {"expurgation",
       [](unsigned t) {
         VerifierOptions o;
         o.threads = t;
         auto c = random_code({16, 8, kR3, kEps3, kL3, 3});
         auto ex = expurgate_violations(c, {target_list_radius(kL3, kR3, kEps3), kL3, DecodingMode::ordinary}, o);
         return code_to_json(ex.code).dump();
       }},
      {"sampling",
       [](unsigned t) {
         VerifierOptions o;
         o.threads = t;
         auto c = random_code({4, 6, Rational(1, 2), Rational(0), 2, 4});
         auto v = sample_violation(c, {Rational(1, 2), 2, DecodingMode::ordinary}, 2000, 9, o);
         return v ? to_json(*v).dump() : std::string("none");
       }},
      {"set_family", [](unsigned) { return to_json(build_set_family(40, 12, 24, 6)).dump(); }},
      {"warmup2_family",
       [](unsigned) {
         return to_json(pairwise_family_warmup2(48, 12, 21, 27, 2, PairwiseFamilyOptions{})).dump();
       }},
      {"general_attack",
       [](unsigned) {
         auto plant = fixture::general_plant(5);
         return to_json(run_general_attack(plant.code, 2, Rational(1, 2), Rational(1, 30), AttackOptions{5})).dump();
       }},
      {"cli_construct",
       [&](unsigned t) {
         return cli_out({"construct", "--kind", "expurgated", "--q", "16", "--n", "8", "--R", "1/4", "--eps", "3/16",
                         "--L", "2", "--seed", "8", "--threads", std::to_string(t), "--format", "json"});
       }},
      {"cli_family",
       [](unsigned) { return cli_out({"family", "--m", "40", "--aF", "12", "--aU", "24", "--seed", "2"}); }},
      {"cli_attack",
       [&](unsigned) {
         return cli_out({"attack", "--code", plant_file, "--mode", "general", "--L", "2", "--R", "1/2", "--eps",
                         "1/30", "--seed", "5", "--format", "json"});
       }},
      {"cli_sweep",
       [&](unsigned t) {
         return cli_out({"sweep", "--q", "2,16", "--seeds", "2", "--seed", "1", "--threads", std::to_string(t)});
       }},
  };

  std::size_t stable = 0;
  std::string broken;
  for (const auto& [name, run] : pipelines) {
    const std::string ref = run(1);
    bool same = true;
    for (int i = 0; i < 3; ++i) same = same && run(1) == ref && run(max_threads()) == ref;
    if (same) ++stable;
    else broken += " " + name;
  }
  fs::remove_all(dir);
  std::string detail = std::to_string(stable) + "/" + std::to_string(pipelines.size()) +
                       " pipelines byte-identical over 3 runs at 1 and " + threads + " threads";
  if (!broken.empty()) detail += "; differing:" + broken;
  return {stable == pipelines.size(), detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"verifier matches exhaustive center scan", verifier_equivalence},
      {"plurality center minimizes total distance", avg_center_optimality},
      {"expurgated random codes are decodable and keep half", expurgated_random_codes},
      {"neighborhood count bound on certified codes", neighborhood_bound},
      {"sampled set families pass exhaustive union check", set_families},
      {"attack certificates verify and resist mutation", certificate_soundness},
      {"attack parameter identities and containment chain", parameter_identities},
      {"shared-prefix witness on the full binary space", singleton_full_space},
      {"planted pair recovered with exact total distance", warmup2_plants},
      {"seeded pipelines are byte-identical", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- "
              << o.detail << " [" << seconds(secs) << "]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
