#include "gsb/set_family.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "bitset.hpp"
#include "gsb/errors.hpp"
#include "gsb/rng.hpp"

namespace gsb {
namespace {

using detail::Bitset;

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

// C(n, k), saturating at 2^64 - 1.
std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(c);
}

// Depth-first search for a tuple of `arity` members (indices increasing, all
// from `start` on) whose union together with `partial` stays below `floor`.
// Subtrees whose partial union already reaches the floor are skipped.
struct UnionSearch {
  const std::vector<Bitset>& bits;
  std::size_t floor;
  std::uint64_t visited = 0;
  std::vector<std::size_t> path;

  bool find_small(const Bitset& partial, std::size_t start, std::size_t remaining) {
    ++visited;
    if (partial.count() >= floor) return false;
    if (remaining == 0) return true;
    for (std::size_t i = start; i + remaining <= bits.size(); ++i) {
      path.push_back(i);
      if (find_small(partial | bits[i], i + 1, remaining - 1)) return true;
      path.pop_back();
    }
    return false;
  }
};

CoordSet random_subset(Rng& rng, std::size_t m, std::size_t size) {
  std::vector<std::size_t> pool(m);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < size; ++i) {
    std::swap(pool[i], pool[i + rng.below(m - i)]);
  }
  pool.resize(size);
  return CoordSet(std::move(pool));
}

FamilyCheck shape_check(const SetFamily& f) {
  FamilyCheck out;
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    if (f.sets[i].size() != f.member_size) {
      out.counterexample = {i};
      out.reason = "member " + std::to_string(i) + " has " + std::to_string(f.sets[i].size()) +
                   " elements, expected " + std::to_string(f.member_size);
      return out;
    }
    if (f.sets[i].bound() > f.ground_size) {
      out.counterexample = {i};
      out.reason = "member " + std::to_string(i) + " leaves the ground set";
      return out;
    }
  }
  if (f.union_arity < 1) {
    out.reason = "union arity must be at least 1";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace

FamilyCheck verify_set_family(SetFamily& f, std::uint64_t max_tuples) {
  f.verified = false;
  FamilyCheck out = shape_check(f);
  if (!out.ok) return out;

  if (choose(f.sets.size(), f.union_arity) > max_tuples) {
    throw ResourceError("family verification needs C(" + std::to_string(f.sets.size()) + ", " +
                        std::to_string(f.union_arity) + ") tuples, above cap " + std::to_string(max_tuples));
  }
  std::vector<Bitset> bits;
  bits.reserve(f.sets.size());
  for (const auto& s : f.sets) bits.push_back(Bitset::of(s, f.ground_size));

  UnionSearch search{bits, f.union_floor, 0, {}};
  const bool bad = search.find_small(Bitset(f.ground_size), 0, f.union_arity);
  out.tuples = search.visited;
  if (bad) {
    out.ok = false;
    out.counterexample = search.path;
    Bitset u(f.ground_size);
    for (auto i : search.path) u |= bits[i];
    out.reason = "union of size " + std::to_string(u.count()) + " below " + std::to_string(f.union_floor);
    return out;
  }
  f.verified = true;
  return out;
}

FamilyCheck sample_check_set_family(const SetFamily& f, std::uint64_t samples, std::uint64_t seed) {
  FamilyCheck out = shape_check(f);
  if (!out.ok || f.sets.size() < f.union_arity) return out;

  Rng rng(seed);
  const std::size_t M = f.sets.size();
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<std::size_t> pick(M);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    for (std::size_t i = 0; i < f.union_arity; ++i) std::swap(pick[i], pick[i + rng.below(M - i)]);
    pick.resize(f.union_arity);
    std::sort(pick.begin(), pick.end());
    Bitset u(f.ground_size);
    for (auto i : pick) u |= Bitset::of(f.sets[i], f.ground_size);
    ++out.tuples;
    if (u.count() < f.union_floor) {
      out.ok = false;
      out.counterexample = pick;
      out.reason = "union of size " + std::to_string(u.count()) + " below " + std::to_string(f.union_floor);
      return out;
    }
  }
  return out;
}

std::size_t union_arity_for(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("union_arity_for: alpha must lie in (0, 1)");
  if (!(beta >= 0.0 && beta < 1.0)) throw InputError("union_arity_for: beta must lie in [0, 1)");
  const double goal = (1.0 - beta) / 2.0;
  std::size_t W = 1;
  double miss = 1.0 - alpha;
  while (!(miss < goal)) {
    miss *= 1.0 - alpha;
    ++W;
  }
  return W;
}

SetFamily build_set_family(std::size_t m, std::size_t a_F, std::size_t a_union, std::uint64_t seed,
                           const FamilyOptions& opts) {
  if (!(a_F > 0 && a_F < a_union && a_union < m)) {
    throw InputError("build_set_family needs 0 < a_F < a_union < m, got a_F=" + std::to_string(a_F) +
                     " a_union=" + std::to_string(a_union) + " m=" + std::to_string(m));
  }
  const double md = static_cast<double>(m);
  const double alpha = static_cast<double>(a_F) / md;
  const double beta = static_cast<double>(a_union) / md;
  const std::size_t W = union_arity_for(alpha, beta);
  const double alpha0 = std::max(alpha - std::cbrt(1.0 / md), alpha / 2.0);

  std::size_t target = opts.target;
  if (target == 0) {
    const double natural = std::floor(std::exp2((1.0 - beta) * md / (6.0 * static_cast<double>(W))));
    const double capped = std::min(natural, static_cast<double>(opts.cap));
    target = std::max(static_cast<std::size_t>(capped), opts.min_target);
    target = std::min(target, std::max(opts.cap, opts.min_target));
  }
  // Keep the final exhaustive verification inside the tuple budget.
  while (target > 2 && choose(target, W) > opts.max_tuples) --target;

  Rng rng(seed);
  std::vector<CoordSet> candidates;
  const std::uint64_t max_attempts = 1000 * static_cast<std::uint64_t>(target);
  for (std::uint64_t attempt = 0; attempt < max_attempts && candidates.size() < target; ++attempt) {
    std::vector<std::size_t> elems;
    std::vector<char> used(m, 0);
    for (std::size_t e = 0; e < m; ++e) {
      if (rng.bernoulli(alpha0)) {
        elems.push_back(e);
        used[e] = 1;
      }
    }
    if (elems.size() > a_F) continue;
    while (elems.size() < a_F) {
      const std::size_t e = rng.below(m);
      if (used[e]) continue;
      used[e] = 1;
      elems.push_back(e);
    }
    candidates.emplace_back(std::move(elems));
  }

  SetFamily f{m, a_F, W, a_union, {}, false};
  std::vector<Bitset> kept_bits;
  for (auto& cand : candidates) {
    Bitset b = Bitset::of(cand, m);
    bool ok = true;
    if (kept_bits.size() + 1 >= W) {
      UnionSearch search{kept_bits, a_union, 0, {}};
      ok = !search.find_small(b, 0, W - 1);
    }
    if (ok) {
      kept_bits.push_back(std::move(b));
      f.sets.push_back(std::move(cand));
    }
  }
  if (f.sets.size() < 2) {
    throw ConstructionError("set family construction kept " + std::to_string(f.sets.size()) +
                            " sets (m=" + std::to_string(m) + ", a_F=" + std::to_string(a_F) +
                            ", a_union=" + std::to_string(a_union) + ", W=" + std::to_string(W) + ")");
  }
  const FamilyCheck check = verify_set_family(f, opts.max_tuples);
  if (!check.ok) throw InternalError("greedy set family failed verification: " + check.reason);
  return f;
}

std::vector<CoordSet> enumerate_or_sample_subsets(std::size_t m, std::size_t size, std::uint64_t limit,
                                                  std::uint64_t seed, bool& complete) {
  if (size > m) throw InputError("subset size exceeds ground set");
  std::vector<CoordSet> out;
  const std::uint64_t total = choose(m, size);
  if (total <= limit) {
    complete = true;
    std::vector<std::size_t> cur(size);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
      out.emplace_back(cur);
      std::size_t i = size;
      while (i > 0 && cur[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  }
  complete = false;
  Rng rng(seed);
  std::set<std::vector<std::size_t>> seen;
  const std::uint64_t max_attempts = 50 * limit + 100;
  for (std::uint64_t a = 0; a < max_attempts && out.size() < limit; ++a) {
    CoordSet s = random_subset(rng, m, size);
    std::vector<std::size_t> key(s.begin(), s.end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(s));
  }
  return out;
}

SetFamily pairwise_family_warmup2(std::size_t n, std::size_t i0_size, std::size_t alpha_n, std::size_t beta_n,
                                  std::uint64_t seed, const PairwiseFamilyOptions& opts) {
  if (i0_size >= n) throw InputError("pairwise family: I_0 must leave coordinates free");
  const std::size_t m = n - i0_size;
  if (alpha_n < 1 || alpha_n > m) throw InputError("pairwise family: member size must lie in [1, n - |I_0|]");

  const std::uint64_t limit = choose(m, alpha_n) <= opts.enumerate_limit ? opts.enumerate_limit : opts.samples;
  bool complete = false;
  auto candidates = enumerate_or_sample_subsets(m, alpha_n, limit, seed, complete);
  if (complete) {
    // Enumeration order is lexicographic; shuffle so the greedy pass is not
    // biased toward low coordinates.
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = candidates.size(); i > 1; --i) std::swap(candidates[i - 1], candidates[rng.below(i)]);
  }

  SetFamily f{m, alpha_n, 2, beta_n, {}, false};
  std::vector<Bitset> kept;
  for (auto& cand : candidates) {
    if (f.sets.size() >= opts.max_sets) break;
    Bitset b = Bitset::of(cand, m);
    const bool ok = std::all_of(kept.begin(), kept.end(), [&](const Bitset& k) { return (k | b).count() >= beta_n; });
    if (!ok) continue;
    kept.push_back(std::move(b));
    f.sets.push_back(std::move(cand));
  }
  const FamilyCheck check = verify_set_family(f, kSaturated);
  if (!check.ok) throw InternalError("pairwise family failed verification: " + check.reason);
  return f;
}

void write_family_text(std::ostream& out, const SetFamily& f) {
  out << f.ground_size << ' ' << f.member_size << ' ' << f.union_floor << ' ' << f.union_arity << ' '
      << f.sets.size() << '\n';
  for (const auto& s : f.sets) {
    bool first = true;
    for (auto i : s) {
      if (!first) out << ' ';
      out << i;
      first = false;
    }
    out << '\n';
  }
}

SetFamily read_family_text(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(lineno + 1, "missing family header");
  SetFamily f;
  std::size_t count = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> f.ground_size >> f.member_size >> f.union_floor >> f.union_arity >> count) || (hs >> extra)) {
      throw ParseError(lineno, "family header must be 'm a_F a_union W M'");
    }
  }
  for (std::size_t k = 0; k < count; ++k) {
    if (!next_line()) throw ParseError(lineno + 1, "expected " + std::to_string(count) + " members");
    std::istringstream ls(line);
    std::vector<std::size_t> idx;
    std::string tok;
    while (ls >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) throw ParseError(lineno, "bad index '" + tok + "'");
      idx.push_back(std::stoull(tok));
    }
    if (idx.size() != f.member_size) throw ParseError(lineno, "member has wrong size");
    if (!std::is_sorted(idx.begin(), idx.end())) throw ParseError(lineno, "member indices must be sorted");
    try {
      f.sets.emplace_back(std::move(idx));
    } catch (const InputError& e) {
      throw ParseError(lineno, e.what());
    }
    if (f.sets.back().bound() > f.ground_size) throw ParseError(lineno, "index outside ground set");
  }
  if (next_line()) throw ParseError(lineno, "more members than the header declares");
  return f;
}

}  // namespace gsb
