#include "gsb/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "gsb/errors.hpp"
#include "gsb/rng.hpp"

namespace gsb {
namespace {

using u128 = unsigned __int128;
constexpr std::uint64_t kMax64 = std::numeric_limits<std::uint64_t>::max();

// base^e, or nullopt once it passes 2^127.
std::optional<u128> checked_pow(u128 base, std::uint64_t e) {
  constexpr u128 limit = u128{1} << 127;
  u128 r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t target_code_size(std::uint32_t q, std::size_t n, const Rational& R) {
  if (q < 2) throw InputError("alphabet size must be at least 2");
  if (R < Rational(0)) throw InputError("rate must be non-negative");
  const Rational e = R * Rational(static_cast<std::int64_t>(n));
  const auto num = static_cast<std::uint64_t>(e.num());
  const auto den = static_cast<std::uint64_t>(e.den());

  if (den == 1) {
    auto v = checked_pow(q, num);
    return v && *v <= kMax64 ? static_cast<std::uint64_t>(*v) : kMax64;
  }
  const long double approx = std::pow(static_cast<long double>(q), e.to_double());
  if (approx >= static_cast<long double>(kMax64)) return kMax64;
  auto x = static_cast<std::uint64_t>(std::floor(approx));
  // Exact correction: largest x with x^den <= q^num, when it fits in 128 bits.
  auto rhs = checked_pow(q, num);
  if (rhs) {
    auto fits = [&](std::uint64_t v) {
      auto lhs = checked_pow(v, den);
      return lhs && *lhs <= *rhs;
    };
    while (x > 0 && !fits(x)) --x;
    while (x < kMax64 && fits(x + 1)) ++x;
  }
  return x;
}

Rational target_list_radius(std::size_t L, const Rational& R, const Rational& eps) {
  if (L < 1) throw InputError("list size L must be at least 1");
  const Rational slack = Rational(1) - R - eps;
  if (slack < Rational(0)) throw InputError("need R + eps <= 1");
  const auto Li = static_cast<std::int64_t>(L);
  return Rational(Li, Li + 1) * slack;
}

Code random_code(const RandomCodeSpec& spec, std::uint64_t max_size) {
  if (spec.R < Rational(0) || spec.R > Rational(1)) throw InputError("rate must lie in [0, 1]");
  if (spec.n < 1) throw InputError("block length must be at least 1");
  const std::uint64_t N = target_code_size(spec.q, spec.n, spec.R);
  if (N > max_size) {
    throw ResourceError("random code of size " + std::to_string(N) + " exceeds the cap of " + std::to_string(max_size));
  }
  Rng rng(spec.seed);
  std::vector<Word> words;
  words.reserve(N);
  std::unordered_set<Word, WordHash> seen;
  while (words.size() < N) {
    std::vector<Symbol> s(spec.n);
    for (auto& x : s) x = static_cast<Symbol>(rng.below(spec.q));
    Word w(std::move(s));
    if (seen.insert(w).second) words.push_back(std::move(w));
  }
  return Code(spec.q, spec.n, std::move(words), CodeMetadata{spec.seed, "random"});
}

ExpurgationResult expurgate_violations(const Code& c, const RadiusQuery& query, const VerifierOptions& opts) {
  const std::size_t threshold = violation_threshold(query, c.n());
  std::vector<std::size_t> pool(c.size());
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::size_t> removed;
  std::vector<std::size_t> resume;

  while (auto v = first_violation(c, pool, query.L, threshold, query.mode, resume, opts)) {
    std::size_t victim = 0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < v->indices.size(); ++i) {
      if (v->distances[i] > worst || (v->distances[i] == worst && v->indices[i] > victim)) {
        worst = v->distances[i];
        victim = v->indices[i];
      }
    }
    removed.push_back(victim);
    pool.erase(std::lower_bound(pool.begin(), pool.end(), victim));
    // Every subset before this one was clean and stays clean after a removal.
    resume = v->indices;
  }
  Code out = c.subcode(pool);
  return {std::move(out), std::move(pool), std::move(removed)};
}

std::vector<std::size_t> greedy_distance_indices(const Code& c, std::size_t min_distance) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool far = std::all_of(kept.begin(), kept.end(),
                                 [&](std::size_t j) { return hamming_distance(c[i], c[j]) >= min_distance; });
    if (far) kept.push_back(i);
  }
  return kept;
}

Code greedy_distance_subcode(const Code& c, const Rational& alpha) {
  if (alpha < Rational(0) || alpha > Rational(1)) throw InputError("relative distance must lie in [0, 1]");
  const auto d = static_cast<std::size_t>(alpha.ceil_times(static_cast<std::int64_t>(c.n())));
  return c.subcode(greedy_distance_indices(c, d));
}

NeighborhoodReport neighborhood_bound_check(const Code& c, const Rational& p, std::size_t L,
                                            const VerifierOptions& opts) {
  if (p <= Rational(0)) throw InputError("neighborhood bound needs p > 0");
  if (L < 1) throw InputError("list size L must be at least 1");
  const auto dec = is_list_decodable(c, RadiusQuery{p, L, DecodingMode::ordinary}, opts);
  if (!dec.decodable) throw InputError("code is not (p, L)-list-decodable");

  const auto Li = static_cast<std::int64_t>(L);
  NeighborhoodReport rep;
  rep.alpha = p + p.pow(static_cast<unsigned>(L)) / Rational(2 * Li);
  rep.radius = static_cast<std::size_t>(rep.alpha.floor_times(static_cast<std::int64_t>(c.n())));
  rep.bound = L + static_cast<std::size_t>((Rational(Li * Li) / p).ceil()) - 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j != i && hamming_distance(c[i], c[j]) <= rep.radius) ++count;
    }
    if (count > rep.max_count || i == 0) {
      rep.max_count = count;
      rep.argmax = i;
    }
  }
  rep.holds = rep.max_count <= rep.bound;
  return rep;
}

ExpurgationResult avg_radius_expurgate(const Code& c, const Rational& p, bool precondition_verified) {
  if (p < Rational(0) || p > Rational(1)) throw InputError("radius p must lie in [0, 1]");
  const auto limit = static_cast<std::size_t>((Rational(3, 2) * p).floor_times(static_cast<std::int64_t>(c.n())));
  std::vector<std::size_t> kept = greedy_distance_indices(c, limit + 1);
  std::vector<std::size_t> removed;
  std::size_t next = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (next < kept.size() && kept[next] == i) {
      ++next;
    } else {
      removed.push_back(i);
    }
  }
  if (precondition_verified && 2 * kept.size() < c.size()) {
    throw InternalError("average-radius expurgation kept " + std::to_string(kept.size()) + " of " +
                        std::to_string(c.size()) + " words despite a verified precondition");
  }
  Code out = c.subcode(kept);
  return {std::move(out), std::move(kept), std::move(removed)};
}

}  // namespace gsb
