#pragma once

// Synthetic codes with a known bad configuration planted in them.

#include <algorithm>
#include <vector>

#include "gsb/attack.hpp"
#include "gsb/rng.hpp"
#include "gsb/set_family.hpp"

namespace fixture {

inline gsb::Symbol other_than(gsb::Rng& rng, std::uint32_t q, std::initializer_list<gsb::Symbol> avoid) {
  for (;;) {
    auto s = static_cast<gsb::Symbol>(rng.below(q));
    if (std::find(avoid.begin(), avoid.end(), s) == avoid.end()) return s;
  }
}

inline std::vector<gsb::Symbol> random_symbols(gsb::Rng& rng, std::uint32_t q, std::size_t n) {
  std::vector<gsb::Symbol> s(n);
  for (auto& x : s) x = static_cast<gsb::Symbol>(rng.below(q));
  return s;
}

/// Pads `words` with random words keeping every pairwise distance >= dmin.
inline void pad_random(gsb::Rng& rng, std::uint32_t q, std::size_t n, std::size_t dmin, std::size_t extra,
                       std::vector<gsb::Word>& words) {
  std::size_t added = 0;
  while (added < extra) {
    gsb::Word w(random_symbols(rng, q, n));
    bool far = std::all_of(words.begin(), words.end(), [&](const gsb::Word& v) { return gsb::hamming_distance(v, w) >= dmin; });
    if (!far) continue;
    words.push_back(w);
    ++added;
  }
}

struct Planted {
  gsb::Code code;
  std::size_t center_word = 0;  ///< index of the planted popular codeword
};

/// The warmup-2 configuration: c, and f1, f2 agreeing with c on two family
/// members whose union has at least 28 elements, sharing a pattern on I_0
/// that differs from c everywhere. n = 48, R = 1/2, eps = 1/16.
inline Planted warmup2_plant(std::uint64_t seed, std::uint32_t q = 4) {
  constexpr std::size_t n = 48, i0 = 12;
  const gsb::AttackOptions opts{seed};
  gsb::PairwiseFamilyOptions po;
  po.max_sets = opts.family_cap;
  po.samples = opts.warmup_family_limit;
  auto fam = gsb::pairwise_family_warmup2(n, i0, 21, 27, seed, po);

  std::vector<std::pair<std::size_t, std::size_t>> wide;
  for (std::size_t a = 0; a < fam.sets.size(); ++a)
    for (std::size_t b = a + 1; b < fam.sets.size(); ++b)
      if (fam.sets[a].unite(fam.sets[b]).size() >= 28) wide.emplace_back(a, b);

  gsb::Rng rng(seed * 7919 + 1);
  auto [ia, ib] = wide.at(rng.below(wide.size()));
  const auto A1 = fam.sets[ia].shifted(i0);
  const auto A2 = fam.sets[ib].shifted(i0);

  auto c = random_symbols(rng, q, n);
  auto f1 = c, f2 = c;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < i0) {
      f1[i] = f2[i] = other_than(rng, q, {c[i]});
      continue;
    }
    if (!A1.contains(i)) f1[i] = other_than(rng, q, {c[i]});
    if (!A2.contains(i)) f2[i] = other_than(rng, q, {c[i], f1[i]});
  }
  std::vector<gsb::Word> words{gsb::Word(c), gsb::Word(f1), gsb::Word(f2)};
  pad_random(rng, q, n, 22, 5, words);
  // Put the planted word somewhere other than the front.
  std::rotate(words.begin(), words.begin() + 1, words.begin() + 3);
  return {gsb::Code(q, n, words), 2};
}

/// The general-attack configuration at n = 90, L = 2, R = 1/2, eps = 1/30:
/// c_0 plus W L partners, one per leading family member, all sharing a
/// pattern on I_0.
inline Planted general_plant(std::uint64_t seed, std::uint32_t q = 16) {
  const auto params = gsb::derive_params(90, 2, gsb::Rational(1, 2), gsb::Rational(1, 30));
  gsb::AttackOptions opts{seed};
  gsb::FamilyOptions fo;
  fo.cap = opts.family_cap;
  fo.min_target = std::min(fo.min_target, opts.family_cap);
  fo.max_tuples = opts.max_tuples;
  auto fam = gsb::build_set_family(90 - params.pn, params.a_F, params.a_union, seed, fo);
  const std::size_t need = fam.union_arity * params.L;

  gsb::Rng rng(seed * 104729 + 3);
  const std::size_t n = 90;
  auto c0 = random_symbols(rng, q, n);
  std::vector<gsb::Symbol> z(params.d0);
  for (std::size_t i = 0; i < params.d0; ++i) z[i] = other_than(rng, q, {c0[i]});

  std::vector<gsb::Word> words{gsb::Word(c0)};
  for (std::size_t s = 0; s < need && s < fam.sets.size(); ++s) {
    const auto A = fam.sets[s].shifted(params.pn);
    auto w = c0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i < params.d0) w[i] = z[i];
      else if (!A.contains(i)) w[i] = other_than(rng, q, {c0[i]});
    }
    words.emplace_back(w);
  }
  pad_random(rng, q, n, params.min_distance, 10, words);
  return {gsb::Code(q, n, words), 0};
}

}  // namespace fixture
