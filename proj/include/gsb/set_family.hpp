#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gsb/core.hpp"

namespace gsb {

/// Subsets of the ground set [0, ground_size), each of exactly member_size
/// elements. When `verified` is set, every union of union_arity distinct
/// members has at least union_floor elements.
struct SetFamily {
  std::size_t ground_size = 0;
  std::size_t member_size = 0;
  std::size_t union_arity = 2;
  std::size_t union_floor = 0;
  std::vector<CoordSet> sets;
  bool verified = false;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

struct FamilyCheck {
  bool ok = false;
  std::vector<std::size_t> counterexample;  ///< member indices of a failing tuple
  std::string reason;
  std::uint64_t tuples = 0;                 ///< tuples examined (subtrees that already pass count as one)
};

inline constexpr std::uint64_t kDefaultMaxTuples = 5'000'000;

/// Exhaustive check of every union_arity-wise union, plus member sizes and
/// ground bounds. Sets `f.verified` to the outcome. Throws ResourceError when
/// C(|sets|, union_arity) exceeds `max_tuples`; the flag is left false then.
FamilyCheck verify_set_family(SetFamily& f, std::uint64_t max_tuples = kDefaultMaxTuples);

/// Random-tuple check for families too large to enumerate. Never sets the
/// verified flag.
FamilyCheck sample_check_set_family(const SetFamily& f, std::uint64_t samples, std::uint64_t seed);

/// Smallest W >= 1 with (1 - alpha)^W < (1 - beta) / 2.
std::size_t union_arity_for(double alpha, double beta);

struct FamilyOptions {
  std::size_t target = 0;       ///< retained sample count M'; 0 picks automatically
  std::size_t min_target = 16;  ///< floor for the automatic target
  std::size_t cap = 64;         ///< ceiling for the automatic target
  std::uint64_t max_tuples = kDefaultMaxTuples;
};

/// Random family of a_F-subsets of [m] whose W-wise unions reach a_union.
///
/// Candidates include each element independently with probability
/// alpha - m^{-1/3} (never below alpha/2); oversized candidates are dropped
/// and undersized ones are padded with random unused elements. Candidates are
/// then admitted greedily, skipping any that would create a W-tuple with a
/// small union, and the result is verified exhaustively. Throws InputError
/// unless 0 < a_F < a_union < m, ConstructionError if fewer than two sets
/// survive.
SetFamily build_set_family(std::size_t m, std::size_t a_F, std::size_t a_union, std::uint64_t seed,
                           const FamilyOptions& opts = {});

struct PairwiseFamilyOptions {
  std::size_t max_sets = 64;
  std::uint64_t enumerate_limit = 200'000;  ///< enumerate all candidates up to this many, else sample
  std::uint64_t samples = 20'000;
};

/// Greedy family of alpha_n-subsets of the n - i0_size coordinates after the
/// first i0_size, with every pairwise union of size at least beta_n. Members
/// are indexed from 0 within that ground set.
SetFamily pairwise_family_warmup2(std::size_t n, std::size_t i0_size, std::size_t alpha_n, std::size_t beta_n,
                                  std::uint64_t seed, const PairwiseFamilyOptions& opts = {});

/// All `size`-subsets of [m] in lexicographic order when there are at most
/// `limit` of them (`complete` set true), otherwise `limit` distinct
/// uniformly sampled ones.
std::vector<CoordSet> enumerate_or_sample_subsets(std::size_t m, std::size_t size, std::uint64_t limit,
                                                  std::uint64_t seed, bool& complete);

/// Header "m a_F a_union W M", then one line of sorted indices per member.
void write_family_text(std::ostream& out, const SetFamily& f);
SetFamily read_family_text(std::istream& in);

}  // namespace gsb
