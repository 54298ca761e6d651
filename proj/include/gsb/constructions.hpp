#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gsb/core.hpp"
#include "gsb/rational.hpp"
#include "gsb/verifier.hpp"

namespace gsb {

/// floor(q^{R n}), saturating at 2^64 - 1.
std::uint64_t target_code_size(std::uint32_t q, std::size_t n, const Rational& R);

/// The radius the random-coding argument aims for: L/(L+1) (1 - R - eps).
Rational target_list_radius(std::size_t L, const Rational& R, const Rational& eps);

struct RandomCodeSpec {
  std::uint32_t q = 2;
  std::size_t n = 1;
  Rational R{1, 2};
  Rational eps{0};
  std::size_t L = 1;
  std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kMaxRandomCodeSize = std::uint64_t{1} << 20;

/// floor(q^{R n}) distinct uniform words; duplicates are redrawn.
/// Throws InputError for R outside [0, 1], ResourceError above `max_size`.
Code random_code(const RandomCodeSpec& spec, std::uint64_t max_size = kMaxRandomCodeSize);

struct ExpurgationResult {
  Code code;
  std::vector<std::size_t> kept;     ///< original indices of the surviving words
  std::vector<std::size_t> removed;  ///< original indices in removal order
};

/// Removes one codeword per violating (L+1)-subset until none remain. The
/// subset scan runs in lexicographic order and resumes at the subset that
/// triggered the last removal; the removed member is the one farthest from
/// the violating center (ties to the largest index).
ExpurgationResult expurgate_violations(const Code& c, const RadiusQuery& query, const VerifierOptions& opts = {});

/// Indices kept by a greedy pass in index order that admits a word only if
/// it is at distance >= min_distance from everything admitted so far.
std::vector<std::size_t> greedy_distance_indices(const Code& c, std::size_t min_distance);

/// Greedy subcode with minimum distance at least ceil(alpha n).
Code greedy_distance_subcode(const Code& c, const Rational& alpha);

struct NeighborhoodReport {
  Rational alpha;             ///< p + p^L / (2L)
  std::size_t radius = 0;     ///< floor(alpha n)
  std::size_t bound = 0;      ///< L + ceil(L^2 / p) - 1
  std::size_t max_count = 0;  ///< most other codewords around a single codeword
  std::size_t argmax = 0;
  bool holds = false;
};

/// Counts, for every codeword, the other codewords within floor(alpha n).
/// Throws InputError if p <= 0 or the code is not (p, L)-list-decodable.
NeighborhoodReport neighborhood_bound_check(const Code& c, const Rational& p, std::size_t L,
                                            const VerifierOptions& opts = {});

/// Greedy subcode with pairwise distance > floor(3 p n / 2). When the caller
/// has verified (p, 2)-average-radius decodability, at least half the code
/// must survive; InternalError otherwise.
ExpurgationResult avg_radius_expurgate(const Code& c, const Rational& p, bool precondition_verified);

}  // namespace gsb
