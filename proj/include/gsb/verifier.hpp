#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsb/core.hpp"
#include "gsb/rational.hpp"

namespace gsb {

enum class DecodingMode { ordinary, average_radius };

std::string_view to_string(DecodingMode mode);
DecodingMode parse_mode(std::string_view text);

struct RadiusQuery {
  Rational p;
  std::size_t L = 1;
  DecodingMode mode = DecodingMode::ordinary;
};

/// Integer violation threshold for a query at block length n.
///
/// ordinary: a center is bad when L+1 codewords are each within floor(p n).
/// average_radius: a center is bad when L+1 codewords have total distance
/// at most floor((L+1) p n), i.e. their average is not strictly above p n.
std::size_t violation_threshold(const RadiusQuery& query, std::size_t n);

/// A center together with L+1 distinct codewords that overload it.
/// `threshold` bounds each distance (ordinary) or their sum (average_radius).
struct Violation {
  DecodingMode mode = DecodingMode::ordinary;
  Word center;
  std::vector<std::size_t> indices;
  std::vector<std::size_t> distances;
  std::size_t threshold = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CenterResult {
  Word center;
  std::size_t value = 0;  ///< max distance for minmax_center, total for avg_center
};

inline constexpr std::size_t kMaxCenterWords = 8;

/// Exact minimax center. Only symbols that occur in a coordinate among the
/// inputs are tried there; any other symbol is weakly dominated.
/// Throws ResourceError when more than `max_words` words are given.
CenterResult minmax_center(std::span<const Word> words, std::size_t max_words = kMaxCenterWords);

/// Some center within `radius` of every word, or nullopt.
std::optional<Word> center_within(std::span<const Word> words, std::size_t radius,
                                  std::size_t max_words = kMaxCenterWords);

/// Coordinate-wise plurality (ties to the smallest symbol); minimizes the
/// total distance exactly.
CenterResult avg_center(std::span<const Word> words);

struct VerifierOptions {
  std::uint64_t max_subsets = 10'000'000;
  unsigned threads = 1;
  std::size_t max_words = kMaxCenterWords;
};

struct Decodability {
  bool decodable = true;
  std::optional<Violation> violation;
};

/// Exhaustive decision over every (L+1)-subset of the code, in lexicographic
/// index order; the first violating subset is reported regardless of the
/// thread count.
Decodability is_list_decodable(const Code& c, const RadiusQuery& query, const VerifierOptions& opts = {});

/// Same decision with an explicit integer threshold.
Decodability check_threshold(const Code& c, std::size_t L, std::size_t threshold, DecodingMode mode,
                             const VerifierOptions& opts = {});

/// Lexicographically first violating (L+1)-subset of `pool` (sorted code
/// indices) that is not smaller than `resume_from` (empty = from the start).
std::optional<Violation> first_violation(const Code& c, std::span<const std::size_t> pool, std::size_t L,
                                         std::size_t threshold, DecodingMode mode,
                                         std::span<const std::size_t> resume_from, const VerifierOptions& opts);

/// Random-subset probe for codes too large to enumerate. Can only find
/// violations, never certify decodability.
std::optional<Violation> sample_violation(const Code& c, const RadiusQuery& query, std::uint64_t samples,
                                          std::uint64_t seed, const VerifierOptions& opts = {});

struct RadiusResult {
  std::size_t radius = 0;              ///< largest t with C (t/n, L)-list-decodable
  std::optional<Violation> witness;    ///< violation at radius + 1, absent when |C| <= L
};

RadiusResult exact_radius(const Code& c, std::size_t L, const VerifierOptions& opts = {});

std::size_t neighborhood_count(const Code& c, const Word& center, std::size_t radius);

struct ReplayResult {
  bool ok = false;
  std::string reason;
};

/// Re-checks a violation from its fields and the code alone.
ReplayResult replay_violation(const Code& c, const Violation& v);

}  // namespace gsb
