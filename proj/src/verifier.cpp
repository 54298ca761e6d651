#include "gsb/verifier.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "gsb/errors.hpp"
#include "gsb/rng.hpp"

namespace gsb {
namespace {

constexpr std::size_t kMaxPairs = kMaxCenterWords * (kMaxCenterWords - 1) / 2;
using Labels = std::array<std::uint8_t, kMaxCenterWords>;

void check_words(std::span<const Word> words, std::size_t max_words) {
  if (words.empty()) throw InputError("center search needs at least one word");
  if (words.size() > max_words || words.size() > kMaxCenterWords) {
    throw ResourceError("center search over " + std::to_string(words.size()) + " words exceeds cap " +
                        std::to_string(std::min(max_words, kMaxCenterWords)));
  }
  for (const auto& w : words) {
    if (w.size() != words[0].size()) throw InputError("center search: words differ in length");
  }
}

// Depth-first search for a center within a radius bound.
//
// Coordinates are reduced to their equality pattern across the input words:
// word j gets label lab[j], labels numbered by first occurrence. Constant
// coordinates are fixed to the shared symbol. The rest are grouped by
// pattern; inside a run of identical patterns choices are non-decreasing,
// since permuting such coordinates permutes nothing in the distance vector.
class CenterSearch {
 public:
  explicit CenterSearch(std::span<const Word> words) : words_(words), k_(words.size()), n_(words[0].size()) {
    base_ = Word(std::vector<Symbol>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      Coord c;
      c.index = i;
      std::array<Symbol, kMaxCenterWords> seen{};
      std::uint8_t blocks = 0;
      for (std::size_t j = 0; j < k_; ++j) {
        Symbol s = words_[j][i];
        std::uint8_t lab = blocks;
        for (std::uint8_t b = 0; b < blocks; ++b) {
          if (seen[b] == s) {
            lab = b;
            break;
          }
        }
        if (lab == blocks) seen[blocks++] = s;
        c.labels[j] = lab;
      }
      c.blocks = blocks;
      c.symbols = seen;
      if (blocks == 1) {
        base_[i] = seen[0];
      } else {
        coords_.push_back(c);
      }
    }
    std::stable_sort(coords_.begin(), coords_.end(),
                     [](const Coord& a, const Coord& b) { return a.labels < b.labels; });

    pairs_.clear();
    for (std::size_t a = 0; a < k_; ++a) {
      for (std::size_t b = a + 1; b < k_; ++b) pairs_.push_back({a, b});
    }
    suffix_.assign(coords_.size() + 1, {});
    for (std::size_t pos = coords_.size(); pos-- > 0;) {
      suffix_[pos] = suffix_[pos + 1];
      for (std::size_t p = 0; p < pairs_.size(); ++p) {
        const auto& lab = coords_[pos].labels;
        suffix_[pos][p] += lab[pairs_[p].first] != lab[pairs_[p].second];
      }
    }
  }

  /// Largest pairwise ceil(d/2): no center can do better.
  std::size_t lower_bound() const {
    std::size_t lb = 0;
    for (std::size_t p = 0; p < pairs_.size(); ++p) lb = std::max<std::size_t>(lb, (suffix_[0][p] + 1) / 2);
    return lb;
  }

  std::optional<Word> find(std::size_t radius) {
    radius_ = radius;
    cur_.fill(0);
    choice_.assign(coords_.size(), 0);
    if (!bound_ok(0)) return std::nullopt;
    if (!dfs(0)) return std::nullopt;
    Word center = base_;
    for (std::size_t pos = 0; pos < coords_.size(); ++pos) {
      center[coords_[pos].index] = coords_[pos].symbols[choice_[pos]];
    }
    return center;
  }

 private:
  struct Coord {
    std::size_t index = 0;
    Labels labels{};
    std::uint8_t blocks = 0;
    std::array<Symbol, kMaxCenterWords> symbols{};
  };

  bool bound_ok(std::size_t pos) const {
    for (std::size_t j = 0; j < k_; ++j) {
      if (cur_[j] > radius_) return false;
    }
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (cur_[pairs_[p].first] + cur_[pairs_[p].second] + suffix_[pos][p] > 2 * radius_) return false;
    }
    return true;
  }

  bool dfs(std::size_t pos) {
    if (pos == coords_.size()) return true;
    const Coord& c = coords_[pos];
    std::uint8_t start = 0;
    if (pos > 0 && coords_[pos - 1].labels == c.labels) start = choice_[pos - 1];
    for (std::uint8_t b = start; b < c.blocks; ++b) {
      for (std::size_t j = 0; j < k_; ++j) cur_[j] += c.labels[j] != b;
      choice_[pos] = b;
      bool ok = bound_ok(pos + 1) && dfs(pos + 1);
      for (std::size_t j = 0; j < k_; ++j) cur_[j] -= c.labels[j] != b;
      if (ok) return true;
    }
    return false;
  }

  std::span<const Word> words_;
  std::size_t k_;
  std::size_t n_;
  Word base_;
  std::vector<Coord> coords_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::array<std::size_t, kMaxPairs>> suffix_;
  std::size_t radius_ = 0;
  std::array<std::size_t, kMaxCenterWords> cur_{};
  std::vector<std::uint8_t> choice_;
};

std::size_t max_distance(const Word& center, std::span<const Word> words) {
  std::size_t m = 0;
  for (const auto& w : words) m = std::max(m, hamming_distance(center, w));
  return m;
}

/// C(n, k) saturated at UINT64_MAX.
std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

// Lexicographic scan of (L+1)-subsets of a pool of code indices.
class SubsetScanner {
 public:
  SubsetScanner(const Code& c, std::span<const std::size_t> pool, std::size_t k, std::size_t threshold,
                DecodingMode mode)
      : code_(c), pool_(pool), k_(k), threshold_(threshold), mode_(mode) {
    pair_limit_ = mode == DecodingMode::ordinary ? 2 * threshold : threshold;
    if (pool_.size() <= kMatrixLimit) {
      const std::size_t m = pool_.size();
      dist_.resize(m * m);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          auto d = static_cast<std::uint32_t>(hamming_distance(code_[pool_[a]], code_[pool_[b]]));
          dist_[a * m + b] = d;
          dist_[b * m + a] = d;
        }
      }
    }
  }

  /// Scans every subset whose smallest member is pool position `first`.
  std::optional<Violation> scan_first(std::size_t first, std::span<const std::size_t> resume, bool tight) const {
    std::vector<std::size_t> chosen{first};
    std::vector<Word> words{code_[pool_[first]]};
    return extend(chosen, words, resume, tight);
  }

 private:
  static constexpr std::size_t kMatrixLimit = 2048;

  std::size_t dist(std::size_t a, std::size_t b) const {
    if (!dist_.empty()) return dist_[a * pool_.size() + b];
    return hamming_distance(code_[pool_[a]], code_[pool_[b]]);
  }

  std::optional<Violation> extend(std::vector<std::size_t>& chosen, std::vector<Word>& words,
                                  std::span<const std::size_t> resume, bool tight) const {
    const std::size_t depth = chosen.size();
    if (depth == k_) return evaluate(chosen, words);

    std::size_t from = chosen.back() + 1;
    if (tight) {
      from = std::max<std::size_t>(
          from, static_cast<std::size_t>(std::lower_bound(pool_.begin(), pool_.end(), resume[depth]) - pool_.begin()));
    }
    const std::size_t last = pool_.size() - (k_ - depth);
    for (std::size_t pos = from; pos <= last && pos < pool_.size(); ++pos) {
      bool close = true;
      for (std::size_t prev : chosen) {
        if (dist(prev, pos) > pair_limit_) {
          close = false;
          break;
        }
      }
      if (!close) continue;
      const bool child_tight = tight && pool_[pos] == resume[depth];
      chosen.push_back(pos);
      words.push_back(code_[pool_[pos]]);
      auto found = extend(chosen, words, resume, child_tight);
      chosen.pop_back();
      words.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<Violation> evaluate(const std::vector<std::size_t>& chosen, const std::vector<Word>& words) const {
    Violation v;
    v.mode = mode_;
    v.threshold = threshold_;
    if (mode_ == DecodingMode::ordinary) {
      CenterSearch search(words);
      if (search.lower_bound() > threshold_) return std::nullopt;
      auto center = search.find(threshold_);
      if (!center) return std::nullopt;
      v.center = std::move(*center);
    } else {
      auto r = avg_center(words);
      if (r.value > threshold_) return std::nullopt;
      v.center = std::move(r.center);
    }
    for (std::size_t pos : chosen) {
      v.indices.push_back(pool_[pos]);
      v.distances.push_back(hamming_distance(v.center, code_[pool_[pos]]));
    }
    return v;
  }

  const Code& code_;
  std::span<const std::size_t> pool_;
  std::size_t k_;
  std::size_t threshold_;
  DecodingMode mode_;
  std::size_t pair_limit_;
  std::vector<std::uint32_t> dist_;
};

}  // namespace

std::string_view to_string(DecodingMode mode) {
  return mode == DecodingMode::ordinary ? "ordinary" : "average_radius";
}

DecodingMode parse_mode(std::string_view text) {
  if (text == "ordinary") return DecodingMode::ordinary;
  if (text == "average_radius" || text == "average") return DecodingMode::average_radius;
  throw InputError("unknown decoding mode '" + std::string(text) + "'");
}

std::size_t violation_threshold(const RadiusQuery& query, std::size_t n) {
  if (query.p < Rational(0) || query.p > Rational(1)) throw InputError("radius p must lie in [0, 1]");
  if (query.L < 1) throw InputError("list size L must be at least 1");
  const auto nn = static_cast<std::int64_t>(n);
  if (query.mode == DecodingMode::ordinary) return static_cast<std::size_t>(query.p.floor_times(nn));
  return static_cast<std::size_t>((query.p * Rational(static_cast<std::int64_t>(query.L + 1))).floor_times(nn));
}

CenterResult minmax_center(std::span<const Word> words, std::size_t max_words) {
  check_words(words, max_words);
  // Incumbent: the best input word used as a center.
  CenterResult best{words[0], max_distance(words[0], words)};
  for (const auto& w : words) {
    auto d = max_distance(w, words);
    if (d < best.value) best = {w, d};
  }
  CenterSearch search(words);
  const std::size_t lb = search.lower_bound();
  while (best.value > lb) {
    auto found = search.find(best.value - 1);
    if (!found) break;
    best.value = max_distance(*found, words);
    best.center = std::move(*found);
  }
  return best;
}

std::optional<Word> center_within(std::span<const Word> words, std::size_t radius, std::size_t max_words) {
  check_words(words, max_words);
  CenterSearch search(words);
  if (search.lower_bound() > radius) return std::nullopt;
  return search.find(radius);
}

CenterResult avg_center(std::span<const Word> words) {
  if (words.empty()) throw InputError("avg_center needs at least one word");
  const std::size_t n = words[0].size();
  for (const auto& w : words) {
    if (w.size() != n) throw InputError("avg_center: words differ in length");
  }
  std::vector<Symbol> center(n);
  std::size_t total = 0;
  std::vector<Symbol> column(words.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) column[j] = words[j][i];
    std::sort(column.begin(), column.end());
    Symbol best = column[0];
    std::size_t best_count = 0;
    for (std::size_t a = 0; a < column.size();) {
      std::size_t b = a;
      while (b < column.size() && column[b] == column[a]) ++b;
      if (b - a > best_count) {  // strict: earlier (smaller) symbol wins ties
        best_count = b - a;
        best = column[a];
      }
      a = b;
    }
    center[i] = best;
    total += words.size() - best_count;
  }
  return {Word(std::move(center)), total};
}

std::optional<Violation> first_violation(const Code& c, std::span<const std::size_t> pool, std::size_t L,
                                         std::size_t threshold, DecodingMode mode,
                                         std::span<const std::size_t> resume_from, const VerifierOptions& opts) {
  const std::size_t k = L + 1;
  if (L < 1) throw InputError("list size L must be at least 1");
  if (k > opts.max_words || k > kMaxCenterWords) {
    throw ResourceError("list size L + 1 = " + std::to_string(k) + " exceeds the center-search cap");
  }
  if (!resume_from.empty() && resume_from.size() != k) throw InputError("resume tuple must have L + 1 entries");
  if (pool.size() < k) return std::nullopt;
  const std::uint64_t subsets = binomial_saturated(pool.size(), k);
  if (subsets > opts.max_subsets) {
    throw ResourceError("C(" + std::to_string(pool.size()) + ", " + std::to_string(k) + ") = " +
                        std::to_string(subsets) + " subsets exceeds the cap of " + std::to_string(opts.max_subsets) +
                        "; use sampling mode");
  }

  SubsetScanner scanner(c, pool, k, threshold, mode);
  const bool resuming = !resume_from.empty();
  std::size_t first_pos = 0;
  if (resuming) {
    first_pos = static_cast<std::size_t>(std::lower_bound(pool.begin(), pool.end(), resume_from[0]) - pool.begin());
  }
  const std::size_t last_first = pool.size() - k;
  auto tight_at = [&](std::size_t pos) { return resuming && pos == first_pos && pool[pos] == resume_from[0]; };

  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    for (std::size_t pos = first_pos; pos <= last_first; ++pos) {
      if (auto v = scanner.scan_first(pos, resume_from, tight_at(pos))) return v;
    }
    return std::nullopt;
  }

  // Workers claim first positions in increasing order; the smallest first
  // position with a violation wins, and within it the scan is sequential,
  // so the answer matches the single-threaded one.
  std::atomic<std::size_t> next{first_pos};
  std::atomic<std::size_t> best_pos{std::numeric_limits<std::size_t>::max()};
  std::optional<Violation> best;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      std::size_t pos = next.fetch_add(1);
      if (pos > last_first || pos > best_pos.load()) return;
      auto v = scanner.scan_first(pos, resume_from, tight_at(pos));
      if (v) {
        std::lock_guard lock(mu);
        if (pos < best_pos.load()) {
          best_pos.store(pos);
          best = std::move(v);
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool_threads;
  for (unsigned t = 0; t < threads; ++t) pool_threads.emplace_back(worker);
  for (auto& t : pool_threads) t.join();
  return best;
}

Decodability check_threshold(const Code& c, std::size_t L, std::size_t threshold, DecodingMode mode,
                             const VerifierOptions& opts) {
  std::vector<std::size_t> pool(c.size());
  std::iota(pool.begin(), pool.end(), 0);
  auto v = first_violation(c, pool, L, threshold, mode, {}, opts);
  return {!v.has_value(), std::move(v)};
}

Decodability is_list_decodable(const Code& c, const RadiusQuery& query, const VerifierOptions& opts) {
  return check_threshold(c, query.L, violation_threshold(query, c.n()), query.mode, opts);
}

std::optional<Violation> sample_violation(const Code& c, const RadiusQuery& query, std::uint64_t samples,
                                          std::uint64_t seed, const VerifierOptions& opts) {
  const std::size_t k = query.L + 1;
  if (c.size() < k) return std::nullopt;
  const std::size_t threshold = violation_threshold(query, c.n());
  Rng rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<std::size_t> pick;
    while (pick.size() < k) {
      auto i = static_cast<std::size_t>(rng.below(c.size()));
      if (std::find(pick.begin(), pick.end(), i) == pick.end()) pick.push_back(i);
    }
    std::sort(pick.begin(), pick.end());
    auto v = first_violation(c, pick, query.L, threshold, query.mode, {}, opts);
    if (v) return v;
  }
  return std::nullopt;
}

RadiusResult exact_radius(const Code& c, std::size_t L, const VerifierOptions& opts) {
  if (L < 1) throw InputError("list size L must be at least 1");
  if (c.size() <= L) return {c.n(), std::nullopt};
  // Decodable at 0 (distinct words) and never at n; binary search the boundary.
  std::size_t lo = 0;
  std::size_t hi = c.n();
  std::optional<Violation> witness;
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    auto r = check_threshold(c, L, mid, DecodingMode::ordinary, opts);
    if (r.decodable) {
      lo = mid;
    } else {
      hi = mid;
      witness = std::move(r.violation);
    }
  }
  if (!witness) witness = check_threshold(c, L, hi, DecodingMode::ordinary, opts).violation;
  return {lo, std::move(witness)};
}

std::size_t neighborhood_count(const Code& c, const Word& center, std::size_t radius) {
  std::size_t count = 0;
  for (const auto& w : c.words()) count += hamming_distance(center, w) <= radius;
  return count;
}

ReplayResult replay_violation(const Code& c, const Violation& v) {
  if (v.center.size() != c.n()) return {false, "center has wrong length"};
  if (v.indices.size() < 2) return {false, "fewer than two codewords"};
  if (v.distances.size() != v.indices.size()) return {false, "distance list does not match index list"};
  for (std::size_t a = 0; a < v.indices.size(); ++a) {
    if (v.indices[a] >= c.size()) return {false, "index out of range"};
    for (std::size_t b = a + 1; b < v.indices.size(); ++b) {
      if (v.indices[a] == v.indices[b]) return {false, "repeated codeword index"};
    }
  }
  std::size_t total = 0;
  for (std::size_t a = 0; a < v.indices.size(); ++a) {
    const std::size_t d = hamming_distance(v.center, c[v.indices[a]]);
    if (d != v.distances[a]) return {false, "recorded distance differs from recomputed distance"};
    if (v.mode == DecodingMode::ordinary && d > v.threshold) return {false, "distance above threshold"};
    total += d;
  }
  if (v.mode == DecodingMode::average_radius && total > v.threshold) return {false, "total distance above threshold"};
  return {true, {}};
}

}  // namespace gsb
